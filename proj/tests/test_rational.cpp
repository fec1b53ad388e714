#include <doctest.h>

#include <random>

#include "dolce/rational.hpp"

using namespace dolce;

TEST_CASE("rational parsing accepts exact fractions only") {
    CHECK(*parse_rational("3") == Rational(3));
    CHECK(*parse_rational("-3") == Rational(-3));
    CHECK(*parse_rational("+7/2") == Rational(7, 2));
    CHECK(*parse_rational("4/6") == Rational(2, 3));  // canonicalized
    CHECK(!parse_rational("0.5"));
    CHECK(!parse_rational("1e3"));
    CHECK(!parse_rational(""));
    CHECK(!parse_rational("1/"));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("2/4x"));
}

TEST_CASE("denominators stay normalized through arithmetic") {
    Scalar a(Rational(2, 6), Rational(-4, 8));
    CHECK(a.re().get_den() == 3);
    CHECK(a.im().get_den() == 2);
    Scalar b = a * a + a.conj();
    CHECK(b.re().get_den() > 0);
    CHECK(gcd(b.re().get_num(), b.re().get_den()) == 1);
}

TEST_CASE("conjugation is an involution and |z|^2 is real") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (int t = 0; t < 200; ++t) {
        Scalar z(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        CHECK(z.conj().conj() == z);
        Scalar zz = z * z.conj();
        CHECK(zz.im() == 0);
        CHECK(zz.re() == z.norm2());
        if (!z.is_zero()) {
            Scalar inv = Scalar(1) / z;
            CHECK(z * inv == Scalar(1));
        }
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
    auto draw = [&] { return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))); };
    for (int t = 0; t < 100; ++t) {
        Scalar a = draw(), b = draw(), c = draw();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
    }
}

TEST_CASE("printing") {
    CHECK(to_string(Scalar(0)) == "0");
    CHECK(to_string(Scalar(Rational(1, 2))) == "1/2");
    CHECK(to_string(Scalar(Rational(0), Rational(1))) == "i");
    CHECK(to_string(Scalar(Rational(0), Rational(-1))) == "-i");
    CHECK(to_string(Scalar(Rational(1), Rational(-3, 4))) == "1-3/4i");
}
