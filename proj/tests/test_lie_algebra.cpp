#include <doctest.h>

#include "dolce/lie_algebra.hpp"

using namespace dolce;

namespace {

LieAlgebraSpec sol3_spec() {
    LieAlgebraSpec spec;
    spec.dim = 4;
    spec.name = "sol3";
    std::vector<Rational> c12(4, Rational(0)), c13(4, Rational(0));
    c12[1] = 1;   // [e1,e2] = e2
    c13[2] = -1;  // [e1,e3] = -e3
    spec.set_bracket(0, 1, c12);
    spec.set_bracket(0, 2, c13);
    return spec;
}

LieAlgebraSpec g_alpha_spec(long a2, long a3, long a4) {
    LieAlgebraSpec spec;
    spec.dim = 4;
    spec.name = "G(alpha)";
    for (int j = 1; j < 4; ++j) {
        std::vector<Rational> c(4, Rational(0));
        c[j] = (j == 1) ? a2 : (j == 2 ? a3 : a4);
        spec.set_bracket(0, j, c);
    }
    return spec;
}

Mono mono_of(std::initializer_list<int> indices_1based) {
    Mono m = 0;
    for (int i : indices_1based) m |= Mono(1) << (i - 1);
    return m;
}

}  // namespace

TEST_CASE("validation") {
    LieAlgebraSpec abelian;
    abelian.dim = 4;
    CHECK(validate_lie_algebra(abelian).ok());

    CHECK(validate_lie_algebra(sol3_spec()).ok());

    // tampered constants: [e1,e2] = e3, [e1,e3] = e2, [e2,e3] = e2
    LieAlgebraSpec bad;
    bad.dim = 4;
    std::vector<Rational> c12(4, Rational(0)), c13(4, Rational(0)), c23(4, Rational(0));
    c12[2] = 1;
    c13[1] = 1;
    c23[1] = 1;
    bad.set_bracket(0, 1, c12);
    bad.set_bracket(0, 2, c13);
    bad.set_bracket(1, 2, c23);
    ValidationReport report = validate_lie_algebra(bad);
    CHECK(!report.ok());
    bool found_triple = false;
    for (const auto& issue : report.issues)
        if (issue.code == "jacobi" && issue.detail.find("(1,2,3)") != std::string::npos)
            found_triple = true;
    CHECK(found_triple);
}

TEST_CASE("differential on 1-forms and 2-forms of sol3 x R") {
    ExteriorAlgebra alg(4);
    LieAlgebraSpec spec = sol3_spec();
    CeDifferential d = ce_differential(alg, spec);

    // de1 = 0, de2 = -e12, de3 = e13, de4 = 0
    const Mat& d1 = d.at(1);
    auto col = [&](int j) {
        FormVector f(alg);
        for (std::size_t r = 0; r < alg.basis(2).size(); ++r)
            f.add_term(alg.basis(2)[r], d1.at(static_cast<int>(r), j));
        return f;
    };
    CHECK(col(0).is_zero());
    CHECK(col(1) == FormVector::monomial(alg, mono_of({1, 2}), Scalar(-1)));
    CHECK(col(2) == FormVector::monomial(alg, mono_of({1, 3}), Scalar(1)));
    CHECK(col(3).is_zero());

    // degree 2: d e24 = -e124, d e34 = e134, d = 0 on e12, e13, e14, e23
    const Mat& d2 = d.at(2);
    auto col2 = [&](Mono mono) {
        FormVector f(alg);
        int j = alg.index_in_degree(mono);
        for (std::size_t r = 0; r < alg.basis(3).size(); ++r)
            f.add_term(alg.basis(3)[r], d2.at(static_cast<int>(r), j));
        return f;
    };
    CHECK(col2(mono_of({2, 4})) == FormVector::monomial(alg, mono_of({1, 2, 4}), Scalar(-1)));
    CHECK(col2(mono_of({3, 4})) == FormVector::monomial(alg, mono_of({1, 3, 4}), Scalar(1)));
    for (auto idx : {mono_of({1, 2}), mono_of({1, 3}), mono_of({1, 4}), mono_of({2, 3})})
        CHECK(col2(idx).is_zero());
}

TEST_CASE("differential of G(alpha) with alpha = (1,1,-2)") {
    ExteriorAlgebra alg(4);
    CeDifferential d = ce_differential(alg, g_alpha_spec(1, 1, -2));
    const Mat& d1 = d.at(1);
    // de2 = -e12, de3 = -e13, de4 = 2 e14
    CHECK(d1.at(alg.index_in_degree(mono_of({1, 2})), 1) == Scalar(-1));
    CHECK(d1.at(alg.index_in_degree(mono_of({1, 3})), 2) == Scalar(-1));
    CHECK(d1.at(alg.index_in_degree(mono_of({1, 4})), 3) == Scalar(2));
}

TEST_CASE("unimodularity") {
    UnimodularityReport sol3 = unimodularity(sol3_spec());
    CHECK(sol3.unimodular);
    for (const auto& t : sol3.traces) CHECK(t == 0);

    UnimodularityReport g = unimodularity(g_alpha_spec(1, 1, -2));
    CHECK(g.unimodular);

    // affine algebra [e1,e2] = e2 padded with two abelian generators
    LieAlgebraSpec affine;
    affine.dim = 4;
    std::vector<Rational> c(4, Rational(0));
    c[1] = 1;
    affine.set_bracket(0, 1, c);
    UnimodularityReport a = unimodularity(affine);
    CHECK(!a.unimodular);
    CHECK(a.traces[0] == 1);
    CHECK(a.traces[1] == 0);
}

TEST_CASE("de Rham cohomology") {
    ExteriorAlgebra alg(4);

    CeDifferential d_sol3 = ce_differential(alg, sol3_spec());
    DeRhamCohomology sol3 = de_rham(alg, d_sol3);
    CHECK(sol3.betti == std::vector<int>{1, 2, 2, 2, 1});
    CHECK(sol3.euler_characteristic == 0);
    // representatives of H^2 span <e14, e23> modulo exact forms
    Subspace span = Subspace::span_rows([&] {
        Mat rows(2, 6);
        rows.set_row(0, sol3.groups[2].representatives[0].degree_coords(2));
        rows.set_row(1, sol3.groups[2].representatives[1].degree_coords(2));
        return rows;
    }());
    FormVector e14 = FormVector::monomial(alg, mono_of({1, 4}));
    FormVector e23 = FormVector::monomial(alg, mono_of({2, 3}));
    CHECK(span.contains(e14.degree_coords(2)));
    CHECK(span.contains(e23.degree_coords(2)));

    CeDifferential d_g = ce_differential(alg, g_alpha_spec(1, 1, -2));
    DeRhamCohomology g = de_rham(alg, d_g);
    CHECK(g.betti == std::vector<int>{1, 1, 0, 1, 1});
    CHECK(g.euler_characteristic == 0);

    LieAlgebraSpec abelian;
    abelian.dim = 4;
    CeDifferential d_ab = ce_differential(alg, abelian);
    CHECK(de_rham(alg, d_ab).betti == std::vector<int>{1, 4, 6, 4, 1});
}

TEST_CASE("b0 = 1 always and b_top detects unimodularity") {
    ExteriorAlgebra alg(4);
    for (auto spec : {sol3_spec(), g_alpha_spec(1, 1, -2), g_alpha_spec(1, 2, -3)}) {
        DeRhamCohomology dr = de_rham(alg, ce_differential(alg, spec));
        CHECK(dr.betti[0] == 1);
        CHECK((dr.betti[4] == 1) == unimodularity(spec).unimodular);
        if (unimodularity(spec).unimodular)
            for (int k = 0; k <= 4; ++k) CHECK(dr.betti[k] == dr.betti[4 - k]);
    }
    LieAlgebraSpec affine;
    affine.dim = 4;
    std::vector<Rational> c(4, Rational(0));
    c[1] = 1;
    affine.set_bracket(0, 1, c);
    DeRhamCohomology dr = de_rham(alg, ce_differential(alg, affine));
    CHECK(dr.betti[0] == 1);
    CHECK(dr.betti[4] == 0);
}
