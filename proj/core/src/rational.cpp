#include "dolce/rational.hpp"

#include <cctype>
#include <ostream>

namespace dolce {

std::optional<Rational> parse_rational(const std::string& text) {
    // grammar: [+-] digits [ "/" digits ] with nonzero denominator
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) return std::nullopt;
    std::string num = text.substr(num_begin, pos - num_begin);
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') return std::nullopt;
        ++pos;
        std::size_t den_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size()) return std::nullopt;
        den = text.substr(den_begin);
    }
    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    return canonical(Rational(n, d));
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Scalar& z) {
    if (z.is_zero()) return "0";
    std::string out;
    if (z.re() != 0) out = to_string(z.re());
    if (z.im() != 0) {
        std::string im;
        if (z.im() == 1)
            im = "i";
        else if (z.im() == -1)
            im = "-i";
        else
            im = to_string(z.im()) + "i";
        if (out.empty())
            out = im;
        else if (im[0] == '-')
            out += im;
        else
            out += "+" + im;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& z) { return os << to_string(z); }

}  // namespace dolce
