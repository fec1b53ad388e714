#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace dolce {

/// Thrown on violated internal invariants (exact arithmetic makes these hard errors).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" with q > 0 after normalization. Anything else
/// (decimal points, exponents, empty strings) yields nullopt.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& x);

/// Exact Gaussian rational re + im*i, the coefficient field of the engine.
/// GMP keeps both parts canonical (gcd 1, positive denominator).
/// Returns x in canonical form (gcd 1, positive denominator). GMP arithmetic
/// preserves canonical form but two-argument construction does not; every
/// ingestion point goes through here.
inline Rational canonical(Rational x) {
    x.canonicalize();
    return x;
}

class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(Rational re) : re_(canonical(std::move(re))), im_(0) {}
    GaussianRational(Rational re, Rational im)
        : re_(canonical(std::move(re))), im_(canonical(std::move(im))) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 = z * conj(z), always a plain rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw internal_error("division by zero Gaussian rational");
        Rational n = o.norm2();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  private:
    Rational re_, im_;
};

using Scalar = GaussianRational;

std::string to_string(const Scalar& z);
std::ostream& operator<<(std::ostream& os, const Scalar& z);

}  // namespace dolce
