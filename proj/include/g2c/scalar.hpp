#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace g2c {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Gaussian rational a + b*i with exact arbitrary-precision components.
/// This is the coefficient field for everything in the library; no
/// operation on Scalar ever rounds.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}                   // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    Scalar(long num, long den) : re_(den < 0 ? Rational(-num, -den) : Rational(num, den)), im_(0) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    /// Squared modulus re^2 + im^2, an exact nonnegative rational.
    Rational norm2() const { return static_cast<Rational>(re_ * re_ + im_ * im_); }

    Scalar operator-() const { return Scalar(static_cast<Rational>(-re_), static_cast<Rational>(-im_)); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        // real-only fast paths carry almost all of the load
        if (im_ == 0) {
            if (o.im_ == 0) {
                re_ *= o.re_;
            } else {
                im_ = static_cast<Rational>(re_ * o.im_);
                re_ *= o.re_;
            }
            return *this;
        }
        if (o.im_ == 0) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        Rational r = static_cast<Rational>(re_ * o.re_ - im_ * o.im_);
        Rational i = static_cast<Rational>(re_ * o.im_ + im_ * o.re_);
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const {
        Rational n = norm2();
        if (n == 0) throw std::domain_error("Scalar: division by zero");
        return Scalar(static_cast<Rational>(re_ / n), static_cast<Rational>(-im_ / n));
    }

    std::complex<double> to_complex() const {
        return {re_.convert_to<double>(), im_.convert_to<double>()};
    }

    /// Serializes as "p/q", "p/q+r/s*i", "r/s*i", ... ("/1" is omitted).
    std::string str() const;

    /// Parses the formats produced by str(), plus "i", "-i" and plain integers.
    static Scalar parse(const std::string& text);

private:
    Rational re_, im_;
};

/// Artifact-wide total order on scalars: by squared modulus, then real
/// part, then imaginary part. Used wherever a deterministic canonical
/// representative must be picked from a finite orbit.
bool scalar_less(const Scalar& a, const Scalar& b);

/// Exact square root of a nonnegative rational, if it exists in Q.
std::optional<Rational> sqrt_exact(const Rational& q);

/// Principal square root of s, if it exists inside Q(i).
std::optional<Scalar> sqrt_exact(const Scalar& s);

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& text);

}  // namespace g2c
