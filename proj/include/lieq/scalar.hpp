#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lieq {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// The value is always canonical: denominator > 0, gcd(|num|, den) = 1 and
/// zero is 0/1. Canonical form is established on construction, so equality
/// is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);

    /// Parses `a` or `a/b` (optional leading sign, decimal digits only).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    bool is_canonical() const;

    Rational inverse() const;

    Rational operator-() const { return from_mpq(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// `a` for integers, `a/b` otherwise.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

private:
    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    mpq_class value_;
};

/// Element a + b*i of the Gaussian rationals Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Parses the scalar token syntax: `a/b`, `a`, `i`, `-i`, `a/b*i`,
    /// `a/b+c/d*i`. No whitespace is allowed inside a token.
    static GaussianRational parse(std::string_view token);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_imaginary() const { return re_.is_zero(); }
    bool is_canonical() const { return re_.is_canonical() && im_.is_canonical(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// Throws DivisionByZero for zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    /// Total order (real part first); only used to make output deterministic.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        if (auto c = a.re_ <=> b.re_; c != 0)
            return c;
        return a.im_ <=> b.im_;
    }

    /// Inverse of parse(): prints the canonical token.
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using Scalar = GaussianRational;

} // namespace lieq
