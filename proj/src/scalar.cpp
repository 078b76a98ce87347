#include "lieq/scalar.hpp"

#include <cctype>
#include <ostream>

#include "lieq/errors.hpp"

namespace lieq {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

[[noreturn]] void bad_token(std::string_view token, const char* why) {
    throw ParseError("", 0, std::string(token), why);
}

} // namespace

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0)
        throw DivisionByZero();
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        bad_token(text, "malformed rational");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        bad_token(text, "zero denominator");
    if (negative)
        n = -n;
    return Rational(n, d);
}

bool Rational::is_canonical() const {
    const mpz_class& n = value_.get_num();
    const mpz_class& d = value_.get_den();
    if (d <= 0)
        return false;
    if (n == 0)
        return d == 1;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return g == 1;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    return from_mpq(1 / value_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::parse(std::string_view token) {
    if (token.empty())
        bad_token(token, "empty scalar");
    for (char c : token)
        if (std::isspace(static_cast<unsigned char>(c)))
            bad_token(token, "whitespace inside scalar");

    // Split into at most two signed terms; a sign at position 0 belongs to the
    // first term.
    std::size_t split = std::string_view::npos;
    for (std::size_t p = 1; p < token.size(); ++p) {
        if (token[p] == '+' || token[p] == '-') {
            if (split != std::string_view::npos)
                bad_token(token, "too many terms in scalar");
            split = p;
        }
    }
    std::string_view terms[2] = {token.substr(0, split),
                                 split == std::string_view::npos ? std::string_view()
                                                                 : token.substr(split)};

    Rational re;
    Rational im;
    bool have_re = false;
    bool have_im = false;
    for (std::string_view term : terms) {
        if (term.empty())
            continue;
        bool negative = false;
        std::string_view body = term;
        if (body.front() == '+' || body.front() == '-') {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        bool imaginary = false;
        Rational value;
        if (body == "i") {
            imaginary = true;
            value = Rational(1);
        } else if (body.size() > 2 && body.substr(body.size() - 2) == "*i") {
            imaginary = true;
            value = Rational::parse(body.substr(0, body.size() - 2));
        } else {
            value = Rational::parse(body);
        }
        if (negative)
            value = -value;
        if (imaginary) {
            if (have_im)
                bad_token(token, "duplicate imaginary part");
            have_im = true;
            im = value;
        } else {
            if (have_re || have_im)
                bad_token(token, "real part must come first");
            have_re = true;
            re = value;
        }
    }
    return {re, im};
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero())
        return re_.to_string();
    std::string imag;
    const Rational mag = im_.sign() < 0 ? -im_ : im_;
    imag = mag == Rational(1) ? std::string("i") : mag.to_string() + "*i";
    if (re_.is_zero())
        return (im_.sign() < 0 ? "-" : "") + imag;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }
std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

} // namespace lieq
