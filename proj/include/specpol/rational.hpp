#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace specpol {

/// Arbitrary precision integer (GMP).
using Integer = mpz_class;

/// Exact rational number. Always stored reduced with a positive denominator;
/// integers are n/1 and zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : q_(n) {}

    /// n/d, reduced. Throws std::domain_error when d == 0.
    Rational(const Integer& n, const Integer& d);
    Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}

    /// Parses "n" or "n/d" with an optional leading sign.
    /// Throws std::invalid_argument on malformed input or a zero denominator.
    static Rational from_string(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// Multiplicative inverse. Throws std::domain_error on zero.
    Rational inv() const;

    /// "n" for integers, "n/d" otherwise.
    std::string str() const { return q_.get_str(); }

    /// Internal GMP value; used by the polynomial layer for coefficient access.
    const mpq_class& raw() const { return q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// base^e with e >= 0.
Rational pow(const Rational& base, unsigned long e);

/// Exact square root when the argument is a square of a rational, otherwise nullopt.
std::optional<Rational> sqrt_exact(const Rational& r);

}  // namespace specpol
