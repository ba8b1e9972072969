#pragma once

#include "specpol/poly.hpp"

namespace specpol {

/// Quotient of two polynomials, kept in canonical form: numerator and
/// denominator coprime, denominator monic, zero represented as 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}

    /// num/den, reduced. Throws std::domain_error when den == 0.
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws std::domain_error when b == 0.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    /// Quotient rule; result is reduced.
    RationalFunction derivative() const;

    std::string str() const;

private:
    Poly num_;
    Poly den_;
    void reduce();
};

}  // namespace specpol
