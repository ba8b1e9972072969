#pragma once

#include "specpol/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace specpol {

/// Dense univariate polynomial over the rationals in a single variable x.
/// Coefficients are stored in ascending order of the exponent and the top
/// stored coefficient is nonzero; the zero polynomial stores nothing and is
/// the only polynomial without a degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(std::vector<Rational> ascending_coeffs);

    /// The polynomial x.
    static Poly variable();
    /// c * x^k.
    static Poly monomial(Rational c, int k);
    /// gamma * (x - r)^k, expanded.
    static Poly linear_power(const Rational& gamma, const Rational& r, int k);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// nullopt for the zero polynomial.
    std::optional<int> degree() const;

    /// Coefficient of x^k; zero outside the stored range.
    Rational coeff(int k) const;
    /// Leading coefficient. Throws std::domain_error on the zero polynomial.
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& p, const Rational& s);
    friend Poly operator*(const Rational& s, const Poly& p) { return p * s; }
    /// Scalar division. Throws std::domain_error when s == 0.
    friend Poly operator/(const Poly& p, const Rational& s);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    /// p / leading(p). Throws std::domain_error on the zero polynomial.
    Poly monic() const;
    /// x^deg(p) * p(1/x): the coefficient list reversed and retrimmed.
    /// Trailing zero coefficients of p (roots at x = 0) do not survive the
    /// round trip; callers tracking powers of x must account for them.
    Poly reversed() const;
    Poly pow(unsigned e) const;
    Rational eval(const Rational& at) const;

    /// Positive lcm of the coefficient denominators (1 for the zero polynomial).
    Integer denominator_lcm() const;

    /// Human readable form, highest power first, e.g. "x^3 - 1/2x + 4".
    std::string str() const;

private:
    std::vector<Rational> c_;
    void trim();
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division p = q*d + r with r == 0 or deg r < deg d.
/// Throws std::domain_error when d == 0.
DivRem divrem(const Poly& p, const Poly& d);

/// Monic gcd computed with a primitive pseudo-remainder sequence over the
/// integers. gcd(p, 0) = monic(p); both arguments zero is a domain error.
Poly gcd(const Poly& p, const Poly& q);

/// True when gcd(p, q) is a nonzero constant. Tries a modular certificate
/// first and falls back to the exact gcd, so it is cheap on coprime inputs.
bool coprime(const Poly& p, const Poly& q);

/// f written as gamma * (x - r)^k when it has that shape.
struct LinearPower {
    Rational gamma;
    Rational root;
    int k = 0;
};

/// Detects f == gamma * (x - r)^k with k >= 1 via the radical f / gcd(f, f').
/// Returns nullopt for any other shape; the result is re-expanded and compared
/// exactly before it is returned. Throws std::invalid_argument when f is zero
/// or constant.
std::optional<LinearPower> linear_power_detect(const Poly& f);

/// Orders by degree (zero polynomial first), then coefficients from x^0 up.
bool poly_less(const Poly& a, const Poly& b);

namespace detail {

/// Multiplication with the algorithm pinned, bypassing the size threshold.
/// Used by the equivalence tests and the crossover benchmark; results are
/// bit-identical to operator*.
Poly mul_schoolbook(const Poly& a, const Poly& b);
Poly mul_karatsuba(const Poly& a, const Poly& b);

/// Karatsuba with an explicit recursion floor: splits recurse until the
/// shorter factor drops below min_size, then schoolbook finishes. Lets the
/// benchmark compare candidate floors against the production setting.
Poly mul_blended(const Poly& a, const Poly& b, std::size_t min_size);

}  // namespace detail

}  // namespace specpol
