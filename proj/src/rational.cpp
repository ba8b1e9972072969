#include "specpol/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace specpol {

Rational::Rational(const Integer& n, const Integer& d) : q_() {
    if (sgn(d) == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    mpq_class q;
    // mpq_class(string) accepts "n" and "n/d" and throws std::invalid_argument
    // on anything else; it does not reduce and permits a zero denominator.
    q = mpq_class(std::string(text));
    if (sgn(mpz_class(q.get_den())) == 0)
        throw std::invalid_argument("rational literal with zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
}

Rational pow(const Rational& base, unsigned long e) {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.raw().get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.raw().get_den_mpz_t(), e);
    // num/den are already coprime, so their powers are as well.
    return Rational(out.get_num(), out.get_den());
}

std::optional<Rational> sqrt_exact(const Rational& r) {
    if (r.is_negative()) return std::nullopt;
    Integer n = r.num(), d = r.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(sn, sd);
}

}  // namespace specpol
