#include "specpol/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace specpol {

namespace {

using ZVec = std::vector<Integer>;

// Size of the shorter factor below which schoolbook multiplication wins.
// Measured on the build machine with tools/bench_poly_mul: mpz_addmul keeps
// schoolbook ahead of fully recursive Karatsuba well past size 256, but with
// the recursion stopping here the split pays from roughly this size upward
// at every coefficient width tried (about 2.6x at size 512 with 1024 bit
// coefficients); see README.md for the table.
constexpr std::size_t kKaratsubaMinSize = 64;

ZVec school_mul(const ZVec& a, const ZVec& b) {
    ZVec out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

ZVec zvec_slice(const ZVec& v, std::size_t from, std::size_t to) {
    if (from >= v.size()) return {};
    to = std::min(to, v.size());
    return ZVec(v.begin() + from, v.begin() + to);
}

ZVec zvec_add(const ZVec& a, const ZVec& b) {
    ZVec out(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

void zvec_accumulate(ZVec& out, const ZVec& part, std::size_t offset) {
    for (std::size_t i = 0; i < part.size(); ++i) out[offset + i] += part[i];
}

void zvec_subtract(ZVec& out, const ZVec& part) {
    for (std::size_t i = 0; i < part.size(); ++i) out[i] -= part[i];
}

void zvec_trim(ZVec& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

// Karatsuba on integer coefficient vectors; below min_size it falls through
// to schoolbook. The split point is taken from the longer operand, so a short
// high part (possibly empty) is handled by the recursion itself; results are
// bit-identical to schoolbook.
ZVec kara_mul(const ZVec& a, const ZVec& b, std::size_t min_size) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) < min_size) return school_mul(a, b);

    const std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    const ZVec a0 = zvec_slice(a, 0, h), a1 = zvec_slice(a, h, a.size());
    const ZVec b0 = zvec_slice(b, 0, h), b1 = zvec_slice(b, h, b.size());

    ZVec z0 = kara_mul(a0, b0, min_size);
    ZVec z2 = kara_mul(a1, b1, min_size);
    ZVec z1 = kara_mul(zvec_add(a0, a1), zvec_add(b0, b1), min_size);
    zvec_subtract(z1, z0);
    zvec_subtract(z1, z2);
    // The subtraction leaves exact zero slots at the top of z1 whenever the
    // shorter operand fits inside one half; drop them or the shifted
    // accumulate below runs past the end of out.
    zvec_trim(z1);

    ZVec out(a.size() + b.size() - 1, Integer(0));
    zvec_accumulate(out, z0, 0);
    zvec_accumulate(out, z1, h);
    zvec_accumulate(out, z2, 2 * h);
    return out;
}

// Coefficients scaled by the denominator lcm, as integers.
ZVec scale_to_integers(const std::vector<Rational>& c, const Integer& lcm) {
    ZVec out;
    out.reserve(c.size());
    for (const Rational& r : c) {
        Integer t;
        mpz_divexact(t.get_mpz_t(), lcm.get_mpz_t(), r.den().get_mpz_t());
        out.push_back(t * r.num());
    }
    return out;
}

Integer zvec_content(const ZVec& v) {
    Integer g(0);
    for (const Integer& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divides by the content and normalises the leading sign to positive.
void zvec_make_primitive(ZVec& v) {
    zvec_trim(v);
    if (v.empty()) return;
    Integer g = zvec_content(v);
    if (sgn(v.back()) < 0) g = -g;
    if (g == 1) return;
    for (Integer& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZVec to_z_primitive(const Poly& p) {
    ZVec v = scale_to_integers(p.coeffs(), p.denominator_lcm());
    zvec_make_primitive(v);
    return v;
}

// Pseudo-remainder of A by B (deg A >= deg B >= 1): repeatedly replaces A by
// lead(B)*A - lead(A)*x^k*B until the degree drops below deg B.
ZVec pseudo_rem(ZVec R, const ZVec& B) {
    const Integer& lb = B.back();
    while (R.size() >= B.size()) {
        Integer lr = R.back();
        R.pop_back();
        for (Integer& c : R) c *= lb;
        const std::size_t offset = R.size() + 1 - B.size();
        for (std::size_t j = 0; j + 1 < B.size(); ++j)
            mpz_submul(R[offset + j].get_mpz_t(), lr.get_mpz_t(), B[j].get_mpz_t());
        zvec_trim(R);
    }
    return R;
}

// One-sided modular coprimality certificate. All moduli are primes; a gcd of
// degree zero mod p certifies coprimality over Q whenever p divides neither
// leading coefficient.
constexpr std::uint64_t kCertPrimes[] = {2305843009213693951ULL,  // 2^61 - 1
                                         1000000007ULL, 998244353ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> zvec_mod(const ZVec& v, std::uint64_t p) {
    std::vector<std::uint64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = mpz_fdiv_ui(v[i].get_mpz_t(), p);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

int fp_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                  std::uint64_t p) {
    while (!b.empty()) {
        // a mod b, in place
        const std::uint64_t inv_lead = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            const std::uint64_t t = mulmod(a.back(), inv_lead, p);
            const std::size_t offset = a.size() - b.size();
            if (t != 0)
                for (std::size_t j = 0; j + 1 < b.size(); ++j) {
                    const std::uint64_t s = mulmod(t, b[j], p);
                    a[offset + j] = a[offset + j] >= s ? a[offset + j] - s
                                                       : a[offset + j] + p - s;
                }
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    trim();
}

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(Rational c, int k) {
    if (k < 0) throw std::invalid_argument("monomial with negative exponent");
    if (c.is_zero()) return {};
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
}

Poly Poly::linear_power(const Rational& gamma, const Rational& r, int k) {
    if (k < 0) throw std::invalid_argument("linear_power with negative exponent");
    Poly base({-r, Rational(1)});
    return base.pow(static_cast<unsigned>(k)) * gamma;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Rational Poly::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (Rational& c : out.c_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

namespace {

Poly mul_pipeline(const Poly& a, const Poly& b, std::size_t min_size) {
    if (a.is_zero() || b.is_zero()) return {};
    const Integer da = a.denominator_lcm(), db = b.denominator_lcm();
    const ZVec za = scale_to_integers(a.coeffs(), da);
    const ZVec zb = scale_to_integers(b.coeffs(), db);
    ZVec zc = kara_mul(za, zb, min_size);
    const Integer d = da * db;
    std::vector<Rational> out;
    out.reserve(zc.size());
    for (Integer& z : zc) out.emplace_back(z, d);
    return Poly(std::move(out));
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    return mul_pipeline(a, b, kKaratsubaMinSize);
}

namespace detail {

Poly mul_schoolbook(const Poly& a, const Poly& b) {
    return mul_pipeline(a, b, static_cast<std::size_t>(-1));
}

Poly mul_karatsuba(const Poly& a, const Poly& b) {
    return mul_pipeline(a, b, 2);
}

Poly mul_blended(const Poly& a, const Poly& b, std::size_t min_size) {
    return mul_pipeline(a, b, min_size);
}

}  // namespace detail

Poly operator*(const Poly& p, const Rational& s) {
    if (s.is_zero()) return {};
    Poly out = p;
    for (Rational& c : out.c_) c *= s;
    return out;
}

Poly operator/(const Poly& p, const Rational& s) {
    if (s.is_zero()) throw std::domain_error("polynomial division by zero scalar");
    return p * s.inv();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> out;
    out.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        out.push_back(c_[k] * Rational(static_cast<long>(k)));
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    return *this / leading();
}

Poly Poly::reversed() const {
    std::vector<Rational> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
}

Poly Poly::pow(unsigned e) const {
    Poly result{Rational(1)};
    Poly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        if (e >>= 1) base *= base;
    }
    return result;
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Integer Poly::denominator_lcm() const {
    Integer l(1);
    for (const Rational& c : c_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    return l;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (first) {
            if (c.is_negative()) os << '-';
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        const Rational a = c.abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str();
            os << 'x';
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

DivRem divrem(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p.is_zero() || *p.degree() < *d.degree()) return {Poly{}, p};

    const int dp = *p.degree(), dd = *d.degree();
    const Rational inv_lead = d.leading().inv();
    const std::vector<Rational>& dc = d.coeffs();
    std::vector<Rational> r = p.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(dp - dd) + 1, Rational(0));

    for (int k = dp - dd; k >= 0; --k) {
        Rational t = r[static_cast<std::size_t>(k + dd)] * inv_lead;
        if (t.is_zero()) continue;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k + j)] -= t * dc[static_cast<std::size_t>(j)];
        q[static_cast<std::size_t>(k)] = std::move(t);
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();

    ZVec a = to_z_primitive(p), b = to_z_primitive(q);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return Poly(Rational(1));
        ZVec r = pseudo_rem(std::move(a), b);
        zvec_make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }

    std::vector<Rational> out;
    out.reserve(a.size());
    for (const Integer& c : a) out.emplace_back(c, a.back());
    return Poly(std::move(out));
}

bool coprime(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("gcd of two zero polynomials");
    if (p.is_zero()) return q.is_constant();
    if (q.is_zero()) return p.is_constant();
    if (p.is_constant() || q.is_constant()) return true;

    const ZVec za = to_z_primitive(p), zb = to_z_primitive(q);
    for (std::uint64_t prime : kCertPrimes) {
        if (mpz_fdiv_ui(za.back().get_mpz_t(), prime) == 0) continue;
        if (mpz_fdiv_ui(zb.back().get_mpz_t(), prime) == 0) continue;
        if (fp_gcd_degree(zvec_mod(za, prime), zvec_mod(zb, prime), prime) == 0)
            return true;
    }
    return *gcd(p, q).degree() == 0;
}

std::optional<LinearPower> linear_power_detect(const Poly& f) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("linear_power_detect needs deg f >= 1");

    const int d = *f.degree();
    Poly radical;
    if (d == 1) {
        radical = f;
    } else {
        const Poly g = gcd(f, f.derivative());
        if (g.degree() != d - 1) return std::nullopt;
        auto [quot, rem] = divrem(f, g);
        if (!rem.is_zero() || quot.degree() != 1) return std::nullopt;
        radical = std::move(quot);
    }

    const Rational gamma = f.leading();
    const Rational root = -radical.coeff(0) / radical.coeff(1);
    if (Poly::linear_power(gamma, root, d) != f) return std::nullopt;
    return LinearPower{gamma, root, d};
}

bool poly_less(const Poly& a, const Poly& b) {
    const auto da = a.degree(), db = b.degree();
    if (!da || !db) {
        if (!da && !db) return false;
        return !da;
    }
    if (*da != *db) return *da < *db;
    for (int k = 0; k <= *da; ++k) {
        const Rational ca = a.coeff(k), cb = b.coeff(k);
        if (ca != cb) return ca < cb;
    }
    return false;
}

}  // namespace specpol
