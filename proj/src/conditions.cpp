#include "specpol/conditions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace specpol {

ResidualReport star_residual(const Poly& f, const Poly& g) {
    const Poly fp = f.derivative();
    const Poly gp = g.derivative();
    Poly res = f * fp.derivative() - fp * fp;
    res += (fp * g) * Rational(3);
    res -= (f * gp) * Rational(2);
    res -= (g * g) * Rational(2);
    const bool ok = res.is_zero();
    return {std::move(res), Rational(0), ok};
}

ResidualReport modified_residual(const Poly& f, const Poly& g, const Rational& beta) {
    ResidualReport report = star_residual(f, g);
    report.residual += f * (beta * Rational(2));
    report.beta = beta;
    report.satisfied = report.residual.is_zero();
    return report;
}

std::vector<Poly> theorem2_solutions(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("theorem2_solutions needs f != 0");

    std::vector<Poly> out;
    out.push_back(f.derivative() / Rational(2));
    if (!f.is_constant())
        if (auto lp = linear_power_detect(f))
            out.push_back(Poly::linear_power(lp->gamma, lp->root, lp->k - 1));

    for (const Poly& g : out)
        if (!star_residual(f, g).satisfied)
            throw std::logic_error("theorem2 closed form failed re-verification");

    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly g_from_u(const Poly& u, const Poly& f) {
    return u + f.derivative() / Rational(2);
}

namespace {

Poly riccati_residual(const Poly& f, const Rational& beta, const Poly& u) {
    return f * u.derivative() - (f.derivative() / Rational(2)) * u + u * u - f * beta;
}

void add_solution(RiccatiSolutionSet& out, const Poly& f, const Rational& beta,
                  Poly u) {
    if (!riccati_residual(f, beta, u).is_zero())
        throw std::logic_error("riccati_descent produced a non-solution");
    out.solutions.push_back(std::move(u));
}

// Coefficient of x^t in  f u' - (f'/2) u + u^2 - beta f  where u has
// candidate degree m and coefficients U_0..U_m are polynomials in a single
// parameter theta (constants when no parameter is in play). Coefficients that
// are still undetermined hold zero; the descent order guarantees they cannot
// occur in any equation inspected before they are fixed.
Poly residual_coeff(const Poly& f, const Rational& beta, int t,
                    const std::vector<Poly>& u_coeffs) {
    const int d = *f.degree();
    const int m = static_cast<int>(u_coeffs.size()) - 1;
    Poly e;
    for (int j = 0; j <= m; ++j) {
        const int a = t + 1 - j;
        if (a < 0 || a > d) continue;
        // f u' contributes j*f_a, (f'/2) u contributes (a/2)*f_a
        const Rational c = f.coeff(a) * (Rational(j) - Rational(a) / Rational(2));
        if (!c.is_zero()) e += u_coeffs[static_cast<std::size_t>(j)] * c;
    }
    for (int p = std::max(0, t - m); p <= std::min(m, t); ++p)
        e += u_coeffs[static_cast<std::size_t>(p)] * u_coeffs[static_cast<std::size_t>(t - p)];
    e -= Poly(beta * f.coeff(t));
    return e;
}

std::string branch_label(int m, bool parametric) {
    std::string s = "deg u = " + std::to_string(m);
    if (parametric) s += " (parametric)";
    return s;
}

// Walks the residual coefficients of one degree-m candidate from exponent t
// downward, fixing one unknown per equation. Branches (at most two ways, at
// the top unknown only) recurse; everything else is iterative. theta_index is
// the index of the coefficient held by the parameter theta, -1 when none; at
// most one equation per branch can degenerate, because the linear multiplier
// of the unknown at equation t is f_d*(j - d/2) plus at most one fixed
// constant, which vanishes for a single j only.
void descend(const Poly& f, const Rational& beta, int m, int t,
             std::vector<Poly> u_coeffs, std::vector<bool> is_set,
             int theta_index, std::vector<std::pair<Poly, int>> constraints,
             RiccatiSolutionSet& out) {
    const int d = *f.degree();

    for (; t >= 0; --t) {
        const int j = t - (d - 1);
        if (j >= 0 && j <= m && !is_set[static_cast<std::size_t>(j)]) {
            // Probe the equation at three values to split it as
            // c2*U_j^2 + c1*U_j + c0 over Q[theta].
            auto probe = [&](long v) {
                u_coeffs[static_cast<std::size_t>(j)] = Poly(Rational(v));
                return residual_coeff(f, beta, t, u_coeffs);
            };
            const Poly e0 = probe(0), e1 = probe(1), e2 = probe(2);
            u_coeffs[static_cast<std::size_t>(j)] = Poly();
            const Poly c2 = (e2 - e1 * Rational(2) + e0) / Rational(2);
            const Poly c1 = e1 - e0 - c2;
            const Poly& c0 = e0;

            if (!c2.is_zero()) {
                // A squared unknown only happens for the top coefficient of a
                // branch with m == d-1 (the self-pair U_m^2), never alongside
                // the parameter.
                if (c2 != Poly(Rational(1)) || j != m || theta_index >= 0 ||
                    !c1.is_constant() || !c0.is_constant())
                    throw std::logic_error("descent: unexpected quadratic shape");
                const Rational b = c1.coeff(0), c = c0.coeff(0);
                const auto disc = sqrt_exact(b * b - c * Rational(4));
                if (!disc) {
                    out.contradictions.push_back({branch_label(m, false), t});
                    return;
                }
                std::vector<Rational> branch_roots{(-b + *disc) / Rational(2)};
                if (!disc->is_zero()) branch_roots.push_back((-b - *disc) / Rational(2));
                bool viable = false;
                for (const Rational& root : branch_roots) {
                    if (root.is_zero()) continue;  // degree m would collapse
                    viable = true;
                    auto next_u = u_coeffs;
                    auto next_set = is_set;
                    next_u[static_cast<std::size_t>(j)] = Poly(root);
                    next_set[static_cast<std::size_t>(j)] = true;
                    descend(f, beta, m, t - 1, std::move(next_u), std::move(next_set),
                            theta_index, constraints, out);
                }
                if (!viable)
                    out.contradictions.push_back({branch_label(m, false), t});
                return;
            }

            if (c1.is_zero()) {
                if (c0.is_zero()) {
                    // The equation puts no constraint on U_j. Either j == m
                    // on an even-degree candidate with m == d/2, or a root
                    // chosen by the quadratic top zeroed the multiplier of
                    // one lower unknown. U_j enters as the parameter theta
                    // and the remaining equations must pin it down.
                    if (theta_index >= 0)
                        throw std::logic_error("descent: second undetermined coefficient");
                    u_coeffs[static_cast<std::size_t>(j)] = Poly::variable();
                    is_set[static_cast<std::size_t>(j)] = true;
                    theta_index = j;
                    continue;
                }
                out.contradictions.push_back({branch_label(m, theta_index >= 0), t});
                return;
            }

            if (!c1.is_constant())
                throw std::logic_error("descent: parametric linear multiplier");
            Poly value = c0 / -c1.coeff(0);
            if (j == m && value.is_zero()) {
                // Leading coefficient forced to vanish: not a degree-m solution.
                out.contradictions.push_back({branch_label(m, theta_index >= 0), t});
                return;
            }
            u_coeffs[static_cast<std::size_t>(j)] = std::move(value);
            is_set[static_cast<std::size_t>(j)] = true;
            continue;
        }

        // No unknown left in this equation: it is a pure check.
        const Poly e = residual_coeff(f, beta, t, u_coeffs);
        if (e.is_zero()) continue;
        if (theta_index >= 0 && !e.is_constant()) {
            constraints.emplace_back(e, t);
            continue;
        }
        out.contradictions.push_back({branch_label(m, theta_index >= 0), t});
        return;
    }

    if (theta_index < 0) {
        std::vector<Rational> coeffs;
        coeffs.reserve(static_cast<std::size_t>(m) + 1);
        for (const Poly& c : u_coeffs) {
            if (!c.is_constant())
                throw std::logic_error("descent: parametric coefficient without parameter");
            coeffs.push_back(c.coeff(0));
        }
        add_solution(out, f, beta, Poly(std::move(coeffs)));
        return;
    }

    // Parametric branch: intersect the leftover equations in theta.
    if (constraints.empty())
        throw std::logic_error("descent: parameter left unconstrained");
    Poly common = constraints.front().first;
    for (std::size_t i = 1; i < constraints.size() && !common.is_constant(); ++i)
        common = gcd(common, constraints[i].first);
    if (common.is_constant()) {
        out.contradictions.push_back({branch_label(m, true), constraints.front().second});
        return;
    }
    const Poly squarefree = divrem(common, gcd(common, common.derivative())).quotient;

    bool viable = false;
    for (const Rational& theta : rational_roots(squarefree)) {
        // theta = 0 only collapses the candidate when it is the leading slot.
        if (theta.is_zero() && theta_index == m) continue;
        std::vector<Rational> coeffs;
        coeffs.reserve(static_cast<std::size_t>(m) + 1);
        for (const Poly& c : u_coeffs) coeffs.push_back(c.eval(theta));
        add_solution(out, f, beta, Poly(std::move(coeffs)));
        viable = true;
    }
    if (!viable)
        out.contradictions.push_back({branch_label(m, true), constraints.front().second});
}

}  // namespace

namespace {

// Pollard rho with incrementing polynomial constant; only ever called on odd
// composites that survived trial division.
Integer pollard_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x(2), y(2), d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff(x - y);
            if (sgn(diff) < 0) diff = -diff;
            if (sgn(diff) == 0) break;  // cycle met without a factor
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Integer n, std::vector<Integer>& out) {
    for (unsigned long p = 2; p <= 100000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0 && mpz_cmp_ui(n.get_mpz_t(), p) != 0)
            break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.emplace_back(p);
            n /= static_cast<long>(p);
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        out.push_back(std::move(n));
        return;
    }
    const Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// Positive divisors of |n|, n != 0.
std::vector<Integer> divisors_of(const Integer& n_in) {
    Integer n(abs(n_in));
    std::vector<Integer> divs{Integer(1)};
    if (n <= 1) return divs;

    std::vector<Integer> primes;
    factor_into(std::move(n), primes);
    std::sort(primes.begin(), primes.end());

    for (std::size_t i = 0; i < primes.size();) {
        std::size_t run = i;
        while (run < primes.size() && primes[run] == primes[i]) ++run;
        const std::size_t base = divs.size();
        Integer pk(1);
        for (std::size_t e = i; e < run; ++e) {
            pk *= primes[i];
            for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * pk);
        }
        if (divs.size() > 200000)
            throw std::runtime_error("rational_roots: divisor candidate explosion");
        i = run;
    }
    return divs;
}

}  // namespace

RiccatiSolutionSet riccati_descent(const Poly& f, const Rational& beta) {
    if (f.is_zero()) throw std::invalid_argument("riccati_descent needs f != 0");

    RiccatiSolutionSet out;
    // u = 0 solves the equation exactly when beta == 0.
    if (beta.is_zero()) out.solutions.push_back(Poly{});

    const int d = *f.degree();
    if (d == 0) {
        // f u' and f' vanish, leaving u^2 = beta * f_0 over the constants.
        if (const auto s = sqrt_exact(beta * f.coeff(0))) {
            if (!s->is_zero()) {
                add_solution(out, f, beta, Poly(*s));
                add_solution(out, f, beta, Poly(-*s));
            }
        } else {
            out.contradictions.push_back({branch_label(0, false), 0});
        }
    } else {
        // deg u >= d forces the top coefficient of u^2 to survive, so only
        // degrees up to d-1 can solve; each gets its own descent.
        for (int m = 0; m <= d - 1; ++m) {
            std::vector<Poly> u_coeffs(static_cast<std::size_t>(m) + 1);
            std::vector<bool> is_set(static_cast<std::size_t>(m) + 1, false);
            descend(f, beta, m, d + m, std::move(u_coeffs), std::move(is_set),
                    -1, {}, out);
        }
    }

    std::sort(out.solutions.begin(), out.solutions.end(), poly_less);
    out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()),
                        out.solutions.end());
    return out;
}

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");

    std::vector<Rational> roots;
    Poly q = p;
    if (!q.is_constant() && q.coeff(0).is_zero()) {
        roots.push_back(Rational(0));
        while (!q.is_constant() && q.coeff(0).is_zero())
            q = divrem(q, Poly::variable()).quotient;
    }

    if (!q.is_constant()) {
        const int d = *q.degree();
        if (d == 1) {
            roots.push_back(-q.coeff(0) / q.coeff(1));
        } else if (d == 2) {
            const Rational a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
            if (const auto s = sqrt_exact(b * b - a * c * Rational(4))) {
                roots.push_back((-b + *s) / (a * Rational(2)));
                roots.push_back((-b - *s) / (a * Rational(2)));
            }
        } else {
            // Candidates num/den with num | a_0 and den | a_d, both taken from
            // the integer-cleared form.
            const Integer lcm = q.denominator_lcm();
            Integer a0 = q.coeff(0).num() * (lcm / q.coeff(0).den());
            Integer ad = q.leading().num() * (lcm / q.leading().den());
            for (const Integer& num : divisors_of(abs(a0)))
                for (const Integer& den : divisors_of(abs(ad)))
                    for (int sign : {1, -1}) {
                        const Rational candidate(sign * num, den);
                        if (q.eval(candidate).is_zero()) roots.push_back(candidate);
                    }
        }
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

int SearchReport::total_with_solutions() const {
    int total = 0;
    for (const SearchDegreeReport& d : degrees) total += d.with_solutions;
    return total;
}

namespace {

void tally_candidate(SearchDegreeReport& rep, const Poly& f) {
    const RiccatiSolutionSet rs = riccati_descent(f, Rational(1));
    rep.contradictions += static_cast<long>(rs.contradictions.size());
    if (rs.solutions.empty()) return;
    ++rep.with_solutions;
    for (const Poly& u : rs.solutions) rep.pairs.emplace_back(f, g_from_u(u, f));
}

// Nondecreasing root tuples from {-2..2}, i.e. multisets with multiplicity.
template <typename Fn>
void for_each_root_multiset(int count, Fn&& fn) {
    std::vector<int> roots(static_cast<std::size_t>(count), -2);
    while (true) {
        fn(roots);
        int i = count - 1;
        while (i >= 0 && roots[static_cast<std::size_t>(i)] == 2) --i;
        if (i < 0) return;
        const int next = roots[static_cast<std::size_t>(i)] + 1;
        for (int k = i; k < count; ++k) roots[static_cast<std::size_t>(k)] = next;
    }
}

}  // namespace

SearchReport modified_evidence_search(int deg_min, int deg_max, int trials,
                                      std::uint64_t rng_seed) {
    if (deg_min < 1 || deg_max < deg_min)
        throw std::invalid_argument("search needs 1 <= deg_min <= deg_max");
    if (trials < 0) throw std::invalid_argument("search needs trials >= 0");

    static const Rational kGammas[] = {
        Rational(1),    Rational(-1),    Rational(2),    Rational(-2),
        Rational(1, 2), Rational(-1, 2), Rational(1, 4), Rational(-1, 4)};

    SearchReport report;
    report.deg_min = deg_min;
    report.deg_max = deg_max;
    report.trials = trials;
    report.rng_seed = rng_seed;

    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<int> num_dist(-9, 9);
    std::uniform_int_distribution<int> den_dist(1, 4);

    for (int d = deg_min; d <= deg_max; ++d) {
        SearchDegreeReport rep;
        rep.degree = d;

        for (int trial = 0; trial < trials; ++trial) {
            std::vector<Rational> coeffs;
            coeffs.reserve(static_cast<std::size_t>(d) + 1);
            for (int k = 0; k < d; ++k)
                coeffs.emplace_back(num_dist(rng), den_dist(rng));
            int lead = 0;
            while (lead == 0) lead = num_dist(rng);
            coeffs.emplace_back(lead, den_dist(rng));
            ++rep.random_candidates;
            tally_candidate(rep, Poly(std::move(coeffs)));
        }

        for_each_root_multiset(d, [&](const std::vector<int>& roots) {
            Poly base{Rational(1)};
            for (int r : roots) base *= Poly({Rational(-r), Rational(1)});
            for (const Rational& gamma : kGammas) {
                ++rep.structured_candidates;
                tally_candidate(rep, base * gamma);
            }
        });

        report.degrees.push_back(std::move(rep));
    }
    return report;
}

}  // namespace specpol
