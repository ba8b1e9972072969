#pragma once

#include "specpol/poly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace specpol {

/// Residual of a polynomiality condition; satisfied iff the residual is the
/// zero polynomial.
struct ResidualReport {
    Poly residual;
    Rational beta;
    bool satisfied = false;
};

/// f f'' - f'^2 + 3 f' g - 2 f g' - 2 g^2, the condition that keeps the
/// bilinear recurrence with h_n = p(x) + alpha*n polynomial.
ResidualReport star_residual(const Poly& f, const Poly& g);

/// Same residual plus 2*beta*f, for h_n = p(x) + alpha*n + beta*n*(n-1).
/// beta = 0 reduces to star_residual.
ResidualReport modified_residual(const Poly& f, const Poly& g, const Rational& beta);

/// The closed-form solutions g of the unmodified condition for a given f:
/// always f'/2, and gamma*(x-r)^(k-1) when f = gamma*(x-r)^k. Each result is
/// re-verified exactly; the list is deduplicated and sorted by degree, then
/// coefficients. Throws std::invalid_argument when f == 0.
std::vector<Poly> theorem2_solutions(const Poly& f);

/// A branch of the descent that died, with the exponent of the first residual
/// coefficient that could not be satisfied.
struct ContradictionTrace {
    std::string branch;
    int coefficient_index = 0;
};

struct RiccatiSolutionSet {
    std::vector<Poly> solutions;
    std::vector<ContradictionTrace> contradictions;
};

/// All polynomial solutions u of  f u' - (f'/2) u + u^2 = beta f,  found by
/// exhaustive top-down coefficient descent over every admissible degree of u.
/// Writing g = u + f'/2 turns a solution into a solution of the (modified,
/// when beta != 0) polynomiality condition. Every returned u is re-verified
/// by exact substitution; solutions are sorted by degree, then coefficients.
/// Throws std::invalid_argument when f == 0.
RiccatiSolutionSet riccati_descent(const Poly& f, const Rational& beta);

/// g = u + f'/2.
Poly g_from_u(const Poly& u, const Poly& f);

/// Exact rational roots of p, ascending, with multiplicity collapsed.
/// Throws std::invalid_argument when p == 0.
std::vector<Rational> rational_roots(const Poly& p);

/// One degree slice of the evidence search.
struct SearchDegreeReport {
    int degree = 0;
    int random_candidates = 0;
    int structured_candidates = 0;
    int with_solutions = 0;
    long contradictions = 0;
    std::vector<std::pair<Poly, Poly>> pairs;  // every (f, g) found
};

struct SearchReport {
    int deg_min = 0;
    int deg_max = 0;
    int trials = 0;
    std::uint64_t rng_seed = 0;
    std::vector<SearchDegreeReport> degrees;

    int total_with_solutions() const;
};

/// Runs riccati_descent(f, 1) over random degree-d candidates (deterministic
/// in rng_seed) and over the structured grid gamma * prod (x - r_i) with
/// roots from {-2..2} and gamma in {1, -1, 2, -2, 1/2, -1/2, 1/4, -1/4},
/// for every degree in [deg_min, deg_max].
SearchReport modified_evidence_search(int deg_min, int deg_max, int trials,
                                      std::uint64_t rng_seed);

}  // namespace specpol
