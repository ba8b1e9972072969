#pragma once

#include "specpol/poly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace specpol {

/// Index-dependent coefficient h_n(x) = p(x) + alpha*n + beta*n*(n-1).
struct HCoeffs {
    Poly p;
    Rational alpha;
    Rational beta;
};

/// h_n as a polynomial, n >= 0.
Poly h_at(const HCoeffs& h, int n);

/// Data of the bilinear recurrence
///   P_{n+1} P_{n-1} = f (P_n P_n'' - P_n'^2) + g P_n P_n' + h_n P_n^2.
/// Construction validates that f, g and h.p are not all zero, that they share
/// no nonconstant common factor, and that both seeds are nonzero.
class HirotaSpec {
public:
    HirotaSpec(Poly f, Poly g, HCoeffs h, Poly seed0, Poly seed1);

    const Poly& f() const { return f_; }
    const Poly& g() const { return g_; }
    const HCoeffs& h() const { return h_; }
    const Poly& seed0() const { return seed0_; }
    const Poly& seed1() const { return seed1_; }

private:
    Poly f_, g_;
    HCoeffs h_;
    Poly seed0_, seed1_;
};

/// A step whose exact division left a nonzero remainder. `n` is the index of
/// the last entry that was computed; P_{n+1} does not exist as a polynomial.
struct StepFailure {
    int n = 0;
    Poly remainder;
    Poly divisor;
};

/// Right hand side of the recurrence for P_n = p at index n.
Poly hirota_rhs(const HirotaSpec& spec, const Poly& p, int n);

/// P_{n+1} from (P_{n-1}, P_n) by exact division, or the failure evidence.
std::variant<Poly, StepFailure> hirota_step(const HirotaSpec& spec,
                                            const Poly& prev, const Poly& p, int n);

/// Outcome of running the recurrence. Entries are P_0 .. P_N, or stop early
/// at index failure->n. Flag i refers to entries[i]: coprime_with_next[i] is
/// gcd(P_i, P_{i+1}) constant (one slot fewer than entries), squarefree[i] is
/// gcd(P_i, P_i') constant. reconstruction[i] is filled by certificate() only
/// and re-checks step i against a fresh right hand side.
struct SequenceReport {
    std::vector<Poly> entries;
    std::vector<std::optional<int>> degrees;
    std::vector<bool> coprime_with_next;
    std::vector<bool> squarefree;
    std::vector<bool> reconstruction;
    std::optional<StepFailure> failure;

    /// No failure and every recorded flag true.
    bool clean() const;
};

/// Runs the recurrence up to P_N (N >= 1) and records what happened.
SequenceReport hirota_generate(const HirotaSpec& spec, int n_max);

/// hirota_generate plus an independent per-step re-check: each computed entry
/// is multiplied back against its predecessor and compared with the right
/// hand side. Requires n_max >= 2.
SequenceReport certificate(const HirotaSpec& spec, int n_max);

}  // namespace specpol
