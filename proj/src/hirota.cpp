#include "specpol/hirota.hpp"

#include <stdexcept>
#include <utility>

namespace specpol {

Poly h_at(const HCoeffs& h, int n) {
    if (n < 0) throw std::invalid_argument("h_at needs n >= 0");
    const Rational cn = h.alpha * Rational(n) + h.beta * Rational(n) * Rational(n - 1);
    return h.p + Poly(cn);
}

HirotaSpec::HirotaSpec(Poly f, Poly g, HCoeffs h, Poly seed0, Poly seed1)
    : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)),
      seed0_(std::move(seed0)), seed1_(std::move(seed1)) {
    if (f_.is_zero() && g_.is_zero() && h_.p.is_zero() && h_.alpha.is_zero() &&
        h_.beta.is_zero())
        throw std::invalid_argument("recurrence data f, g, h all zero");
    if (seed0_.is_zero() || seed1_.is_zero())
        throw std::invalid_argument("recurrence seeds must be nonzero");

    // No common nonconstant factor among f, g and p. Pairwise reduction of a
    // running gcd; a zero member contributes nothing.
    Poly common;
    for (const Poly* part : {&f_, &g_, &h_.p}) {
        if (part->is_zero()) continue;
        common = common.is_zero() ? *part : gcd(common, *part);
        if (common.is_constant()) return;
    }
    // All of alpha, beta gone and a nonconstant gcd survived: the constant
    // shifts alpha*n + beta*n*(n-1) still break the common factor unless they
    // vanish identically.
    if (!common.is_constant() && h_.alpha.is_zero() && h_.beta.is_zero())
        throw std::invalid_argument("f, g, h share a nonconstant factor");
}

Poly hirota_rhs(const HirotaSpec& spec, const Poly& p, int n) {
    const Poly d1 = p.derivative();
    const Poly d2 = d1.derivative();
    Poly rhs = spec.f() * (p * d2 - d1 * d1);
    rhs += spec.g() * (p * d1);
    rhs += h_at(spec.h(), n) * (p * p);
    return rhs;
}

std::variant<Poly, StepFailure> hirota_step(const HirotaSpec& spec,
                                            const Poly& prev, const Poly& p, int n) {
    if (prev.is_zero()) throw std::domain_error("hirota_step with zero P_{n-1}");
    auto [quot, rem] = divrem(hirota_rhs(spec, p, n), prev);
    if (!rem.is_zero()) return StepFailure{n, std::move(rem), prev};
    return quot;
}

namespace {

SequenceReport run(const HirotaSpec& spec, int n_max, bool recheck) {
    if (n_max < 1) throw std::invalid_argument("hirota_generate needs n_max >= 1");

    SequenceReport report;
    report.entries.reserve(static_cast<std::size_t>(n_max) + 1);
    report.entries.push_back(spec.seed0());
    report.entries.push_back(spec.seed1());

    for (int n = 1; n < n_max; ++n) {
        const Poly& p = report.entries.back();
        const Poly& prev = report.entries[report.entries.size() - 2];
        auto step = hirota_step(spec, prev, p, n);
        if (auto* fail = std::get_if<StepFailure>(&step)) {
            report.failure = std::move(*fail);
            break;
        }
        Poly next = std::move(std::get<Poly>(step));
        if (next.is_zero()) {
            // A zero entry cannot serve as the next divisor; treat the step
            // as failed with a zero remainder for evidence.
            report.failure = StepFailure{n, Poly{}, prev};
            break;
        }
        if (recheck && next * prev != hirota_rhs(spec, p, n))
            throw std::logic_error("hirota_step reconstruction mismatch");
        report.reconstruction.push_back(true);
        report.entries.push_back(std::move(next));
    }
    if (!recheck) report.reconstruction.clear();

    for (const Poly& p : report.entries) report.degrees.push_back(p.degree());
    for (std::size_t i = 0; i + 1 < report.entries.size(); ++i)
        report.coprime_with_next.push_back(coprime(report.entries[i], report.entries[i + 1]));
    for (const Poly& p : report.entries)
        report.squarefree.push_back(p.is_constant() || coprime(p, p.derivative()));
    return report;
}

}  // namespace

bool SequenceReport::clean() const {
    if (failure) return false;
    for (bool b : coprime_with_next)
        if (!b) return false;
    for (bool b : squarefree)
        if (!b) return false;
    for (bool b : reconstruction)
        if (!b) return false;
    return true;
}

SequenceReport hirota_generate(const HirotaSpec& spec, int n_max) {
    return run(spec, n_max, false);
}

SequenceReport certificate(const HirotaSpec& spec, int n_max) {
    if (n_max < 2) throw std::invalid_argument("certificate needs n_max >= 2");
    return run(spec, n_max, true);
}

}  // namespace specpol
