#include "specpol/painleve.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace specpol {

namespace {

Rational require_param(const std::optional<Rational>& p, const char* which) {
    if (!p) throw std::invalid_argument(std::string("preset needs parameter ") + which);
    return *p;
}

Poly constant(long n, long d = 1) { return Poly(Rational(n, d)); }

}  // namespace

std::optional<FamilyId> family_from_string(std::string_view name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "p2") return FamilyId::P2;
    if (s == "p3") return FamilyId::P3;
    if (s == "p4a") return FamilyId::P4a;
    if (s == "p4b") return FamilyId::P4b;
    if (s == "p5") return FamilyId::P5;
    if (s == "p6") return FamilyId::P6;
    return std::nullopt;
}

std::string_view family_name(FamilyId id) {
    switch (id) {
        case FamilyId::P2: return "p2";
        case FamilyId::P3: return "p3";
        case FamilyId::P4a: return "p4a";
        case FamilyId::P4b: return "p4b";
        case FamilyId::P5: return "p5";
        case FamilyId::P6: return "p6";
    }
    throw std::invalid_argument("unknown family");
}

HirotaSpec preset(FamilyId id, const FamilyParams& params) {
    const Poly one = constant(1);
    const Poly x = Poly::variable();

    switch (id) {
        case FamilyId::P2:
            // f = -4, g = 0, h_n = x, seeds 1, x
            return HirotaSpec(constant(-4), Poly{}, HCoeffs{x, Rational(0), Rational(0)},
                              one, x);
        case FamilyId::P3: {
            // f = -x^4, g = -x^3, h_n = c x + 1, seeds 1, 1
            const Rational c = require_param(params.c, "c");
            return HirotaSpec(Poly::monomial(Rational(-1), 4),
                              Poly::monomial(Rational(-1), 3),
                              HCoeffs{Poly({Rational(1), c}), Rational(0), Rational(0)},
                              one, one);
        }
        case FamilyId::P4a:
            // f = 1, g = 0, h_n = x^2 + 2n - 1, seeds 1, 1
            return HirotaSpec(one, Poly{},
                              HCoeffs{Poly({Rational(-1), Rational(0), Rational(1)}),
                                      Rational(2), Rational(0)},
                              one, one);
        case FamilyId::P4b:
            // f = 1, g = 0, h_n = x^2 + 2n, seeds 1, x
            return HirotaSpec(one, Poly{},
                              HCoeffs{Poly({Rational(0), Rational(0), Rational(1)}),
                                      Rational(2), Rational(0)},
                              one, x);
        case FamilyId::P5: {
            // f = x, g = 1, h_n = x/8 - v + 3n/8, seeds 1, 1
            const Rational v = require_param(params.v, "v");
            return HirotaSpec(x, one,
                              HCoeffs{Poly({-v, Rational(1, 8)}),
                                      Rational(3, 8), Rational(0)},
                              one, one);
        }
        case FamilyId::P6: {
            // f = (x^2-4)^2/4, g = x(x^2-4)/4, h_n = c x + (n - 1/2)^2,
            // seeds 1, 1. The n dependence (n - 1/2)^2 = n(n-1) + 1/4 uses
            // beta = 1.
            const Rational c = require_param(params.c, "c");
            const Poly x2m4({Rational(-4), Rational(0), Rational(1)});
            return HirotaSpec(x2m4 * x2m4 / Rational(4), x * x2m4 / Rational(4),
                              HCoeffs{Poly({Rational(1, 4), c}),
                                      Rational(0), Rational(1)},
                              one, one);
        }
    }
    throw std::invalid_argument("unknown family");
}

ResidualReport preset_condition_check(FamilyId id, const FamilyParams& params) {
    const HirotaSpec spec = preset(id, params);
    if (id == FamilyId::P6)
        return modified_residual(spec.f(), spec.g(), Rational(1));
    return star_residual(spec.f(), spec.g());
}

namespace {

// P_0 .. P_{n_max} of the P3 preset at parameter c; every step must divide
// exactly, which holds for this family.
std::vector<Poly> p3_entries(int n_max, const Rational& c) {
    const HirotaSpec spec = preset(FamilyId::P3, FamilyParams{c, std::nullopt});
    SequenceReport report = hirota_generate(spec, n_max);
    if (report.failure)
        throw std::logic_error("p3 preset produced a non-polynomial entry");
    return std::move(report.entries);
}

// q(1/x) as a rational function: reversed(q) / x^deg(q).
RationalFunction at_inverse_argument(const Poly& q) {
    if (q.is_zero()) return RationalFunction{};
    return RationalFunction(q.reversed(), Poly::monomial(Rational(1), *q.degree()));
}

}  // namespace

RationalFunction p3_solution(int n, const Rational& c) {
    if (n < 0) throw std::invalid_argument("p3_solution needs n >= 0");

    const std::vector<Poly> at_c = p3_entries(n + 1, c);
    const std::vector<Poly> at_cm1 = p3_entries(n + 1, c - Rational(1));

    const std::size_t i = static_cast<std::size_t>(n);
    const RationalFunction num =
        at_inverse_argument(at_c[i]) * at_inverse_argument(at_cm1[i + 1]);
    const RationalFunction den =
        at_inverse_argument(at_cm1[i]) * at_inverse_argument(at_c[i + 1]);
    return num / den;
}

RationalFunction p3_ode_residual(const RationalFunction& y, const Rational& a,
                                 const Rational& b) {
    if (y.is_zero()) throw std::domain_error("p3 residual at y == 0");
    const RationalFunction x(Poly::variable());
    const RationalFunction yp = y.derivative();
    const RationalFunction ypp = yp.derivative();

    RationalFunction res = ypp - yp * yp / y + yp / x;
    res -= (y * y * RationalFunction(Poly(a)) + RationalFunction(Poly(b))) / x;
    res -= y * y * y;
    res += RationalFunction(Poly(Rational(1))) / y;
    return res;
}

OdeCheck verify_p3(int n, const Rational& c) {
    OdeCheck check;
    check.n = n;
    check.c = c;
    check.a = Rational(2 * n - 1) + c * Rational(2);
    check.b = Rational(2 * n + 1) - c * Rational(2);
    check.y = p3_solution(n, c);
    check.residual = p3_ode_residual(check.y, check.a, check.b);
    check.pass = check.residual.is_zero();
    return check;
}

}  // namespace specpol
