#pragma once

#include "specpol/conditions.hpp"
#include "specpol/hirota.hpp"
#include "specpol/rational_function.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace specpol {

/// Built-in recurrence presets. P4 comes in the two seed variants from the
/// table; the P3 and P6 data take a rational parameter c and P5 takes v.
enum class FamilyId { P2, P3, P4a, P4b, P5, P6 };

/// Case-insensitive lookup of "p2", "p3", "p4a", "p4b", "p5", "p6".
std::optional<FamilyId> family_from_string(std::string_view name);
std::string_view family_name(FamilyId id);

struct FamilyParams {
    std::optional<Rational> c;
    std::optional<Rational> v;
};

/// The recurrence data of a preset. Presets that take a parameter require it
/// to be present (std::invalid_argument otherwise); others ignore params.
HirotaSpec preset(FamilyId id, const FamilyParams& params = {});

/// The polynomiality condition obeyed by a preset: the unmodified condition
/// for P2..P5 and the beta = 1 modified condition for P6. The report's
/// satisfied flag must come back true for every preset.
ResidualReport preset_condition_check(FamilyId id, const FamilyParams& params = {});

struct OdeCheck {
    int n = 0;
    Rational c;
    Rational a;
    Rational b;
    RationalFunction y;
    RationalFunction residual;
    bool pass = false;
};

/// The rational function y(x) built from the P3 preset at parameters c and
/// c - 1:  y = P_n(1/x; c) P_{n+1}(1/x; c-1) / (P_n(1/x; c-1) P_{n+1}(1/x; c)),
/// with the substitution x -> 1/x carried out exactly. Requires n >= 0.
RationalFunction p3_solution(int n, const Rational& c);

/// Residual of y'' - y'^2/y + y'/x - (a y^2 + b)/x - y^3 + 1/y.
/// Throws std::domain_error when y == 0.
RationalFunction p3_ode_residual(const RationalFunction& y, const Rational& a,
                                 const Rational& b);

/// Builds y for (n, c), substitutes it into the equation with a = 2n - 1 + 2c
/// and b = 2n + 1 - 2c, and reports whether the residual vanishes.
OdeCheck verify_p3(int n, const Rational& c);

}  // namespace specpol
