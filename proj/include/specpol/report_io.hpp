#pragma once

#include "specpol/conditions.hpp"
#include "specpol/hirota.hpp"
#include "specpol/painleve.hpp"
#include "specpol/somos.hpp"

#include <json.hpp>

#include <string>

namespace specpol {

/// All emitters use insertion-ordered JSON so a dump -> parse -> dump round
/// trip is byte identical.
using Json = nlohmann::ordered_json;

/// ["num", "den"] as decimal strings.
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"variable": "x", "coeffs": [["num","den"], ...]} with coefficients
/// ascending from x^0; the zero polynomial carries a single zero coefficient.
Json poly_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json ratfun_json(const RationalFunction& y);

Json sequence_json(const SequenceReport& report);
Json somos_json(const SomosSpec& spec, const std::vector<Rational>& terms);
Json residual_json(const Poly& f, const Poly& g, const ResidualReport& report);
Json riccati_json(const Poly& f, const Rational& beta, const RiccatiSolutionSet& set);
Json search_json(const SearchReport& report);
Json ode_json(const OdeCheck& check);

/// "n,degree,coprime_with_next,squarefree,entry" rows.
std::string sequence_csv(const SequenceReport& report);
/// "index,value" rows.
std::string somos_csv(const std::vector<Rational>& terms);

/// Display-math friendly form with \frac for fractional coefficients.
std::string poly_latex(const Poly& p);
/// An aligned block of P_n lines.
std::string sequence_latex(const SequenceReport& report);

}  // namespace specpol
