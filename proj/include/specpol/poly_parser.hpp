#pragma once

#include "specpol/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace specpol {

/// Parse failure with the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses a polynomial expression in x over the rationals.
///
/// Supported: integer literals of any size, the variable x, + - * / ^,
/// parentheses, and implicit multiplication by juxtaposition ("2x", "3(x+1)",
/// "(x-1)(x+2)"). '^' takes a nonnegative integer literal; '/' requires the
/// divisor to evaluate to a nonzero constant, so "3/2x^2" means (3/2)*x^2.
Poly parse_poly(std::string_view text);

}  // namespace specpol
