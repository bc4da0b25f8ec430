#pragma once

#include <string_view>
#include <vector>

#include "hkfun/polynomial.hpp"

namespace hkfun {

/// Grammar (whitespace insignificant):
///   expr   := sign? term (sign term)*        sign := '+' | '-'
///   term   := coeff? ('*'? factor)*          (at least one of the two)
///   factor := var ('^' nat)?
///   coeff  := nat
/// Coefficients are reduced mod p. Errors carry the byte offset.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma separated polynomials; offsets in errors are relative to `text`.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring, char separator = ',');

bool is_identifier(std::string_view name) noexcept;

}  // namespace hkfun
