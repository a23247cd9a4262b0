#pragma once

#include <map>
#include <string_view>

#include "amoeba/laurent.hpp"

namespace amoeba::detail {

using TermMap = std::map<Exponent, Scalar>;

// Parses a Laurent expression in x1..x<rank> with coefficients in `field`.
// The result may be empty (the zero polynomial).
TermMap parse_expression(std::string_view text, std::size_t rank, Field field);

// An x-free expression.
Scalar parse_scalar_expression(std::string_view text, Field field);

} // namespace amoeba::detail
