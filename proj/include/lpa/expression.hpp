#pragma once

#include <string_view>

#include "lpa/algebra.hpp"

namespace lpa {

/// Parses
///
///     element  := term (('+'|'-') term)*
///     term     := [ringliteral '*'] monomial
///     monomial := realpath ['|' realpath] | vertexid
///     realpath := id ('.' id)*
///
/// where the part after '|' is the ghost path written un-starred, so
/// "2 * a.b|b + u" is 2 ab b^* + u. A leading sign is allowed. Throws
/// ParseError with the character offset for syntax errors, unknown ids and
/// bad ring literals. A term whose real and ghost parts end at different
/// vertices is zero.
AlgebraElement parse_expression(std::string_view src, const LeavittPathAlgebra& alg);

}  // namespace lpa
