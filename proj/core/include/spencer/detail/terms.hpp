#pragma once

#include <map>
#include <string_view>

#include "spencer/rational.hpp"

namespace spencer::detail {

/// Exponents keyed by single-letter symbol name.
using SymbolMonomial = std::map<char, unsigned>;
using SymbolPolynomial = std::map<SymbolMonomial, Rational>;

/// Parses a small polynomial language over single-letter symbols:
///
///   expr   := term (('+' | '-') term)*
///   term   := ['+' | '-'] factor (['*'] factor)*
///   factor := integer ['/' integer] | letter ['^' integer] | '(' expr ')' ['^' integer]
///
/// so "3/2*a", "-3H", "aH^2" and "(9/2 - 2*a)*H^2" are all accepted. Throws
/// ValidationError on malformed text.
SymbolPolynomial parse_symbol_polynomial(std::string_view text);

}  // namespace spencer::detail
