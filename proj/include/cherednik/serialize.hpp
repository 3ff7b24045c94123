#pragma once

#include <string>

#include "cherednik/dunkl.hpp"

namespace cherednik {

/// Canonical text forms. Terms are joined by " + " with signs carried by the
/// coefficients; trivial factors (x^0, delta^0, L^0, g0) are omitted.
std::string poly_str(const MultiPoly& f);
std::string localized_str(const LocalizedCoeff& c);
std::string skew_str(const SkewOp& a);
std::string cher_str(const CherednikElement& x);

/// Parses the operator grammar:
///   expr   := ['-'] term { ('+'|'-') term }
///   term   := factor { ('*'|'/') factor }
///   factor := rational | 'zeta' ['^' int] | 'x_k' | 'x^(ints)'
///           | 'delta^(ints)' | 'L_k' | 'L^(ints)' | 'D_k' | 'D^(ints)'
///           | 'g' label | '(' expr ')'
/// Subscripts are 1-based. D factors expand through the Dunkl embedding.
/// Division is defined for scalars and products of hyperplane forms.
SkewOp parse_skew(const std::string& text, const Algebra& H);

/// Same grammar restricted to a polynomial result.
MultiPoly parse_poly(const std::string& text, const Algebra& H);

} // namespace cherednik
