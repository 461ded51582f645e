#pragma once

// Text form of polynomials, e.g. "3/4*x1^2*x2 - x2^3 + (0.5,-1)*x1".
//
// Terms are products of factors joined by '*' or by juxtaposition. A factor
// is a number (integer, decimal, exponent notation, or p/q), a complex
// literal (re,im), a variable x1..xn (z1..zn is accepted as a synonym), or a
// parenthesized sum, each optionally raised to a nonnegative integer power.
// Exact parsing converts decimals to the rational they denote and rejects
// complex literals with a nonzero imaginary part.
//
// The printers emit descending graded lexicographic order. Exact output
// parses back to the identical polynomial; numeric output uses 17
// significant digits, so it parses back to identical doubles.

#include <string>
#include <string_view>

#include "polyharm/multipoly.hpp"

namespace polyharm {

/// Throws ParseError carrying the byte offset of the offending token.
ExactPoly parse_exact_poly(std::string_view text, int nvars);
NumericPoly parse_numeric_poly(std::string_view text, int nvars);

std::string format_poly(const ExactPoly& q);
std::string format_poly(const NumericPoly& q);

}  // namespace polyharm
