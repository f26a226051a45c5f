#pragma once

#include "motzhank/dense_poly.hpp"
#include "motzhank/mpoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace motzhank {

/// Polynomial in x with coefficients in Z[t,s].
using XPoly = DensePoly<MPoly>;

XPoly x_power(std::size_t n);
/// Builds sum_i terms[i] x^i.
XPoly from_terms(std::vector<MPoly> terms);

/// Canonical text in ascending powers of x, e.g. "1 - (-2 + t^2)*x + x^2".
std::string to_string(const XPoly& p);
XPoly parse_xpoly(std::string_view text);

/// Substitutes an integer value for t or s in every coefficient.
XPoly specialize(const XPoly& p, Var v, const Integer& value);
/// Substitutes polynomials for t and s in every coefficient.
XPoly compose(const XPoly& p, const MPoly& t_image, const MPoly& s_image);

/// Power series inverse modulo x^n; the constant term must be 1 or -1.
XPoly series_inverse(const XPoly& p, std::size_t n);

/// Largest t-degree among the coefficients.
int deg_t(const XPoly& p);

} // namespace motzhank
