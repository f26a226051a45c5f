#pragma once

#include "motzhank/zpoly.hpp"

#include <utility>
#include <vector>

namespace motzhank {

struct Interpolant {
    /// Coefficients in ascending powers of t, trailing zeros removed.
    std::vector<Rational> coeffs;
    bool integral = true;

    /// The interpolant as a ZPoly; throws NonIntegral unless integral.
    ZPoly to_zpoly() const;
    Rational eval(const Rational& x) const;
};

/// Unique polynomial of degree < points.size() through the points.
/// Throws DuplicateNode when two nodes coincide.
Interpolant interpolate(const std::vector<std::pair<Rational, Rational>>& points);

} // namespace motzhank
