#include "motzhank/interpolate.hpp"

#include "motzhank/errors.hpp"

namespace motzhank {

ZPoly Interpolant::to_zpoly() const {
    if (!integral) throw NonIntegral("interpolant has non-integer coefficients");
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) c.emplace_back(q.get_num());
    return ZPoly(std::move(c));
}

Rational Interpolant::eval(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
    return r;
}

Interpolant interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first) throw DuplicateNode();

    // Newton divided differences, then expansion into the monomial basis.
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    std::vector<Rational> poly;
    for (std::size_t i = n; i-- > 0;) {
        // poly = poly * (x - x_i) + dd[i]
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * points[i].first;
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();

    Interpolant out;
    out.coeffs = std::move(poly);
    for (const auto& c : out.coeffs)
        if (c.get_den() != 1) out.integral = false;
    return out;
}

} // namespace motzhank
