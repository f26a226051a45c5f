#include "motzhank/xpoly.hpp"

#include "parse.hpp"

#include <algorithm>

namespace motzhank {

XPoly x_power(std::size_t n) { return XPoly::monomial(MPoly(1), n); }

XPoly from_terms(std::vector<MPoly> terms) { return XPoly(std::move(terms)); }

std::string to_string(const XPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const MPoly& c = p[i];
        if (c.is_zero()) continue;
        std::string xs;
        if (i == 1) xs = "x";
        else if (i > 1) xs = "x^" + std::to_string(i);
        if (c.term_count() == 1) {
            std::string cs = c.str();
            const bool neg = cs[0] == '-';
            if (neg) cs.erase(0, 1);
            if (first) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            if (xs.empty()) out += cs;
            else if (cs == "1") out += xs;
            else out += cs + "*" + xs;
        } else {
            if (!first) out += " + ";
            out += "(" + c.str() + ")";
            if (!xs.empty()) out += "*" + xs;
        }
        first = false;
    }
    return out;
}

XPoly parse_xpoly(std::string_view text) {
    auto lookup = [](char c) -> std::optional<XPoly> {
        if (c == 't') return XPoly(MPoly::t());
        if (c == 's') return XPoly(MPoly::s());
        if (c == 'x') return x_power(1);
        return std::nullopt;
    };
    return detail::ExprParser<XPoly, decltype(lookup)>(text, lookup).parse();
}

XPoly specialize(const XPoly& p, Var v, const Integer& value) {
    std::vector<MPoly> c;
    c.reserve(p.size());
    for (const auto& m : p.coeffs()) c.push_back(m.eval(v, value));
    return XPoly(std::move(c));
}

XPoly compose(const XPoly& p, const MPoly& t_image, const MPoly& s_image) {
    std::vector<MPoly> c;
    c.reserve(p.size());
    for (const auto& m : p.coeffs()) c.push_back(m.compose(t_image, s_image));
    return XPoly(std::move(c));
}

XPoly series_inverse(const XPoly& p, std::size_t n) {
    if (p.is_zero() || !p[0].is_constant() || abs(p[0].constant()) != 1)
        throw Error("series inverse needs constant term 1 or -1");
    const bool neg = p[0].constant() < 0;
    std::vector<MPoly> inv(n);
    if (n == 0) return {};
    inv[0] = MPoly(neg ? -1 : 1);
    for (std::size_t k = 1; k < n; ++k) {
        MPoly acc;
        for (std::size_t i = 1; i <= k && i < p.size(); ++i)
            if (!p[i].is_zero() && !inv[k - i].is_zero()) acc += p[i] * inv[k - i];
        inv[k] = neg ? acc : -acc;
    }
    return XPoly(std::move(inv));
}

int deg_t(const XPoly& p) {
    int d = -1;
    for (const auto& c : p.coeffs()) d = std::max(d, c.deg_t());
    return d;
}

} // namespace motzhank
