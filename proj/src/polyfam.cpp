#include "motzhank/polyfam.hpp"

#include "motzhank/errors.hpp"
#include "motzhank/motzkin.hpp"

namespace motzhank {

long binom2(long a) { return a * (a - 1) / 2; }

namespace {

// Terms of u_n = c u_{n-1} - u_{n-2} from u_{-1}, u_0 up to u_n.
MPoly chebyshev_like(const MPoly& c, MPoly prev, MPoly cur, int n) {
    for (int i = 0; i < n; ++i) {
        MPoly next = c * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

MPoly fibonacci(int n) {
    if (n < -2) throw Error("fibonacci index below -2");
    if (n == -2) return MPoly(-1);
    if (n == -1) return MPoly();
    return chebyshev_like(MPoly::t(), MPoly(), MPoly(1), n);
}

MPoly lucas(int n) {
    if (n < 0) throw Error("lucas index must be non-negative");
    if (n == 0) return MPoly(2);
    return chebyshev_like(MPoly::t(), MPoly(2), MPoly::t(), n - 1);
}

MPoly gen_fibonacci(int k, int n) {
    if (k < 0 || n < -1) throw Error("gen_fibonacci needs k >= 0, n >= -1");
    if (n == -1) return MPoly();
    return chebyshev_like(lucas(k + 1), MPoly(), MPoly(1), n);
}

XPoly moment_poly(int n) {
    if (n < 0) throw Error("moment_poly index must be non-negative");
    const XPoly step = x_power(1) - XPoly(MPoly::t());
    XPoly prev, cur(MPoly(1));
    for (int i = 0; i < n; ++i) {
        XPoly next = step * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

XPoly a_factor(int n) {
    if (n == 0) return XPoly(MPoly(1)) - x_power(1);
    return from_terms({MPoly(1), -lucas(n), MPoly(1)});
}

XPoly a_k_factor(int k, int n) {
    const int e = sign_pow(binom2(k - 1));
    if (n == 0) return XPoly(MPoly(1)) + XPoly::monomial(MPoly(e), k + 1);
    return XPoly(MPoly(1)) + XPoly::monomial(lucas(n) * MPoly(e), k + 1) + x_power(2 * (k + 1));
}

std::string to_string(ExponentRule r) { return r == ExponentRule::binomial ? "binomial" : "reduced"; }

long factor_exponent(const DenominatorSpec& spec, int j) {
    if (spec.rule == ExponentRule::binomial) return binomial(spec.m, j).get_si();
    return 1 + static_cast<long>(j) * (spec.m - j);
}

std::vector<std::pair<XPoly, long>> denominator_factors(const DenominatorSpec& spec) {
    if (spec.m < 1 || spec.k < 0) throw Error("denominator needs m >= 1, k >= 0");
    std::vector<std::pair<XPoly, long>> out;
    for (int j = 0; 2 * j <= spec.m; ++j)
        out.emplace_back(a_k_factor(spec.k, (spec.k + 1) * (spec.m - 2 * j)), factor_exponent(spec, j));
    return out;
}

XPoly xpow(const XPoly& p, long e) {
    XPoly r(MPoly(1));
    XPoly b = p;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

XPoly denominator(const DenominatorSpec& spec) {
    XPoly d(MPoly(1));
    for (const auto& [f, e] : denominator_factors(spec)) d = d * xpow(f, e);
    return d;
}

} // namespace motzhank
