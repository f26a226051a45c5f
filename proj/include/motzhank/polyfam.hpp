#pragma once

#include "motzhank/mpoly.hpp"
#include "motzhank/xpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace motzhank {

/// Generalized C(a,2) = a(a-1)/2 for every integer a.
long binom2(long a);
/// (-1)^e.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// F_n(t): F_n = t F_{n-1} - F_{n-2}, F_0 = 1, F_1 = t, F_{-1} = 0, F_{-2} = -1.
MPoly fibonacci(int n);
/// L_n(t): L_0 = 2, L_1 = t.
MPoly lucas(int n);
/// F^{(k)}_n(t) = L_{k+1} F^{(k)}_{n-1} - F^{(k)}_{n-2}, F^{(k)}_{-1} = 0, F^{(k)}_0 = 1.
MPoly gen_fibonacci(int k, int n);

/// p_n(x,t) = (x - t) p_{n-1} - p_{n-2}, p_{-1} = 0, p_0 = 1.
XPoly moment_poly(int n);

/// A_0 = 1 - x, A_n = 1 - L_n x + x^2.
XPoly a_factor(int n);
/// A_{k,0} = 1 + e x^{k+1}, A_{k,n} = 1 + e L_n x^{k+1} + x^{2(k+1)}, e = (-1)^C(k-1,2).
XPoly a_k_factor(int k, int n);

enum class ExponentRule { binomial, reduced };
std::string to_string(ExponentRule r);

struct DenominatorSpec {
    int k = 0;
    int m = 1;
    ExponentRule rule = ExponentRule::binomial;
};

/// Exponent of factor j: C(m,j) or 1 + j(m-j).
long factor_exponent(const DenominatorSpec& spec, int j);

/// Factors A_{k,(k+1)(m-2j)} with their exponents, j = 0..floor(m/2).
std::vector<std::pair<XPoly, long>> denominator_factors(const DenominatorSpec& spec);

/// Product of denominator_factors.
XPoly denominator(const DenominatorSpec& spec);

/// p^e.
XPoly xpow(const XPoly& p, long e);

} // namespace motzhank
