#include "motzhank/ratfun.hpp"

#include "motzhank/errors.hpp"

namespace motzhank {

RatFunX::RatFunX(XPoly num, XPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        den_ = XPoly(MPoly(1));
        return;
    }
    const XPoly g = gcd(num, den);
    if (!(g == XPoly(MPoly(1)))) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    const MPoly d0 = den.coeff(0);
    if (!d0.is_constant() || d0.is_zero() || abs(d0.constant()) != 1)
        throw Error("denominator constant term is not a unit: " + to_string(den));
    if (d0.constant() < 0) {
        num = -num;
        den = -den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunX RatFunX::from_reduced(XPoly num, XPoly den) {
    RatFunX r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

std::vector<MPoly> expand(const XPoly& num, const XPoly& den, std::size_t n) {
    if (den.is_zero() || !den[0].is_constant() || abs(den[0].constant()) != 1)
        throw Error("expansion needs den(0) = 1 or -1");
    const bool neg = den[0].constant() < 0;
    std::vector<MPoly> a(n);
    for (std::size_t k = 0; k < n; ++k) {
        MPoly acc = num.coeff(k);
        for (std::size_t i = 1; i <= k && i < den.size(); ++i)
            if (!den[i].is_zero() && !a[k - i].is_zero()) acc -= den[i] * a[k - i];
        a[k] = neg ? -acc : acc;
    }
    return a;
}

std::vector<MPoly> RatFunX::series(std::size_t n) const { return expand(num_, den_, n); }

RatFunX RatFunX::specialize(Var v, const Integer& value) const {
    return RatFunX(motzhank::specialize(num_, v, value), motzhank::specialize(den_, v, value));
}

std::string RatFunX::str() const { return "(" + to_string(num_) + ")/(" + to_string(den_) + ")"; }

} // namespace motzhank
