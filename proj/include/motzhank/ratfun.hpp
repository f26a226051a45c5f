#pragma once

#include "motzhank/xpoly.hpp"

#include <string>
#include <vector>

namespace motzhank {

/*
 * Reduced quotient num/den of XPoly values.
 *
 * The constructor divides out gcd(num, den) and scales so that den(0) == 1;
 * two equal rational functions therefore have identical representations.
 * Throws DivisionByZero for a zero denominator and Error if den(0) is not
 * +1 or -1 after reduction.
 */
class RatFunX {
public:
    RatFunX() : den_(MPoly(1)) {}
    RatFunX(XPoly num, XPoly den);

    /// Wraps an already reduced pair with den(0) == 1, skipping the gcd.
    static RatFunX from_reduced(XPoly num, XPoly den);

    const XPoly& num() const { return num_; }
    const XPoly& den() const { return den_; }

    /// First n coefficients of the power series expansion.
    std::vector<MPoly> series(std::size_t n) const;

    RatFunX specialize(Var v, const Integer& value) const;

    std::string str() const;

    friend bool operator==(const RatFunX& a, const RatFunX& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    XPoly num_;
    XPoly den_;
};

/// Coefficients of num/den modulo x^n for den(0) == 1 or -1.
std::vector<MPoly> expand(const XPoly& num, const XPoly& den, std::size_t n);

} // namespace motzhank
