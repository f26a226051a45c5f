#pragma once

#include "motzhank/mpoly.hpp"

#include <string>

namespace motzhank {

/// a + b*alpha in Z[t,s][alpha] with alpha^2 = t*alpha - 1.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(MPoly a) : a_(std::move(a)) {}
    QuadElem(MPoly a, MPoly b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadElem alpha() { return QuadElem(MPoly(), MPoly(1)); }
    /// beta = t - alpha, the other root of y^2 - t*y + 1.
    static QuadElem beta() { return QuadElem(MPoly::t(), MPoly(-1)); }

    const MPoly& a() const { return a_; }
    const MPoly& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Image under alpha -> beta.
    QuadElem conj() const;
    /// x + conj(x), an element of Z[t,s].
    MPoly trace() const;
    /// x * conj(x) = a^2 + a*b*t + b^2.
    MPoly norm() const;

    QuadElem operator-() const { return QuadElem(-a_, -b_); }
    friend QuadElem operator+(const QuadElem& x, const QuadElem& y) {
        return QuadElem(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadElem operator-(const QuadElem& x, const QuadElem& y) {
        return QuadElem(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    QuadElem pow(unsigned n) const;
    std::string str() const;

private:
    MPoly a_;
    MPoly b_;
};

/// alpha^n.
QuadElem quad_pow(unsigned n);

/// Exact quotient x / d; throws NotDivisible if it leaves the ring.
QuadElem exact_div(const QuadElem& x, const QuadElem& d);

} // namespace motzhank
