#include "motzhank/quad.hpp"

#include "motzhank/errors.hpp"

namespace motzhank {

QuadElem QuadElem::conj() const { return QuadElem(a_ + b_ * MPoly::t(), -b_); }

MPoly QuadElem::trace() const { return a_ + a_ + b_ * MPoly::t(); }

MPoly QuadElem::norm() const { return a_ * a_ + a_ * b_ * MPoly::t() + b_ * b_; }

// (a + b alpha)(c + d alpha) = ac - bd + (ad + bc + bd t) alpha
QuadElem operator*(const QuadElem& x, const QuadElem& y) {
    const MPoly bd = x.b_ * y.b_;
    return QuadElem(x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ + bd * MPoly::t());
}

QuadElem QuadElem::pow(unsigned n) const {
    QuadElem r(MPoly(1));
    QuadElem b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

std::string QuadElem::str() const {
    if (b_.is_zero()) return a_.str();
    std::string out;
    if (!a_.is_zero()) out = a_.str() + " + ";
    return out + "(" + b_.str() + ")*alpha";
}

QuadElem quad_pow(unsigned n) { return QuadElem::alpha().pow(n); }

QuadElem exact_div(const QuadElem& x, const QuadElem& d) {
    if (d.is_zero()) throw DivisionByZero();
    const MPoly n = d.norm();
    const QuadElem p = x * d.conj();
    return QuadElem(exact_div(p.a(), n), exact_div(p.b(), n));
}

} // namespace motzhank
