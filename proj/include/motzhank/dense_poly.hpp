#pragma once

#include "motzhank/errors.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace motzhank {

/*
 * Dense univariate polynomial over a coefficient ring R.
 *
 * R must provide ring operators, equality, a member is_zero() and the free
 * functions try_divide, gcd and lead_sign. Division and gcd here are
 * fraction free: long division succeeds only if every step is exact in R,
 * and gcd is computed by a primitive pseudo-remainder sequence.
 */
template <class R>
class DensePoly {
public:
    DensePoly() = default;
    DensePoly(R c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit DensePoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DensePoly monomial(R c, std::size_t exponent) {
        DensePoly p;
        if (c.is_zero()) return p;
        p.c_.resize(exponent + 1);
        p.c_[exponent] = std::move(c);
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const R& operator[](std::size_t i) const { return c_[i]; }
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }
    const R& lead() const { return c_.back(); }
    const std::vector<R>& coeffs() const { return c_; }
    std::vector<R>& raw() { return c_; }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    DensePoly operator-() const {
        DensePoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    DensePoly& operator+=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> c(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
        }
        return DensePoly(std::move(c));
    }
    friend DensePoly operator*(DensePoly a, const R& s) {
        if (s.is_zero()) return {};
        for (auto& c : a.c_) c = c * s;
        a.trim();
        return a;
    }
    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

    /// Truncation modulo x^n.
    DensePoly truncate(std::size_t n) const {
        if (c_.size() <= n) return *this;
        return DensePoly(std::vector<R>(c_.begin(), c_.begin() + n));
    }

    /// Coefficients reversed with respect to the given degree.
    DensePoly reversed(std::size_t deg) const {
        std::vector<R> r(deg + 1);
        for (std::size_t i = 0; i < c_.size() && i <= deg; ++i) r[deg - i] = c_[i];
        return DensePoly(std::move(r));
    }

    R eval(const R& x) const {
        R r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

private:
    std::vector<R> c_;
};

template <class R>
bool is_zero(const DensePoly<R>& p) {
    return p.is_zero();
}

template <class R>
int lead_sign(const DensePoly<R>& p) {
    return p.is_zero() ? 1 : lead_sign(p.lead());
}

/// Product truncated modulo x^n.
template <class R>
DensePoly<R> mul_trunc(const DensePoly<R>& a, const DensePoly<R>& b, std::size_t n) {
    if (a.is_zero() || b.is_zero() || n == 0) return {};
    std::vector<R> c(std::min(n, a.size() + b.size() - 1));
    for (std::size_t i = 0; i < a.size() && i < c.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < c.size(); ++j)
            if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
    }
    return DensePoly<R>(std::move(c));
}

template <class R>
std::optional<DensePoly<R>> try_divide(const DensePoly<R>& a, const DensePoly<R>& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return DensePoly<R>();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<R> r = a.coeffs();
    const std::size_t nb = b.size();
    const std::size_t nq = a.size() - nb + 1;
    std::vector<R> q(nq);
    for (std::size_t k = nq; k-- > 0;) {
        const R& top = r[k + nb - 1];
        if (top.is_zero()) continue;
        auto qk = try_divide(top, b.lead());
        if (!qk) return std::nullopt;
        q[k] = std::move(*qk);
        for (std::size_t j = 0; j < nb; ++j)
            if (!b[j].is_zero()) r[k + j] -= q[k] * b[j];
    }
    for (std::size_t i = 0; i + 1 < nb; ++i)
        if (!r[i].is_zero()) return std::nullopt;
    return DensePoly<R>(std::move(q));
}

template <class R>
DensePoly<R> exact_div(const DensePoly<R>& a, const DensePoly<R>& b) {
    auto q = try_divide(a, b);
    if (!q) throw NotDivisible();
    return *q;
}

template <class R>
DensePoly<R> pseudo_rem(const DensePoly<R>& a, const DensePoly<R>& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return a;
    std::vector<R> r = a.coeffs();
    const std::size_t nb = b.size();
    const R& lb = b.lead();
    for (std::size_t top = r.size() - 1;; --top) {
        R lead = r[top];
        for (std::size_t i = 0; i < top; ++i)
            if (!r[i].is_zero()) r[i] = r[i] * lb;
        if (!lead.is_zero())
            for (std::size_t j = 0; j + 1 < nb; ++j)
                if (!b[j].is_zero()) r[top - (nb - 1) + j] -= lead * b[j];
        r[top] = R();
        if (top == nb - 1) break;
    }
    return DensePoly<R>(std::move(r));
}

/// gcd of the coefficients, normalized by the coefficient ring.
template <class R>
R content(const DensePoly<R>& p) {
    R g;
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return g;
}

template <class R>
DensePoly<R> primitive_part(const DensePoly<R>& p) {
    if (p.is_zero()) return p;
    R c = content(p);
    if (lead_sign(p.lead()) < 0) c = -c;
    std::vector<R> q;
    q.reserve(p.size());
    for (const auto& x : p.coeffs()) q.push_back(exact_div(x, c));
    return DensePoly<R>(std::move(q));
}

/// gcd with the content kept and a leading coefficient of positive sign.
template <class R>
DensePoly<R> gcd(const DensePoly<R>& a, const DensePoly<R>& b) {
    if (a.is_zero()) return lead_sign(b) < 0 ? -b : b;
    if (b.is_zero()) return lead_sign(a) < 0 ? -a : a;
    const R c = gcd(content(a), content(b));
    DensePoly<R> u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero() && v.degree() > 0) {
        DensePoly<R> r = pseudo_rem(u, v);
        u = std::move(v);
        v = primitive_part(r);
    }
    if (!v.is_zero()) return DensePoly<R>(c);
    return u * c;
}

} // namespace motzhank
