#include "motzhank/zpoly.hpp"

#include "motzhank/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace motzhank {

namespace {

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

std::size_t bits_of(const Integer& z) {
    return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t ceil_log2(std::size_t n) {
    return n <= 1 ? 0 : std::bit_width(n - 1);
}

// Evaluates p at 2^(kLimbBits * L). Each coefficient must fit in L limbs.
Integer pack(const ZPoly& p, std::size_t L) {
    const std::size_t n = p.size() * L;
    mpz_t pos, neg;
    mpz_init(pos);
    mpz_init(neg);
    mp_limb_t* pp = mpz_limbs_write(pos, static_cast<mp_size_t>(n));
    mp_limb_t* np = mpz_limbs_write(neg, static_cast<mp_size_t>(n));
    std::memset(pp, 0, n * sizeof(mp_limb_t));
    std::memset(np, 0, n * sizeof(mp_limb_t));
    for (std::size_t i = 0; i < p.size(); ++i) {
        const mpz_srcptr c = p[i].get_mpz_t();
        const std::size_t sz = mpz_size(c);
        if (sz == 0) continue;
        mp_limb_t* dst = (mpz_sgn(c) > 0 ? pp : np) + i * L;
        std::memcpy(dst, mpz_limbs_read(c), sz * sizeof(mp_limb_t));
    }
    mpz_limbs_finish(pos, static_cast<mp_size_t>(n));
    mpz_limbs_finish(neg, static_cast<mp_size_t>(n));
    Integer out;
    mpz_sub(out.get_mpz_t(), pos, neg);
    mpz_clear(pos);
    mpz_clear(neg);
    return out;
}

// Inverse of pack for balanced digits in (-X/2, X/2].
std::vector<Integer> unpack(const Integer& value, std::size_t L, std::size_t count) {
    std::vector<Integer> out(count);
    const int sign = sgn(value);
    if (sign == 0) return out;
    const mpz_srcptr v = value.get_mpz_t();
    const std::size_t sz = mpz_size(v);
    const mp_limb_t* src = mpz_limbs_read(v);
    Integer half, full;
    mpz_setbit(half.get_mpz_t(), L * kLimbBits - 1);
    mpz_setbit(full.get_mpz_t(), L * kLimbBits);
    int carry = 0;
    for (std::size_t i = 0; i < count; ++i) {
        Integer& d = out[i];
        const std::size_t lo = i * L;
        if (lo < sz) {
            const std::size_t take = std::min(L, sz - lo);
            mpz_ptr dz = d.get_mpz_t();
            mp_limb_t* w = mpz_limbs_write(dz, static_cast<mp_size_t>(take));
            std::memcpy(w, src + lo, take * sizeof(mp_limb_t));
            mpz_limbs_finish(dz, static_cast<mp_size_t>(take));
        }
        if (carry) d += 1;
        if (d >= half) {
            d -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        if (sign < 0) d = -d;
    }
    return out;
}

std::size_t limbs_for(std::size_t bits) { return (bits + kLimbBits - 1) / kLimbBits; }

bool use_schoolbook(std::size_t na, std::size_t nb) {
    return std::min(na, nb) <= 2 || na * nb <= 64;
}

ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
    std::vector<Integer> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return ZPoly(std::move(c));
}

ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
    const std::size_t bits =
        a.max_bits() + b.max_bits() + ceil_log2(std::min(a.size(), b.size())) + 2;
    const std::size_t L = limbs_for(bits);
    Integer prod = pack(a, L) * pack(b, L);
    return ZPoly(unpack(prod, L, a.size() + b.size() - 1));
}

// Long division. With exact=true the leading quotient coefficients use
// divexact; otherwise returns nullopt as soon as a remainder shows up.
std::optional<ZPoly> div_schoolbook(const ZPoly& a, const ZPoly& b, bool exact) {
    std::vector<Integer> r = a.coeffs();
    const std::size_t nb = b.size();
    const std::size_t nq = a.size() - nb + 1;
    std::vector<Integer> q(nq);
    const Integer& lb = b.lead();
    for (std::size_t k = nq; k-- > 0;) {
        Integer& top = r[k + nb - 1];
        if (sgn(top) != 0) {
            if (exact) {
                mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
            } else {
                if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
                mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
            }
            for (std::size_t j = 0; j < nb; ++j)
                mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    if (!exact) {
        for (std::size_t i = 0; i + 1 < nb && i < r.size(); ++i)
            if (sgn(r[i]) != 0) return std::nullopt;
    }
    return ZPoly(std::move(q));
}

// Slot size for a quotient dividing a: a Mignotte-type bound on its coefficients.
std::size_t quotient_bits(const ZPoly& a, const ZPoly& b) {
    const std::size_t nq = a.size() - b.size() + 1;
    const std::size_t q = a.max_bits() + (ceil_log2(a.size()) + 1) / 2 + nq + 3;
    return std::max(q, b.max_bits() + 2);
}

} // namespace

ZPoly::ZPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

ZPoly::ZPoly(Integer c) {
    if (sgn(c) != 0) c_.push_back(std::move(c));
}

ZPoly::ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(Integer c, std::size_t exponent) {
    ZPoly p;
    if (sgn(c) == 0) return p;
    p.c_.resize(exponent + 1);
    p.c_[exponent] = std::move(c);
    return p;
}

void ZPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

std::size_t ZPoly::max_bits() const {
    std::size_t b = 0;
    for (const auto& c : c_) b = std::max(b, bits_of(c));
    return b;
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator*=(const ZPoly& o) { return *this = *this * o; }

ZPoly& ZPoly::operator*=(const Integer& c) {
    if (sgn(c) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (use_schoolbook(a.size(), b.size())) return mul_schoolbook(a, b);
    return mul_kronecker(a, b);
}

Integer ZPoly::eval(const Integer& x) const {
    Integer r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rational ZPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rational(c_[i]);
    return r;
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ZPoly(std::move(d));
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (b.size() == 1) {
        ZPoly q = a;
        for (auto& c : q.raw()) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b[0].get_mpz_t());
        return q;
    }
    const std::size_t nq = a.size() - b.size() + 1;
    if (use_schoolbook(nq, b.size())) return *div_schoolbook(a, b, true);
    const std::size_t L = limbs_for(quotient_bits(a, b) + 1);
    Integer A = pack(a, L);
    Integer B = pack(b, L);
    mpz_divexact(A.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    return ZPoly(unpack(A, L, nq));
}

std::optional<ZPoly> try_divide(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return ZPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    if (!mpz_divisible_p(a.lead().get_mpz_t(), b.lead().get_mpz_t())) return std::nullopt;
    if (b.size() == 1) {
        ZPoly q = a;
        for (auto& c : q.raw()) {
            if (!mpz_divisible_p(c.get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b[0].get_mpz_t());
        }
        return q;
    }
    const std::size_t nq = a.size() - b.size() + 1;
    if (use_schoolbook(nq, b.size())) return div_schoolbook(a, b, false);
    const std::size_t L = limbs_for(quotient_bits(a, b) + 1);
    Integer A = pack(a, L);
    Integer B = pack(b, L);
    Integer Q, R;
    mpz_tdiv_qr(Q.get_mpz_t(), R.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    if (sgn(R) != 0) return std::nullopt;
    ZPoly q(unpack(Q, L, nq));
    if (!(q * b == a)) return std::nullopt;
    return q;
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw NotDivisible();
    return *q;
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return a;
    std::vector<Integer> r = a.coeffs();
    const std::size_t nb = b.size();
    const Integer& lb = b.lead();
    for (std::size_t top = r.size() - 1;; --top) {
        Integer lead = r[top];
        for (std::size_t i = 0; i < top; ++i) r[i] *= lb;
        for (std::size_t j = 0; j + 1 < nb; ++j)
            mpz_submul(r[top - (nb - 1) + j].get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
        r[top] = 0;
        if (top == nb - 1) break;
    }
    return ZPoly(std::move(r));
}

Integer content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return p;
    Integer c = content(p);
    if (lead_sign(p) < 0) c = -c;
    ZPoly q = p;
    for (auto& x : q.raw()) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return q;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return lead_sign(b) < 0 ? -b : b;
    if (b.is_zero()) return lead_sign(a) < 0 ? -a : a;
    Integer c;
    const Integer ca = content(a), cb = content(b);
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZPoly u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero() && v.degree() > 0) {
        ZPoly r = pseudo_rem(u, v);
        u = std::move(v);
        v = primitive_part(r);
    }
    if (!v.is_zero()) return ZPoly(c);  // constant remainder: coprime
    return u * c;
}

} // namespace motzhank
