#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace motzhank {

using Integer = mpz_class;
using Rational = mpq_class;

/*
 * Dense univariate polynomial over the integers.
 *
 * Large products and exact quotients go through Kronecker substitution: the
 * coefficients are packed into one GMP integer and a single big-integer
 * multiplication or division does the work.
 *
 * Coefficients are kept trimmed; the zero polynomial has degree() == -1.
 */
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(long c);
    explicit ZPoly(Integer c);
    explicit ZPoly(std::vector<Integer> coeffs);

    static ZPoly monomial(Integer c, std::size_t exponent);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }

    const Integer& operator[](std::size_t i) const { return c_[i]; }
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& lead() const { return c_.back(); }

    /// Largest bit length among the coefficients.
    std::size_t max_bits() const;

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const ZPoly& o);
    ZPoly& operator*=(const Integer& c);

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const Integer& c) { return a *= c; }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;
    ZPoly derivative() const;

    /// Mutable access for builders; call trim() afterwards.
    std::vector<Integer>& raw() { return c_; }
    void trim();

private:
    std::vector<Integer> c_;
};

/// Quotient of an exact division. Precondition: b != 0 and b divides a.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

/// Quotient when b divides a exactly, nullopt otherwise. Throws DivisionByZero.
std::optional<ZPoly> try_divide(const ZPoly& a, const ZPoly& b);

/// Checked exact division; throws NotDivisible or DivisionByZero.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);

/// lc(b)^(deg a - deg b + 1) * a reduced modulo b.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);

/// Non-negative gcd of the coefficients (0 for the zero polynomial).
Integer content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);

/// Greatest common divisor in Z[y] with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// +1 or -1 according to the leading coefficient (+1 for zero).
inline int lead_sign(const ZPoly& p) { return p.is_zero() ? 1 : sgn(p.lead()); }

inline bool is_zero(const ZPoly& p) { return p.is_zero(); }

} // namespace motzhank
