#pragma once

#include "motzhank/zpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motzhank {

enum class Var { t, s };

/*
 * Polynomial in t and s with integer coefficients.
 *
 * Stored as the list of its coefficients in s, each a ZPoly in t, with no
 * trailing zero rows; equal polynomials have equal storage. A polynomial
 * free of s has a single row and all its arithmetic is univariate.
 */
class MPoly {
public:
    using Exponents = std::pair<unsigned, unsigned>;  // (e_t, e_s)

    MPoly() = default;
    MPoly(long c);
    MPoly(Integer c);
    MPoly(ZPoly in_t);
    explicit MPoly(std::vector<ZPoly> rows_in_s);

    static MPoly t();
    static MPoly s();
    static MPoly var(Var v) { return v == Var::t ? t() : s(); }
    static MPoly monomial(Integer c, unsigned et, unsigned es);
    static MPoly from_terms(const std::map<Exponents, Integer>& terms);

    bool is_zero() const { return rows_.empty(); }
    bool is_constant() const { return rows_.size() <= 1 && (rows_.empty() || rows_[0].size() <= 1); }
    bool depends_on_s() const { return rows_.size() > 1; }
    int deg_t() const;
    int deg_s() const { return static_cast<int>(rows_.size()) - 1; }
    int degree(Var v) const { return v == Var::t ? deg_t() : deg_s(); }
    int total_degree() const;

    Integer coeff(unsigned et, unsigned es) const;
    /// Constant term.
    Integer constant() const { return coeff(0, 0); }
    std::map<Exponents, Integer> terms() const;
    std::size_t term_count() const;

    const std::vector<ZPoly>& rows() const { return rows_; }
    /// The polynomial as a ZPoly in t; requires !depends_on_s().
    const ZPoly& as_t_poly() const;
    std::size_t max_bits() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.rows_ == b.rows_; }

    MPoly pow(unsigned e) const;

    /// Substitutes an integer value for one variable.
    MPoly eval(Var v, const Integer& value) const;
    /// Substitutes a rational value; throws NonIntegral if the result leaves Z[t,s].
    MPoly eval(Var v, const Rational& value) const;
    /// Full evaluation at rational (t, s).
    Rational eval(const Rational& t, const Rational& s) const;
    /// Substitutes polynomials for t and s.
    MPoly compose(const MPoly& t_image, const MPoly& s_image) const;

    MPoly derivative(Var v) const;

    /// Canonical text: increasing total degree, then higher powers of t first.
    std::string str() const;

private:
    void trim();
    std::vector<ZPoly> rows_;
};

int lead_sign(const MPoly& p);
inline bool is_zero(const MPoly& p) { return p.is_zero(); }

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);
/// Checked exact division; throws NotDivisible or DivisionByZero.
MPoly exact_div(const MPoly& a, const MPoly& b);
/// Exact quotient without the divisibility check (b must divide a).
MPoly divexact(const MPoly& a, const MPoly& b);

/// Non-negative gcd of all integer coefficients.
Integer int_content(const MPoly& p);
/// gcd in Z[t,s] including the integer content, positive lead (s-major order).
MPoly gcd(const MPoly& a, const MPoly& b);

MPoly parse_mpoly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const MPoly& p);

} // namespace motzhank
