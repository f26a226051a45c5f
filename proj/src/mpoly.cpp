#include "motzhank/mpoly.hpp"

#include "motzhank/dense_poly.hpp"
#include "motzhank/errors.hpp"
#include "parse.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace motzhank {

namespace {

// t^a s^b -> y^(a + D*b)
ZPoly kron_pack(const MPoly& p, std::size_t D) {
    const auto& rows = p.rows();
    if (rows.empty()) return {};
    std::vector<Integer> c(D * (rows.size() - 1) + rows.back().size());
    for (std::size_t b = 0; b < rows.size(); ++b)
        for (std::size_t a = 0; a < rows[b].size(); ++a) c[a + D * b] = rows[b][a];
    return ZPoly(std::move(c));
}

MPoly kron_unpack(const ZPoly& y, std::size_t D) {
    std::vector<ZPoly> rows((y.size() + D - 1) / D);
    for (std::size_t b = 0; b < rows.size(); ++b) {
        const std::size_t lo = b * D;
        const std::size_t hi = std::min(y.size(), lo + D);
        rows[b] = ZPoly(std::vector<Integer>(y.coeffs().begin() + lo, y.coeffs().begin() + hi));
    }
    return MPoly(std::move(rows));
}

using SPoly = DensePoly<ZPoly>;

SPoly to_spoly(const MPoly& p) { return SPoly(p.rows()); }

void append_monomial(std::string& out, unsigned et, unsigned es) {
    auto put = [&](char v, unsigned e) {
        if (e == 0) return;
        if (!out.empty() && out.back() != ' ' && out.back() != '-') out += '*';
        out += v;
        if (e > 1) out += '^' + std::to_string(e);
    };
    put('t', et);
    put('s', es);
}

} // namespace

MPoly::MPoly(long c) {
    if (c != 0) rows_.emplace_back(c);
}

MPoly::MPoly(Integer c) {
    if (sgn(c) != 0) rows_.emplace_back(std::move(c));
}

MPoly::MPoly(ZPoly in_t) {
    if (!in_t.is_zero()) rows_.push_back(std::move(in_t));
}

MPoly::MPoly(std::vector<ZPoly> rows_in_s) : rows_(std::move(rows_in_s)) { trim(); }

MPoly MPoly::t() { return MPoly(ZPoly::monomial(1, 1)); }

MPoly MPoly::s() { return monomial(1, 0, 1); }

MPoly MPoly::monomial(Integer c, unsigned et, unsigned es) {
    if (sgn(c) == 0) return {};
    std::vector<ZPoly> rows(es + 1);
    rows[es] = ZPoly::monomial(std::move(c), et);
    return MPoly(std::move(rows));
}

MPoly MPoly::from_terms(const std::map<Exponents, Integer>& terms) {
    std::vector<std::vector<Integer>> raw;
    for (const auto& [e, c] : terms) {
        if (raw.size() <= e.second) raw.resize(e.second + 1);
        auto& row = raw[e.second];
        if (row.size() <= e.first) row.resize(e.first + 1);
        row[e.first] += c;
    }
    std::vector<ZPoly> rows;
    rows.reserve(raw.size());
    for (auto& r : raw) rows.emplace_back(std::move(r));
    return MPoly(std::move(rows));
}

void MPoly::trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int MPoly::deg_t() const {
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

int MPoly::total_degree() const {
    int d = -1;
    for (std::size_t b = 0; b < rows_.size(); ++b)
        if (!rows_[b].is_zero()) d = std::max(d, rows_[b].degree() + static_cast<int>(b));
    return d;
}

Integer MPoly::coeff(unsigned et, unsigned es) const {
    return es < rows_.size() ? rows_[es].coeff(et) : Integer(0);
}

std::map<MPoly::Exponents, Integer> MPoly::terms() const {
    std::map<Exponents, Integer> m;
    for (unsigned b = 0; b < rows_.size(); ++b)
        for (unsigned a = 0; a < rows_[b].size(); ++a)
            if (sgn(rows_[b][a]) != 0) m.emplace(Exponents{a, b}, rows_[b][a]);
    return m;
}

std::size_t MPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_)
        for (const auto& c : r.coeffs()) n += sgn(c) != 0;
    return n;
}

const ZPoly& MPoly::as_t_poly() const {
    static const ZPoly zero;
    if (rows_.size() > 1) throw Error("polynomial depends on s");
    return rows_.empty() ? zero : rows_[0];
}

std::size_t MPoly::max_bits() const {
    std::size_t b = 0;
    for (const auto& r : rows_) b = std::max(b, r.max_bits());
    return b;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& row : r.rows_) row = -row;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
    trim();
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
    trim();
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.rows_.size() == 1 && b.rows_.size() == 1) return MPoly(a.rows_[0] * b.rows_[0]);
    if (a.rows_.size() == 1 || b.rows_.size() == 1) {
        const MPoly& one = a.rows_.size() == 1 ? a : b;
        const MPoly& many = a.rows_.size() == 1 ? b : a;
        std::vector<ZPoly> rows;
        rows.reserve(many.rows_.size());
        for (const auto& r : many.rows_) rows.push_back(r * one.rows_[0]);
        return MPoly(std::move(rows));
    }
    const std::size_t D = static_cast<std::size_t>(a.deg_t() + b.deg_t() + 1);
    return kron_unpack(kron_pack(a, D) * kron_pack(b, D), D);
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r(1);
    MPoly b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

MPoly MPoly::eval(Var v, const Integer& value) const {
    if (v == Var::t) {
        std::vector<ZPoly> rows;
        rows.reserve(rows_.size());
        for (const auto& r : rows_) rows.emplace_back(r.eval(value));
        return MPoly(std::move(rows));
    }
    ZPoly acc;
    for (std::size_t b = rows_.size(); b-- > 0;) {
        acc *= value;
        acc += rows_[b];
    }
    return MPoly(std::move(acc));
}

MPoly MPoly::eval(Var v, const Rational& value) const {
    if (value.get_den() == 1) return eval(v, Integer(value.get_num()));
    std::map<Exponents, Integer> out;
    auto integral = [](const Rational& q) {
        if (q.get_den() != 1) throw NonIntegral("substitution leaves the integers: " + q.get_str());
        return Integer(q.get_num());
    };
    if (v == Var::t) {
        for (unsigned b = 0; b < rows_.size(); ++b) out[{0, b}] = integral(rows_[b].eval(value));
    } else {
        const int dt = deg_t();
        for (int a = 0; a <= dt; ++a) {
            Rational acc = 0;
            for (std::size_t b = rows_.size(); b-- > 0;) acc = acc * value + Rational(coeff(a, b));
            out[{static_cast<unsigned>(a), 0}] = integral(acc);
        }
    }
    return from_terms(out);
}

Rational MPoly::eval(const Rational& t, const Rational& s) const {
    Rational acc = 0;
    for (std::size_t b = rows_.size(); b-- > 0;) acc = acc * s + rows_[b].eval(t);
    return acc;
}

MPoly MPoly::compose(const MPoly& t_image, const MPoly& s_image) const {
    MPoly acc;
    for (std::size_t b = rows_.size(); b-- > 0;) {
        MPoly row;
        const ZPoly& r = rows_[b];
        for (std::size_t a = r.size(); a-- > 0;) row = row * t_image + MPoly(r[a]);
        acc = acc * s_image + row;
    }
    return acc;
}

MPoly MPoly::derivative(Var v) const {
    if (v == Var::t) {
        std::vector<ZPoly> rows;
        rows.reserve(rows_.size());
        for (const auto& r : rows_) rows.push_back(r.derivative());
        return MPoly(std::move(rows));
    }
    if (rows_.size() <= 1) return {};
    std::vector<ZPoly> rows;
    for (std::size_t b = 1; b < rows_.size(); ++b)
        rows.push_back(rows_[b] * Integer(static_cast<unsigned long>(b)));
    return MPoly(std::move(rows));
}

std::string MPoly::str() const {
    if (rows_.empty()) return "0";
    std::string out;
    const int total = total_degree();
    bool first = true;
    for (int d = 0; d <= total; ++d) {
        for (int es = 0; es <= d; ++es) {
            const int et = d - es;
            if (es >= static_cast<int>(rows_.size())) break;
            const Integer c = coeff(et, es);
            if (sgn(c) == 0) continue;
            if (first) {
                if (sgn(c) < 0) out += '-';
            } else {
                out += sgn(c) < 0 ? " - " : " + ";
            }
            first = false;
            const Integer mag = abs(c);
            if (mag != 1 || d == 0) {
                out += mag.get_str();
            }
            append_monomial(out, et, es);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

int lead_sign(const MPoly& p) {
    return p.is_zero() ? 1 : lead_sign(p.rows().back());
}

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return MPoly();
    if (!a.depends_on_s() && !b.depends_on_s()) {
        auto q = try_divide(a.as_t_poly(), b.as_t_poly());
        if (!q) return std::nullopt;
        return MPoly(std::move(*q));
    }
    if (b.deg_s() > a.deg_s() || b.deg_t() > a.deg_t()) return std::nullopt;
    const std::size_t D = static_cast<std::size_t>(a.deg_t() + 1);
    auto q = try_divide(kron_pack(a, D), kron_pack(b, D));
    if (!q) return std::nullopt;
    MPoly r = kron_unpack(*q, D);
    if (!(r * b == a)) return std::nullopt;
    return r;
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw NotDivisible();
    return *q;
}

MPoly divexact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (!a.depends_on_s() && !b.depends_on_s()) return MPoly(divexact(a.as_t_poly(), b.as_t_poly()));
    const std::size_t D = static_cast<std::size_t>(a.deg_t() + 1);
    return kron_unpack(divexact(kron_pack(a, D), kron_pack(b, D)), D);
}

Integer int_content(const MPoly& p) {
    Integer g = 0;
    for (const auto& r : p.rows()) {
        const Integer c = content(r);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (!a.depends_on_s() && !b.depends_on_s()) {
        return MPoly(gcd(a.as_t_poly(), b.as_t_poly()));
    }
    SPoly g = gcd(to_spoly(a), to_spoly(b));
    return MPoly(g.coeffs());
}

MPoly parse_mpoly(std::string_view text) {
    auto lookup = [](char c) -> std::optional<MPoly> {
        if (c == 't') return MPoly::t();
        if (c == 's') return MPoly::s();
        return std::nullopt;
    };
    return detail::ExprParser<MPoly, decltype(lookup)>(text, lookup).parse();
}

} // namespace motzhank
