#include "motzhank/guess.hpp"

#include "motzhank/errors.hpp"
#include "motzhank/hankel.hpp"
#include "motzhank/interpolate.hpp"

#include <algorithm>
#include <map>

namespace motzhank {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder and quotient of a / b over Q.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Rational f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

QPoly qgcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Row of integers proportional to the given rationals.
std::vector<Integer> integer_row(const std::vector<Rational>& r) {
    Integer l = 1;
    for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = Integer(r[i] * Rational(l));
    return out;
}

IntMatrix stack_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    IntMatrix M(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto r = integer_row(rows[i]);
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = r[j];
    }
    return M;
}

// Rows [a_n, a_{n-1}, ..., a_{n-r}] for n = r..L-1.
void recurrence_rows(const std::vector<Rational>& a, int r,
                     std::vector<std::vector<Rational>>& rows) {
    for (std::size_t n = r; n < a.size(); ++n) {
        std::vector<Rational> row(r + 1);
        for (int j = 0; j <= r; ++j) row[j] = a[n - j];
        rows.push_back(std::move(row));
    }
}

// A nullspace vector with nonzero first entry, scaled so that entry is 1.
std::optional<std::vector<Rational>> monic_solution(const IntMatrix& M) {
    for (const auto& v : nullspace(M)) {
        if (sgn(v[0]) == 0) continue;
        std::vector<Rational> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]) / Rational(v[0]);
        return out;
    }
    return std::nullopt;
}

bool all_zero(const std::vector<Rational>& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::optional<Recurrence> common_recurrence(const std::vector<const std::vector<Rational>*>& seqs,
                                            int r_max) {
    bool zero = true;
    for (auto* s : seqs) zero = zero && all_zero(*s);
    if (zero) return Recurrence{};
    for (int r = 1; r <= r_max; ++r) {
        std::vector<std::vector<Rational>> rows;
        for (auto* s : seqs) recurrence_rows(*s, r, rows);
        if (rows.empty()) continue;
        auto v = monic_solution(stack_rows(rows, r + 1));
        if (!v) continue;
        Recurrence rec;
        for (int i = 1; i <= r; ++i) rec.coeffs.push_back(-(*v)[i]);
        return rec;
    }
    return std::nullopt;
}

std::string qpoly_str(const QPoly& p) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p[i]) == 0) continue;
        const bool neg = sgn(p[i]) < 0;
        const Rational mag = abs(p[i]);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        const std::string xs = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (xs.empty()) out += mag.get_str();
        else if (mag == 1) out += xs;
        else out += mag.get_str() + "*" + xs;
    }
    return first ? "0" : out;
}

struct DegreeKey {
    int den = -1;
    int num = -1;
    auto operator<=>(const DegreeKey&) const = default;
};

// Lagrange interpolation of integer-valued samples; throws InconsistentFits
// when the interpolant has non-integer coefficients.
ZPoly interpolate_integral(const std::vector<Integer>& nodes, const std::vector<Rational>& values) {
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) pts.emplace_back(Rational(nodes[i]), values[i]);
    const Interpolant ip = interpolate(pts);
    if (!ip.integral) throw InconsistentFits("interpolated coefficient is not integral");
    return ip.to_zpoly();
}

std::optional<FitResult> fit_in_t(const std::vector<MPoly>& seq, int P, int D, int tdeg, int guard) {
    const std::size_t need = static_cast<std::size_t>(tdeg) + 1;
    std::vector<Integer> nodes;
    std::vector<RatFunQ> fits;
    DegreeKey best;
    const int max_evaluations = tdeg + 1 + 24;
    for (int i = 0, t0 = 2; i < max_evaluations && fits.size() < need; ++i, ++t0) {
        std::vector<Rational> spec;
        spec.reserve(seq.size());
        for (const auto& m : seq) spec.push_back(m.eval(Rational(t0), Rational(0)));
        auto f = seq_to_ratfun(spec, P, D, guard);
        if (!f) return std::nullopt;
        const DegreeKey key{f->gf.den_degree(), f->gf.num_degree()};
        if (key < best) continue;
        if (best < key) {
            best = key;
            nodes.clear();
            fits.clear();
        }
        nodes.emplace_back(t0);
        fits.push_back(std::move(f->gf));
    }
    if (fits.size() < need) throw InconsistentFits("not enough non-degenerate evaluation points");

    auto interpolate_part = [&](bool numerator, int degree) {
        std::vector<MPoly> coeffs(degree + 1);
        for (int j = 0; j <= degree; ++j) {
            std::vector<Rational> vals;
            for (const auto& f : fits) vals.push_back(numerator ? f.num[j] : f.den[j]);
            coeffs[j] = MPoly(interpolate_integral(nodes, vals));
        }
        return XPoly(std::move(coeffs));
    };
    XPoly num = best.num >= 0 ? interpolate_part(true, best.num) : XPoly();
    XPoly den = interpolate_part(false, best.den);
    if (expand(num, den, seq.size()) != seq)
        throw InconsistentFits("interpolated candidate does not reproduce the input terms");
    return FitResult{RatFunX(std::move(num), std::move(den)), seq.size()};
}

std::optional<FitResult> fit_in_s(const std::vector<MPoly>& seq, int P, int D, int deg, int guard) {
    const std::size_t need = static_cast<std::size_t>(deg) + 1;
    std::vector<Integer> nodes;
    std::vector<RatFunX> fits;
    DegreeKey best;
    const int max_evaluations = deg + 1 + 24;
    for (int i = 0, s0 = 2; i < max_evaluations && fits.size() < need; ++i, ++s0) {
        std::vector<MPoly> spec;
        spec.reserve(seq.size());
        for (const auto& m : seq) spec.push_back(m.eval(Var::s, Integer(s0)));
        auto f = symbolic_fit(spec, P, D, deg, guard);
        if (!f) return std::nullopt;
        const DegreeKey key{f->gf.den().degree(), f->gf.num().degree()};
        if (key < best) continue;
        if (best < key) {
            best = key;
            nodes.clear();
            fits.clear();
        }
        nodes.emplace_back(s0);
        fits.push_back(std::move(f->gf));
    }
    if (fits.size() < need) throw InconsistentFits("not enough non-degenerate evaluation points");

    auto interpolate_part = [&](bool numerator, int degree) {
        std::vector<MPoly> coeffs(degree + 1);
        for (int j = 0; j <= degree; ++j) {
            int tdeg = -1;
            for (const auto& f : fits)
                tdeg = std::max(tdeg, (numerator ? f.num() : f.den()).coeff(j).deg_t());
            std::map<MPoly::Exponents, Integer> terms;
            for (int a = 0; a <= tdeg; ++a) {
                std::vector<Rational> vals;
                for (const auto& f : fits)
                    vals.emplace_back((numerator ? f.num() : f.den()).coeff(j).coeff(a, 0));
                const ZPoly in_s = interpolate_integral(nodes, vals);
                for (std::size_t b = 0; b < in_s.size(); ++b)
                    if (sgn(in_s[b]) != 0)
                        terms[{static_cast<unsigned>(a), static_cast<unsigned>(b)}] = in_s[b];
            }
            coeffs[j] = MPoly::from_terms(terms);
        }
        return XPoly(std::move(coeffs));
    };
    XPoly num = best.num >= 0 ? interpolate_part(true, best.num) : XPoly();
    XPoly den = interpolate_part(false, best.den);
    if (expand(num, den, seq.size()) != seq)
        throw InconsistentFits("interpolated candidate does not reproduce the input terms");
    return FitResult{RatFunX(std::move(num), std::move(den)), seq.size()};
}

} // namespace

bool Recurrence::annihilates(const std::vector<Rational>& seq) const {
    const std::size_t r = coeffs.size();
    for (std::size_t n = r; n < seq.size(); ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= r; ++i) acc += coeffs[i - 1] * seq[n - i];
        if (acc != seq[n]) return false;
    }
    return true;
}

std::string Recurrence::str() const {
    if (coeffs.empty()) return "a(n) = 0";
    std::string out = "a(n) =";
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational& c = coeffs[i];
        if (sgn(c) == 0) continue;
        const std::string term = "a(n-" + std::to_string(i + 1) + ")";
        const Rational mag = abs(c);
        out += first ? (sgn(c) < 0 ? " -" : " ") : (sgn(c) < 0 ? " - " : " + ");
        first = false;
        out += mag == 1 ? term : mag.get_str() + "*" + term;
    }
    if (first) out += " 0";
    return out;
}

std::vector<Rational> RatFunQ::series(std::size_t n) const {
    std::vector<Rational> a(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = k < num.size() ? num[k] : Rational(0);
        for (std::size_t i = 1; i <= k && i < den.size(); ++i) acc -= den[i] * a[k - i];
        a[k] = acc / den[0];
    }
    return a;
}

RatFunX RatFunQ::to_ratfunx() const {
    auto lift = [](const QPoly& p) {
        std::vector<MPoly> c;
        for (const auto& q : p) {
            if (q.get_den() != 1) throw NonIntegral("coefficient " + q.get_str() + " is not an integer");
            c.emplace_back(Integer(q.get_num()));
        }
        return XPoly(std::move(c));
    };
    return RatFunX::from_reduced(lift(num), lift(den));
}

std::string RatFunQ::str() const { return "(" + qpoly_str(num) + ")/(" + qpoly_str(den) + ")"; }

std::vector<Rational> to_rationals(const std::vector<Integer>& seq) {
    return std::vector<Rational>(seq.begin(), seq.end());
}

std::vector<Rational> to_rationals(const std::vector<MPoly>& seq) {
    std::vector<Rational> out;
    out.reserve(seq.size());
    for (const auto& m : seq) {
        if (!m.is_constant()) throw Error("sequence term is not a constant: " + m.str());
        out.emplace_back(m.constant());
    }
    return out;
}

std::optional<Recurrence> find_c_finite(const std::vector<Rational>& seq, int r_max, int guard) {
    const std::size_t need = static_cast<std::size_t>(2 * r_max + guard);
    if (seq.size() < need) throw InsufficientTerms(seq.size(), need);
    return common_recurrence({&seq}, r_max);
}

std::optional<FitResultQ> seq_to_ratfun(const std::vector<Rational>& seq, int P, int Dmax, int guard) {
    const std::size_t need = static_cast<std::size_t>(P + Dmax + 2 + guard);
    if (seq.size() < need) throw InsufficientTerms(seq.size(), need);
    const std::size_t L = seq.size();
    for (int D = 0; D <= Dmax; ++D) {
        std::vector<std::vector<Rational>> rows;
        for (std::size_t n = P + 1; n < L; ++n) {
            std::vector<Rational> row(D + 1);
            for (int i = 0; i <= D && static_cast<std::size_t>(i) <= n; ++i) row[i] = seq[n - i];
            rows.push_back(std::move(row));
        }
        auto q = monic_solution(stack_rows(rows, D + 1));
        if (!q) continue;
        QPoly p(P + 1);
        for (int n = 0; n <= P; ++n)
            for (int i = 0; i <= D && i <= n; ++i) p[n] += (*q)[i] * seq[n - i];
        trim(p);
        QPoly den = *q;
        trim(den);
        const QPoly g = qgcd(p, den);
        if (g.size() > 1) {
            p = divmod(p, g).first;
            den = divmod(den, g).first;
        }
        const Rational d0 = den[0];
        for (auto& c : p) c /= d0;
        for (auto& c : den) c /= d0;
        RatFunQ gf{p, den};
        if (gf.series(L) != seq) continue;
        return FitResultQ{std::move(gf), L};
    }
    return std::nullopt;
}

std::optional<FitResult> symbolic_fit(const std::vector<MPoly>& seq, int num_deg_max,
                                      int den_deg_max, int t_deg_max, int guard) {
    const std::size_t need = static_cast<std::size_t>(num_deg_max + den_deg_max + 2 + guard);
    if (seq.size() < need) throw InsufficientTerms(seq.size(), need);
    const bool has_s = std::any_of(seq.begin(), seq.end(), [](const MPoly& m) { return m.depends_on_s(); });
    if (has_s) return fit_in_s(seq, num_deg_max, den_deg_max, t_deg_max, guard);
    const bool has_t = std::any_of(seq.begin(), seq.end(), [](const MPoly& m) { return m.deg_t() > 0; });
    if (has_t) return fit_in_t(seq, num_deg_max, den_deg_max, t_deg_max, guard);
    auto f = seq_to_ratfun(to_rationals(seq), num_deg_max, den_deg_max, guard);
    if (!f) return std::nullopt;
    return FitResult{f->gf.to_ratfunx(), f->verified_terms};
}

std::string to_string(RecurrenceVerdict v) {
    switch (v) {
    case RecurrenceVerdict::identical: return "identical";
    case RecurrenceVerdict::same_order: return "same-order";
    case RecurrenceVerdict::neither: return "neither";
    }
    return "neither";
}

RecurrenceVerdict same_recurrence(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                  int r, int guard) {
    const auto ra = find_c_finite(a, r, guard);
    const auto rb = find_c_finite(b, r, guard);
    if (!ra || !rb) return RecurrenceVerdict::neither;
    if (common_recurrence({&a, &b}, r)) return RecurrenceVerdict::identical;
    return RecurrenceVerdict::same_order;
}

} // namespace motzhank
