#pragma once

#include "motzhank/mpoly.hpp"
#include "motzhank/ratfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace motzhank {

constexpr int kDefaultGuard = 5;

/// a_n = c_1 a_{n-1} + ... + c_r a_{n-r}.
struct Recurrence {
    std::vector<Rational> coeffs;  ///< c_1..c_r

    int order() const { return static_cast<int>(coeffs.size()); }
    /// True if the relation holds for every n in [order, seq.size()).
    bool annihilates(const std::vector<Rational>& seq) const;
    std::string str() const;
};

/// Rational function over Q with den[0] == 1, reduced.
struct RatFunQ {
    std::vector<Rational> num;
    std::vector<Rational> den;

    int num_degree() const { return static_cast<int>(num.size()) - 1; }
    int den_degree() const { return static_cast<int>(den.size()) - 1; }
    std::vector<Rational> series(std::size_t n) const;
    /// The same function as a RatFunX; throws NonIntegral if a coefficient is not an integer.
    RatFunX to_ratfunx() const;
    std::string str() const;
    friend bool operator==(const RatFunQ&, const RatFunQ&) = default;
};

struct FitResultQ {
    RatFunQ gf;
    std::size_t verified_terms = 0;
};

struct FitResult {
    RatFunX gf;
    std::size_t verified_terms = 0;
};

std::vector<Rational> to_rationals(const std::vector<Integer>& seq);
std::vector<Rational> to_rationals(const std::vector<MPoly>& constant_seq);

/// Minimal-order recurrence of order <= r_max with at least `guard` surplus
/// equations checked. Throws InsufficientTerms if seq.size() < 2 r_max + guard.
std::optional<Recurrence> find_c_finite(const std::vector<Rational>& seq, int r_max,
                                        int guard = kDefaultGuard);

/// Reduced p/q with deg p <= num_deg_max, deg q <= den_deg_max minimal, q(0) = 1,
/// whose expansion matches every term. Throws InsufficientTerms if
/// seq.size() < num_deg_max + den_deg_max + 2 + guard.
std::optional<FitResultQ> seq_to_ratfun(const std::vector<Rational>& seq, int num_deg_max,
                                        int den_deg_max, int guard = kDefaultGuard);

/*
 * Rational generating function over Z[t] (or Z[t,s]) by evaluation and
 * interpolation: fits at t = 2, 3, ..., keeps the points whose fitted degrees
 * are maximal, interpolates every coefficient through t_deg_max + 1 of them
 * and checks the candidate against all input terms symbolically. Sequences
 * involving s are handled by the same scheme in s over fits in t, with
 * t_deg_max bounding the degree in either variable.
 *
 * Returns nullopt if some specialization admits no fit within the bounds;
 * throws InconsistentFits if the interpolated candidate fails verification.
 */
std::optional<FitResult> symbolic_fit(const std::vector<MPoly>& seq, int num_deg_max,
                                      int den_deg_max, int t_deg_max,
                                      int guard = kDefaultGuard);

enum class RecurrenceVerdict { identical, same_order, neither };
std::string to_string(RecurrenceVerdict v);

RecurrenceVerdict same_recurrence(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                  int r, int guard = kDefaultGuard);

} // namespace motzhank
