#pragma once

#include "motzhank/hankel.hpp"
#include "motzhank/polyfam.hpp"
#include "motzhank/report.hpp"
#include "motzhank/xpoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace motzhank {

/// First nonzero coefficient beyond the numerator bound.
struct Residual {
    std::size_t index = 0;
    MPoly value;
};

/// (sum seq_n x^n) * den truncated to seq.size() terms. Returns the numerator
/// if every coefficient past deg_bound vanishes, otherwise the first
/// nonzero one. Throws InsufficientTerms if seq.size() < deg_bound + tail + 1.
std::variant<XPoly, Residual> check_numerator(const std::vector<MPoly>& seq, const XPoly& den,
                                              int deg_bound, int tail);

struct PalindromeResult {
    bool is_reciprocal = false;
    int sign = 0;  ///< +1 or -1 when reciprocal
};

/// Tests x^deg p(1/x) = sign * p(x) with deg = p.degree().
PalindromeResult palindrome_check(const XPoly& p);
/// Same test against an explicit degree.
PalindromeResult palindrome_check(const XPoly& p, int deg);

/// Sign law at t = 2: 1, (-1)^m, (-1)^C(m,2), (-1)^C(m+1,2) for k = 0, 3, 1, 2 mod 4.
int epsilon(int k, int m);

struct VerifyConfig {
    int k_max = 2;
    int m_max = 3;
    int n_max = 20;
    int jobs = 1;
    int tail = 10;
    int guard = 5;
    bool timing = false;
    int thm_m_max = 5;       ///< orders for the binomial-denominator theorem
    int t1_max_order = 6;    ///< orders at t = 1
    int t2_k_max = 3;        ///< sign law and degree at t = 2
    int t2_m_max = 3;
    int catalan_m_max = 5;
    int catalan_n_max = 8;
    int conj14_k_max = 3;
    int conj14_n_max = 8;
    int recurrence_sum_max = 4;  ///< k + m bound for recurrence comparison
    int recurrence_pairs = 3;
    int triangle_k_max = 2;      ///< bounds at (t, s) = (2, 1)
    int triangle_m_max = 2;
    int identity_k_max = 3;      ///< k bound for the s-shift identity
    int gf_k_max = 3;            ///< k bound for the column generating functions
    int d1_n_max = 25;
};

/// One independent unit of verification work.
struct ClaimJob {
    std::string claim_id;
    std::string group;
    std::function<VerificationReport()> run;
};

/// Every job of the harness for the given bounds, in a fixed order.
std::vector<ClaimJob> all_jobs(const VerifyConfig& cfg);

/// Known claim ids and group names accepted by run_claims.
std::vector<std::string> claim_names(const VerifyConfig& cfg);

/// Runs the selected jobs ("all", a claim id or a group name) on cfg.jobs
/// threads; reports come back sorted by report_less. Throws Error when
/// nothing matches.
std::vector<VerificationReport> run_claims(const std::string& selector, const VerifyConfig& cfg);

} // namespace motzhank
