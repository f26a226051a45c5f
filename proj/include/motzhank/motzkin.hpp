#pragma once

#include "motzhank/mpoly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace motzhank {

enum class Weighting {
    uniform_t,  ///< every horizontal step has weight t
    split_ts,   ///< horizontal steps at height 0 have weight s, the others t
};

struct WeightParams {
    Weighting mode = Weighting::uniform_t;
    std::optional<Integer> t;  ///< specialization of t
    std::optional<Integer> s;  ///< specialization of s (split_ts only)

    static WeightParams uniform() { return {}; }
    static WeightParams split() { return {Weighting::split_ts, std::nullopt, std::nullopt}; }

    /// Weight of a horizontal step away from the ground.
    MPoly level_weight() const;
    /// Weight of a horizontal step on the ground.
    MPoly ground_weight() const;
    /// Stable text key, e.g. "split_ts,t=2,s=1".
    std::string key() const;

    friend bool operator==(const WeightParams&, const WeightParams&) = default;
};

/// Rows 0..N of the weighted Motzkin triangle M_{n,k}.
class MotzkinTable {
public:
    MotzkinTable(int N, const WeightParams& w);

    int rows() const { return N_; }
    const WeightParams& weights() const { return w_; }

    /// M_{n,k}; zero outside 0 <= k <= n. Throws TableTooSmall if n > rows().
    const MPoly& at(int n, int k) const;
    const std::vector<MPoly>& row(int n) const;

private:
    int N_;
    WeightParams w_;
    std::vector<std::vector<MPoly>> rows_;
};

MotzkinTable build_table(int N, const WeightParams& w);

/// Shared immutable table with at least N rows, built once per weighting.
std::shared_ptr<const MotzkinTable> shared_table(int N, const WeightParams& w);

Integer binomial(long n, long k);
Integer catalan(unsigned long j);

/// sum_j C(n,2j) Cat_j t^(n-2j).
MPoly motzkin_poly(int n);
/// Non-negative up/down paths from (0,0) to (n,k); zero unless n >= k >= 0 with n - k even.
Integer ballot(long n, long k);
/// sum_j a(k+2j,k) C(n,2j+k) t^(n-2j-k) for k >= 1.
MPoly column_poly(int n, int k);

} // namespace motzhank
