#include "motzhank/motzkin.hpp"

#include "motzhank/errors.hpp"

#include <map>
#include <mutex>

namespace motzhank {

MPoly WeightParams::level_weight() const { return t ? MPoly(*t) : MPoly::t(); }

MPoly WeightParams::ground_weight() const {
    if (mode == Weighting::uniform_t) return level_weight();
    return s ? MPoly(*s) : MPoly::s();
}

std::string WeightParams::key() const {
    std::string k = mode == Weighting::uniform_t ? "uniform_t" : "split_ts";
    if (t) k += ",t=" + t->get_str();
    if (mode == Weighting::split_ts && s) k += ",s=" + s->get_str();
    return k;
}

MotzkinTable::MotzkinTable(int N, const WeightParams& w) : N_(N), w_(w) {
    if (N < 0) throw Error("table size must be non-negative");
    const MPoly level = w.level_weight();
    const MPoly ground = w.ground_weight();
    rows_.reserve(N + 1);
    rows_.push_back({MPoly(1)});
    for (int n = 1; n <= N; ++n) {
        const auto& prev = rows_.back();
        std::vector<MPoly> cur(n + 1);
        for (int k = 0; k <= n; ++k) {
            MPoly v;
            if (k >= 1) v += prev[k - 1];
            if (k <= n - 1 && !prev[k].is_zero()) v += (k == 0 ? ground : level) * prev[k];
            if (k + 1 <= n - 1) v += prev[k + 1];
            cur[k] = std::move(v);
        }
        rows_.push_back(std::move(cur));
    }
}

const MPoly& MotzkinTable::at(int n, int k) const {
    static const MPoly zero;
    if (n > N_) throw TableTooSmall("row " + std::to_string(n) + " exceeds table size " +
                                    std::to_string(N_));
    if (n < 0 || k < 0 || k > n) return zero;
    return rows_[n][k];
}

const std::vector<MPoly>& MotzkinTable::row(int n) const {
    if (n > N_ || n < 0) throw TableTooSmall("row " + std::to_string(n) + " not in table");
    return rows_[n];
}

MotzkinTable build_table(int N, const WeightParams& w) { return MotzkinTable(N, w); }

std::shared_ptr<const MotzkinTable> shared_table(int N, const WeightParams& w) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const MotzkinTable>> cache;
    const std::string key = w.key();
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->rows() >= N) return it->second;
    }
    auto table = std::make_shared<const MotzkinTable>(N, w);
    std::lock_guard lock(mu);
    auto& slot = cache[key];
    if (!slot || slot->rows() < N) slot = table;
    return slot;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer catalan(unsigned long j) {
    Integer num = 1, den = 1;
    for (unsigned long i = 2; i <= j; ++i) {
        num *= j + i;
        den *= i;
    }
    return num / den;
}

MPoly motzkin_poly(int n) {
    std::vector<Integer> c(n + 1);
    for (int j = 0; 2 * j <= n; ++j) c[n - 2 * j] = binomial(n, 2 * j) * catalan(j);
    return MPoly(ZPoly(std::move(c)));
}

Integer ballot(long n, long k) {
    if (k < 0 || n < k || (n - k) % 2 != 0) return 0;
    const long j = (n - k) / 2;
    return binomial(n, j) - binomial(n, j - 1);
}

MPoly column_poly(int n, int k) {
    if (k < 1) throw Error("column_poly needs k >= 1");
    if (n < k) return {};
    std::vector<Integer> c(n - k + 1);
    for (int j = 0; 2 * j <= n - k; ++j)
        c[n - 2 * j - k] = ballot(k + 2 * j, k) * binomial(n, 2 * j + k);
    return MPoly(ZPoly(std::move(c)));
}

} // namespace motzhank
