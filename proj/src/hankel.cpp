#include "motzhank/hankel.hpp"

#include "motzhank/errors.hpp"

#include <map>
#include <mutex>

namespace motzhank {

std::string HankelSpec::key() const {
    return "m=" + std::to_string(m) + ",k=" + std::to_string(k) + "," + w.key();
}

SquareMatrix hankel_matrix(const MotzkinTable& table, int m, int k, int n) {
    if (n < 0) throw Error("matrix order must be non-negative");
    if (n > 0 && m + 2 * (n - 1) > table.rows())
        throw TableTooSmall("hankel matrix needs row " + std::to_string(m + 2 * (n - 1)) +
                            ", table has " + std::to_string(table.rows()));
    SquareMatrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = table.at(m + i + j, k);
    return A;
}

SquareMatrix hankel_matrix(const HankelSpec& spec, int n) {
    return hankel_matrix(*shared_table(std::max(0, spec.m + 2 * (n - 1)), spec.w), spec.m, spec.k, n);
}

std::variant<MPoly, Fallback> det_condensation(const SquareMatrix& A) {
    const Eigen::Index n = A.rows();
    if (A.cols() != n) throw Error("determinant of a non-square matrix");
    if (n == 0) return MPoly(1);
    SquareMatrix inner = SquareMatrix::Constant(n + 1, n + 1, MPoly(1));
    SquareMatrix cur = A;
    for (Eigen::Index size = n - 1; size >= 1; --size) {
        SquareMatrix next(size, size);
        for (Eigen::Index i = 0; i < size; ++i) {
            for (Eigen::Index j = 0; j < size; ++j) {
                const MPoly& d = inner(i + 1, j + 1);
                if (d.is_zero()) return Fallback{};
                const MPoly v = cur(i, j) * cur(i + 1, j + 1) - cur(i, j + 1) * cur(i + 1, j);
                next(i, j) = exact_div(v, d);
            }
        }
        inner = std::move(cur);
        cur = std::move(next);
    }
    return cur(0, 0);
}

namespace {

MPoly cofactor_rec(const SquareMatrix& A) {
    const Eigen::Index n = A.rows();
    if (n == 0) return MPoly(1);
    if (n == 1) return A(0, 0);
    MPoly det;
    for (Eigen::Index c = 0; c < n; ++c) {
        if (A(0, c).is_zero()) continue;
        SquareMatrix minor(n - 1, n - 1);
        for (Eigen::Index i = 1; i < n; ++i)
            for (Eigen::Index j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = A(i, j);
        const MPoly term = A(0, c) * cofactor_rec(minor);
        if (c % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

} // namespace

MPoly det_cofactor(const SquareMatrix& A) {
    if (A.rows() != A.cols()) throw Error("determinant of a non-square matrix");
    if (A.rows() > 6) throw Error("cofactor expansion is limited to order 6");
    return cofactor_rec(A);
}

std::vector<MPoly> det_sequence(const HankelSpec& spec, int N) {
    if (N < 0) throw Error("sequence length must be non-negative");
    static std::mutex mu;
    static std::map<std::string, std::vector<MPoly>> memo;
    const std::string key = spec.key();
    {
        std::lock_guard lock(mu);
        auto it = memo.find(key);
        if (it != memo.end() && static_cast<int>(it->second.size()) > N)
            return std::vector<MPoly>(it->second.begin(), it->second.begin() + N + 1);
    }
    std::vector<MPoly> out{MPoly(1)};
    if (N > 0) {
        const SquareMatrix H = hankel_matrix(spec, N);
        const bool numeric =
            spec.w.t && (spec.w.mode == Weighting::uniform_t || spec.w.s.has_value());
        if (numeric) {
            IntMatrix Z(N, N);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) Z(i, j) = H(i, j).constant();
            for (auto& d : leading_minors(std::move(Z))) out.emplace_back(std::move(d));
        } else {
            for (auto& d : leading_minors(H)) out.push_back(std::move(d));
        }
    }
    std::lock_guard lock(mu);
    auto& slot = memo[key];
    if (slot.size() < out.size()) slot = out;
    return out;
}

std::vector<std::vector<Integer>> nullspace(const IntMatrix& A) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    IntMatrix M = A;
    std::vector<Eigen::Index> pivot_col;
    Integer prev = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && sgn(M(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r) M.row(r).swap(M.row(p));
        const Integer piv = M(r, c);
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index l = c + 1; l < cols; ++l) {
                Integer v = piv * M(i, l) - M(i, c) * M(r, l);
                mpz_divexact(M(i, l).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            M(i, c) = 0;
        }
        prev = piv;
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Integer>> basis;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols);
        x[f] = 1;
        for (Eigen::Index row = static_cast<Eigen::Index>(pivot_col.size()); row-- > 0;) {
            const Eigen::Index pc = pivot_col[row];
            Rational acc = 0;
            for (Eigen::Index l = pc + 1; l < cols; ++l)
                if (sgn(x[l]) != 0 && sgn(M(row, l)) != 0) acc += Rational(M(row, l)) * x[l];
            x[pc] = -acc / Rational(M(row, pc));
        }
        Integer lcm = 1;
        for (const auto& q : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Integer> v(cols);
        Integer g = 0;
        for (Eigen::Index i = 0; i < cols; ++i) {
            v[i] = Integer(x[i] * Rational(lcm));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
        }
        Eigen::Index last = cols - 1;
        while (last > 0 && sgn(v[last]) == 0) --last;
        if (sgn(v[last]) < 0) g = -g;
        for (auto& e : v) e /= g;
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace motzhank
