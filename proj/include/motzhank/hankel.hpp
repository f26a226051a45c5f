#pragma once

#include "motzhank/errors.hpp"
#include "motzhank/matrix.hpp"
#include "motzhank/motzkin.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace motzhank {

/// The sequence n -> det(M_{m+i+j,k})_{i,j<n} under weighting w.
struct HankelSpec {
    int m = 0;
    int k = 0;
    WeightParams w;

    std::string key() const;
};

/// Entry (i,j) = M_{m+i+j,k}; throws TableTooSmall if the table lacks row m+2(n-1).
SquareMatrix hankel_matrix(const MotzkinTable& table, int m, int k, int n);
SquareMatrix hankel_matrix(const HankelSpec& spec, int n);

namespace detail {

inline bool is_zero_scalar(const MPoly& x) { return x.is_zero(); }
inline bool is_zero_scalar(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero_scalar(const Rational& x) { return sgn(x) == 0; }

inline MPoly quotient(const MPoly& a, const MPoly& b) { return divexact(a, b); }
inline Integer quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline Rational quotient(const Rational& a, const Rational& b) { return a / b; }

} // namespace detail

/*
 * Leading principal minors det(A[0..n, 0..n]) for n = 1..A.rows(), from one
 * fraction-free elimination pass.
 *
 * At step j the pivot is the first row at or below j with a nonzero entry in
 * column j. If that row is p > j, every leading minor of order j+1..p is zero;
 * if there is none, all minors of order > j vanish. Otherwise the minor of
 * order j+1 is the pivot times the sign of the swaps made so far.
 */
template <class S>
std::vector<S> leading_minors(Matrix<S> A) {
    const Eigen::Index n = A.rows();
    std::vector<S> minors(static_cast<std::size_t>(n));
    S prev(1);
    int sign = 1;
    Eigen::Index dead_until = 0;  // minors of order <= dead_until are zero
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::Index p = j;
        while (p < n && detail::is_zero_scalar(A(p, j))) ++p;
        if (p == n) return minors;  // remaining entries stay zero
        if (p != j) {
            A.row(j).swap(A.row(p));
            sign = -sign;
            dead_until = std::max(dead_until, p);
        }
        if (j + 1 > dead_until) minors[j] = sign > 0 ? A(j, j) : S(-A(j, j));
        const S& piv = A(j, j);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const bool lead_zero = detail::is_zero_scalar(A(i, j));
            for (Eigen::Index l = j + 1; l < n; ++l) {
                S v = piv * A(i, l);
                if (!lead_zero && !detail::is_zero_scalar(A(j, l))) v = v - A(i, j) * A(j, l);
                A(i, l) = j == 0 ? std::move(v) : detail::quotient(v, prev);
            }
            A(i, j) = S();
        }
        prev = piv;
    }
    return minors;
}

/// Determinant by fraction-free elimination with row swaps.
template <class S>
S det_bareiss(Matrix<S> A) {
    const Eigen::Index n = A.rows();
    if (A.cols() != n) throw Error("determinant of a non-square matrix");
    if (n == 0) return S(1);
    S prev(1);
    int sign = 1;
    for (Eigen::Index j = 0; j + 1 < n; ++j) {
        Eigen::Index p = j;
        while (p < n && detail::is_zero_scalar(A(p, j))) ++p;
        if (p == n) return S();
        if (p != j) {
            A.row(j).swap(A.row(p));
            sign = -sign;
        }
        const S& piv = A(j, j);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const bool lead_zero = detail::is_zero_scalar(A(i, j));
            for (Eigen::Index l = j + 1; l < n; ++l) {
                S v = piv * A(i, l);
                if (!lead_zero && !detail::is_zero_scalar(A(j, l))) v = v - A(i, j) * A(j, l);
                A(i, l) = j == 0 ? std::move(v) : detail::quotient(v, prev);
            }
            A(i, j) = S();
        }
        prev = piv;
    }
    const S& last = A(n - 1, n - 1);
    return sign > 0 ? last : S(-last);
}

/// Marker returned by det_condensation when a zero interior minor blocks the division.
struct Fallback {
    friend bool operator==(Fallback, Fallback) { return true; }
};

/// Dodgson condensation; Fallback signals that det_bareiss must be used instead.
std::variant<MPoly, Fallback> det_condensation(const SquareMatrix& A);

/// Laplace expansion along the first row; orders up to 6 only.
MPoly det_cofactor(const SquareMatrix& A);

/// [d(0) = 1, d(1), ..., d(N)]. Results are memoized per spec.
std::vector<MPoly> det_sequence(const HankelSpec& spec, int N);

/// Integer vectors spanning the right nullspace of A, each primitive with a
/// positive last nonzero entry.
std::vector<std::vector<Integer>> nullspace(const IntMatrix& A);

} // namespace motzhank
