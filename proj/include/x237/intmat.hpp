#pragma once

#include "x237/numeric.hpp"

#include <vector>

namespace x237 {

/// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {
        if (rows < 0 || cols < 0) throw MathError("IntMatrix: negative dimensions");
    }
    static IntMatrix identity(long n) {
        IntMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Int& at(long i, long j) { return a_[i * cols_ + j]; }
    const Int& at(long i, long j) const { return a_[i * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw MathError("IntMatrix: dimension mismatch in product");
        IntMatrix r(a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (long j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    void swap_rows(long i, long j) {
        for (long k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(long i, long j) {
        for (long k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }
    /// row_i += f * row_j
    void add_row(long i, long j, const Int& f) {
        for (long k = 0; k < cols_; ++k) at(i, k) += f * at(j, k);
    }
    /// col_i += f * col_j
    void add_col(long i, long j, const Int& f) {
        for (long k = 0; k < rows_; ++k) at(k, i) += f * at(k, j);
    }
    void negate_row(long i) {
        for (long k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
    }
    void negate_col(long j) {
        for (long k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
    }

private:
    long rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SmithResult {
    std::vector<Int> diag;  ///< d_1 | d_2 | ..., nonnegative
    IntMatrix left, right;  ///< unimodular, left * m * right is the diagonal matrix
};

/// Smith normal form with transforms. Exact; suitable for the small matrices
/// arising from special fibers and sieve bookkeeping.
inline SmithResult smith_normal_form(IntMatrix m) {
    const long r = m.rows(), c = m.cols();
    IntMatrix U = IntMatrix::identity(r), V = IntMatrix::identity(c);
    const long n = std::min(r, c);
    long t = 0;
    while (t < n) {
        // locate a nonzero pivot with minimal absolute value
        long pi = -1, pj = -1;
        for (long i = t; i < r; ++i)
            for (long j = t; j < c; ++j) {
                if (m.at(i, j) == 0) continue;
                if (pi < 0 || abs(m.at(i, j)) < abs(m.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t) {
            m.swap_rows(t, pi);
            U.swap_rows(t, pi);
        }
        if (pj != t) {
            m.swap_cols(t, pj);
            V.swap_cols(t, pj);
        }
        bool clean = true;
        for (long i = t + 1; i < r; ++i) {
            if (m.at(i, t) == 0) continue;
            Int q = m.at(i, t) / m.at(t, t);
            m.add_row(i, t, -q);
            U.add_row(i, t, -q);
            if (m.at(i, t) != 0) clean = false;
        }
        for (long j = t + 1; j < c; ++j) {
            if (m.at(t, j) == 0) continue;
            Int q = m.at(t, j) / m.at(t, t);
            m.add_col(j, t, -q);
            V.add_col(j, t, -q);
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // pivot shrank; repeat with the new minimum
        // pivot must divide the remaining block for the chain to come out right
        bool divides_all = true;
        for (long i = t + 1; i < r && divides_all; ++i)
            for (long j = t + 1; j < c && divides_all; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    m.add_row(t, i, 1);
                    U.add_row(t, i, 1);
                    divides_all = false;
                }
        if (!divides_all) continue;
        ++t;
    }
    for (long i = 0; i < n; ++i)
        if (m.at(i, i) < 0) {
            m.negate_row(i);
            U.negate_row(i);
        }
    SmithResult res;
    res.diag.reserve(n);
    for (long i = 0; i < n; ++i) res.diag.push_back(m.at(i, i));
    res.left = std::move(U);
    res.right = std::move(V);
    return res;
}

/// Row Hermite normal form: returns H (row echelon, positive pivots, entries
/// above a pivot reduced) and unimodular T with T * m = H.
inline std::pair<IntMatrix, IntMatrix> hnf_rows(IntMatrix m) {
    const long r = m.rows(), c = m.cols();
    IntMatrix T = IntMatrix::identity(r);
    long row = 0;
    for (long col = 0; col < c && row < r; ++col) {
        // gcd the column below `row` into a single entry
        for (;;) {
            long pi = -1;
            for (long i = row; i < r; ++i) {
                if (m.at(i, col) == 0) continue;
                if (pi < 0 || abs(m.at(i, col)) < abs(m.at(pi, col))) pi = i;
            }
            if (pi < 0) break;
            if (pi != row) {
                m.swap_rows(row, pi);
                T.swap_rows(row, pi);
            }
            bool done = true;
            for (long i = row + 1; i < r; ++i) {
                if (m.at(i, col) == 0) continue;
                Int q = m.at(i, col) / m.at(row, col);
                m.add_row(i, row, -q);
                T.add_row(i, row, -q);
                if (m.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (m.at(row, col) == 0) continue;
        if (m.at(row, col) < 0) {
            m.negate_row(row);
            T.negate_row(row);
        }
        for (long i = 0; i < row; ++i) {
            Int q = m.at(i, col);
            // floor division for canonical reduction into [0, pivot)
            Int p = m.at(row, col);
            Int f;
            if (q >= 0)
                f = q / p;
            else
                f = -((-q + p - 1) / p);
            if (f != 0) {
                m.add_row(i, row, -f);
                T.add_row(i, row, -f);
            }
        }
        ++row;
    }
    return {std::move(m), std::move(T)};
}

/// Z-basis (as rows, in row-HNF) of { x : v . x = 0 } for a nonzero vector v.
inline IntMatrix hnf_kernel_basis(const std::vector<Int>& v) {
    const long n = static_cast<long>(v.size());
    bool all_zero = true;
    for (auto& x : v)
        if (x != 0) all_zero = false;
    if (n == 0 || all_zero) throw MathError("hnf_kernel_basis: zero vector");
    // Column-reduce v with a unimodular V: v * V = (g, 0, ..., 0);
    // the kernel is spanned by columns 1..n-1 of V.
    IntMatrix m(1, n);
    for (long j = 0; j < n; ++j) m.at(0, j) = v[j];
    IntMatrix V = IntMatrix::identity(n);
    for (;;) {
        long pj = -1;
        for (long j = 0; j < n; ++j) {
            if (m.at(0, j) == 0) continue;
            if (pj < 0 || abs(m.at(0, j)) < abs(m.at(0, pj))) pj = j;
        }
        if (pj != 0) {
            m.swap_cols(0, pj);
            V.swap_cols(0, pj);
        }
        bool done = true;
        for (long j = 1; j < n; ++j) {
            if (m.at(0, j) == 0) continue;
            Int q = m.at(0, j) / m.at(0, 0);
            m.add_col(j, 0, -q);
            V.add_col(j, 0, -q);
            if (m.at(0, j) != 0) done = false;
        }
        if (done) break;
    }
    IntMatrix basis(n - 1, n);
    for (long k = 1; k < n; ++k)
        for (long i = 0; i < n; ++i) basis.at(k - 1, i) = V.at(i, k);
    auto [H, T] = hnf_rows(std::move(basis));
    return H;
}

/// Solves x * A = b over Z (row-vector convention); nullopt when unsolvable.
inline std::optional<std::vector<Int>> solve_left(const IntMatrix& A, const std::vector<Int>& b) {
    if (static_cast<long>(b.size()) != A.cols()) throw MathError("solve_left: size mismatch");
    auto [H, T] = hnf_rows(A);
    // solve y * H = b by forward elimination over pivot columns, then x = y * T
    std::vector<Int> rem(b);
    std::vector<Int> y(H.rows(), Int(0));
    long row = 0;
    for (long col = 0; col < H.cols() && row < H.rows(); ++col) {
        if (H.at(row, col) == 0) continue;
        Int q = rem[col];
        if (q % H.at(row, col) != 0) return std::nullopt;
        Int f = q / H.at(row, col);
        y[row] = f;
        if (f != 0)
            for (long j = 0; j < H.cols(); ++j) rem[j] -= f * H.at(row, j);
        ++row;
    }
    for (auto& x : rem)
        if (x != 0) return std::nullopt;
    std::vector<Int> out(A.rows(), Int(0));
    for (long i = 0; i < A.rows(); ++i)
        for (long k = 0; k < H.rows(); ++k) out[i] += y[k] * T.at(k, i);
    return out;
}

} // namespace x237
