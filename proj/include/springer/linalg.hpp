#pragma once

#include <optional>
#include <vector>

#include "springer/cyclotomic.hpp"
#include "springer/errors.hpp"
#include "springer/rational.hpp"

namespace springer {

/// Dense exact matrix over a field scalar F (Rational or Cyclotomic).
/// Row-major. Elimination uses first-nonzero pivoting: exactness makes
/// numerical stability a non-issue and determinism matters for reports.
template <class F>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    F& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const F& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    Mat operator*(const Mat& o) const {
        check_internal(cols == o.rows, "matrix product shape mismatch");
        Mat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const F& x = at(i, k);
                if (is_zero(x)) continue;
                for (int j = 0; j < o.cols; ++j) {
                    if (is_zero(o.at(k, j))) continue;
                    r.at(i, j) += x * o.at(k, j);
                }
            }
        return r;
    }

    Mat& operator+=(const Mat& o) {
        check_internal(rows == o.rows && cols == o.cols, "matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }

    Mat scaled(const F& s) const {
        Mat r = *this;
        for (auto& x : r.a) x *= s;
        return r;
    }

    template <class G>
    std::vector<G> apply(const std::vector<G>& v) const {
        check_internal(static_cast<int>(v.size()) == cols, "matvec shape mismatch");
        std::vector<G> out(rows, G{});
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (is_zero(at(i, j)) || is_zero(v[j])) continue;
                out[i] += v[j] * at(i, j);
            }
        return out;
    }

    F trace() const {
        F t{};
        for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
        return t;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

using ExactMatrix = Mat<Cyclotomic>;

/// In-place reduced row echelon form; returns pivot columns in order.
template <class F>
std::vector<int> rref_inplace(Mat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m.at(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        F inv = F(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            F f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Mat<F> m) {
    return static_cast<int>(rref_inplace(m).size());
}

/// Basis of the right kernel, one vector per free column, deterministic.
template <class F>
std::vector<std::vector<F>> kernel_basis(Mat<F> m) {
    std::vector<int> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(m.cols, F{});
        v[c] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// rank + right-kernel basis in one pass (rank + kernel dim = cols).
template <class F>
std::pair<int, std::vector<std::vector<F>>> rank_and_kernel(const Mat<F>& m) {
    auto basis = kernel_basis(m);
    return {m.cols - static_cast<int>(basis.size()), std::move(basis)};
}

/// Incrementally maintained row echelon span; add() reports rank growth.
template <class F>
class IncrementalSpan {
  public:
    /// Returns true iff v was independent of the current span.
    bool add(std::vector<F> v) {
        reduce(v);
        int p = first_nonzero(v);
        if (p < 0) return false;
        F inv = F(1) / v[p];
        for (auto& x : v) x *= inv;
        rows_.emplace_back(p, std::move(v));
        return true;
    }

    /// True iff v lies in the current span (v is not added).
    bool contains(std::vector<F> v) const {
        reduce(v);
        return first_nonzero(v) < 0;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    void reduce(std::vector<F>& v) const {
        for (const auto& [p, row] : rows_) {
            if (is_zero(v[p])) continue;
            F f = v[p];
            for (std::size_t j = p; j < v.size(); ++j)
                if (!is_zero(row[j])) v[j] -= f * row[j];
        }
    }
    static int first_nonzero(const std::vector<F>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!is_zero(v[i])) return static_cast<int>(i);
        return -1;
    }

    std::vector<std::pair<int, std::vector<F>>> rows_;
};

/// Scan vectors in the given order, keeping each one iff it is independent
/// of those already kept. Deterministic; zero vectors are never kept.
template <class F>
std::vector<int> greedy_independent_subset(const std::vector<std::vector<F>>& vecs) {
    IncrementalSpan<F> span;
    std::vector<int> kept;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        if (span.add(vecs[i])) kept.push_back(static_cast<int>(i));
    return kept;
}

/// One particular solution of A x = b (free variables zero), if consistent.
template <class F>
std::optional<std::vector<F>> solve(Mat<F> a, const std::vector<F>& b) {
    check_internal(static_cast<int>(b.size()) == a.rows, "solve shape mismatch");
    Mat<F> aug(a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;  // 0 = 1 row
    std::vector<F> x(a.cols, F{});
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(static_cast<int>(r), a.cols);
    return x;
}

/// Factored repeated solver for a fixed full-column-rank matrix S:
/// rref of [S | I] gives T with T*S = [I; 0], so each solve is one matvec.
template <class F>
class ColumnSolver {
  public:
    explicit ColumnSolver(const Mat<F>& s) : n_(s.rows), k_(s.cols) {
        Mat<F> aug(s.rows, s.cols + s.rows);
        for (int i = 0; i < s.rows; ++i) {
            for (int j = 0; j < s.cols; ++j) aug.at(i, j) = s.at(i, j);
            aug.at(i, s.cols + i) = F(1);
        }
        auto pivots = rref_inplace(aug);
        full_rank_ = true;
        for (int j = 0; j < k_; ++j)
            if (j >= static_cast<int>(pivots.size()) || pivots[j] != j) full_rank_ = false;
        t_ = Mat<F>(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t_.at(i, j) = aug.at(i, k_ + j);
    }

    bool full_column_rank() const { return full_rank_; }

    /// Coordinates x with S x = b; nullopt if b is outside the column span.
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        check_internal(full_rank_, "ColumnSolver requires full column rank");
        std::vector<F> y = t_.apply(b);
        for (int i = k_; i < n_; ++i)
            if (!is_zero(y[i])) return std::nullopt;
        y.resize(k_);
        return y;
    }

  private:
    int n_, k_;
    bool full_rank_ = false;
    Mat<F> t_;
};

}  // namespace springer
