#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rht/rational.hpp"

namespace rht {

// Dense matrix over Q. Sizes stay small (a few thousand at most), so dense
// Gaussian elimination with exact rationals is the whole story.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (a_[i] != o.a_[i]) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!rht::is_zero(x)) return false;
        return true;
    }

    Mat operator*(const Mat& o) const {
        assert(cols_ == o.rows_);
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (rht::is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (rht::is_zero(o(k, j))) continue;
                    r(i, j) += x * o(k, j);
                }
            }
        return r;
    }

    Mat operator-(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        assert(v.size() == cols_);
        std::vector<Rat> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!rht::is_zero((*this)(i, j)) && !rht::is_zero(v[j])) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Row echelon factorization with recorded row operations: solves Ax=b
// repeatedly and answers rank/kernel questions. Pivot choice is the first
// nonzero entry scanning left to right, so every result is reproducible.
class Echelon {
  public:
    explicit Echelon(Mat a) : r_(std::move(a)), t_(Mat::identity(r_.rows())) {
        const std::size_t m = r_.rows(), n = r_.cols();
        std::size_t row = 0;
        for (std::size_t col = 0; col < n && row < m; ++col) {
            std::size_t p = row;
            while (p < m && rht::is_zero(r_(p, col))) ++p;
            if (p == m) continue;
            swap_rows(row, p);
            const Rat inv = 1 / r_(row, col);
            scale_row(row, inv);
            for (std::size_t i = 0; i < m; ++i) {
                if (i == row || rht::is_zero(r_(i, col))) continue;
                add_row(i, row, -r_(i, col));
            }
            pivots_.push_back(col);
            ++row;
        }
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    bool is_pivot_col(std::size_t c) const {
        for (auto p : pivots_)
            if (p == c) return true;
        return false;
    }

    // Least solution with all free variables set to zero, or nullopt.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
        assert(b.size() == r_.rows());
        std::vector<Rat> tb = t_.apply(b);
        std::vector<Rat> x(r_.cols());
        for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = tb[i];
        for (std::size_t i = pivots_.size(); i < tb.size(); ++i)
            if (!rht::is_zero(tb[i])) return std::nullopt;
        return x;
    }

    // Canonical kernel basis: one vector per free column, free variable 1.
    std::vector<std::vector<Rat>> kernel() const {
        std::vector<std::vector<Rat>> ker;
        const std::size_t n = r_.cols();
        for (std::size_t c = 0; c < n; ++c) {
            if (is_pivot_col(c)) continue;
            std::vector<Rat> v(n);
            v[c] = 1;
            for (std::size_t i = 0; i < pivots_.size(); ++i) v[pivots_[i]] = -r_(i, c);
            ker.push_back(std::move(v));
        }
        return ker;
    }

  private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < r_.cols(); ++c) std::swap(r_(i, c), r_(j, c));
        for (std::size_t c = 0; c < t_.cols(); ++c) std::swap(t_(i, c), t_(j, c));
    }
    void scale_row(std::size_t i, const Rat& s) {
        for (std::size_t c = 0; c < r_.cols(); ++c) r_(i, c) *= s;
        for (std::size_t c = 0; c < t_.cols(); ++c) t_(i, c) *= s;
    }
    void add_row(std::size_t i, std::size_t j, const Rat& s) {
        for (std::size_t c = 0; c < r_.cols(); ++c)
            if (!rht::is_zero(r_(j, c))) r_(i, c) += s * r_(j, c);
        for (std::size_t c = 0; c < t_.cols(); ++c)
            if (!rht::is_zero(t_(j, c))) t_(i, c) += s * t_(j, c);
    }

    Mat r_;   // reduced row echelon form
    Mat t_;   // accumulated row operations, t_ * original = r_
    std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const Mat& a) { return Echelon(a).rank(); }

// Inverse of a square invertible matrix; nullopt when singular.
inline std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    Echelon e(a);
    if (e.rank() != a.rows()) return std::nullopt;
    Mat inv(a.rows(), a.cols());
    std::vector<Rat> b(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) b[i] = (i == j) ? 1 : 0;
        auto x = e.solve(b);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < a.rows(); ++i) inv(i, j) = (*x)[i];
    }
    return inv;
}

// Columns of `vs` as a matrix.
inline Mat from_columns(const std::vector<std::vector<Rat>>& vs, std::size_t dim) {
    Mat m(dim, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j) {
        assert(vs[j].size() == dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = vs[j][i];
    }
    return m;
}

}  // namespace rht
