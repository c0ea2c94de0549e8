#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("RatMatrix: entry count != rows*cols");
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Rational>& entries() const { return entries_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Rational& x) { return x.is_zero(); });
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RatMatrix: shape mismatch in addition");
        RatMatrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            out.entries_[i] = a.entries_[i] + b.entries_[i];
        return out;
    }
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RatMatrix: shape mismatch in subtraction");
        RatMatrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            out.entries_[i] = a.entries_[i] - b.entries_[i];
        return out;
    }
    friend RatMatrix operator*(const RatMatrix& a, const Rational& s) {
        RatMatrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] * s;
        return out;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

inline RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return matmul(a, b); }

inline std::vector<Rational> matvec(const RatMatrix& m, const std::vector<Rational>& v) {
    if (m.cols() != v.size())
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

struct RrefResult {
    RatMatrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by plain Gaussian elimination. Pivot choice is
/// the first row (top-down) with a nonzero entry in the leftmost unresolved
/// column, so the result is identical across runs and platforms.
inline RrefResult rref(const RatMatrix& m) {
    RrefResult res{m, 0, {}};
    RatMatrix& a = res.rref;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
        const Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

/// Canonical basis of {v : m v = 0}: one vector per non-pivot (free) column,
/// in increasing column order, with value 1 at its own free column and 0 at
/// every other free column.
inline std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(m.cols());
        v[fc] = Rational(1);
        for (std::size_t r = 0; r < rr.rank; ++r)
            v[rr.pivot_cols[r]] = -rr.rref(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Same nullspace, eliminated with reversed column preference, so the
/// earliest column of each dependency chain becomes the free one. Matches
/// the labeling style of the published solution tables.
inline std::vector<std::vector<Rational>> nullspace_reversed(const RatMatrix& m) {
    RatMatrix flipped(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            flipped(i, j) = m(i, m.cols() - 1 - j);
    std::vector<std::vector<Rational>> rev = nullspace(flipped);
    std::vector<std::vector<Rational>> basis(rev.size());
    for (std::size_t k = 0; k < rev.size(); ++k) {
        std::vector<Rational> v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) v[j] = rev[k][m.cols() - 1 - j];
        basis[rev.size() - 1 - k] = std::move(v);  // increasing free-column order
    }
    return basis;
}

/// Rank of a set of row vectors.
inline std::size_t span_rank(const std::vector<std::vector<Rational>>& rows_in,
                             std::size_t ncols) {
    RatMatrix m(rows_in.size(), ncols);
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
        if (rows_in[i].size() != ncols)
            throw std::invalid_argument("span_rank: ragged rows");
        for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows_in[i][j];
    }
    return rank(m);
}

/// Membership of v in the row span, by rank comparison of the augmented set.
inline bool in_span(const std::vector<std::vector<Rational>>& span,
                    const std::vector<Rational>& v) {
    std::size_t ncols = v.size();
    std::size_t base = span_rank(span, ncols);
    std::vector<std::vector<Rational>> aug = span;
    aug.push_back(v);
    return span_rank(aug, ncols) == base;
}

}  // namespace leibniz
