#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "strata/field.hpp"

namespace strata {

// Dense matrix over an exact field-like type (FieldElem, RationalFunc).
template <class K>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    K& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<K> a_;
};

template <class K>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<K>> kernel;  // basis of the right kernel
};

// Exact rank and right-kernel basis by Gauss-Jordan elimination; pivots are
// the first nonzero entry in each column (deterministic).
template <class K>
RankKernel<K> rank_kernel(Mat<K> m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t pr = row;
        while (pr < R && m.at(pr, col).is_zero()) ++pr;
        if (pr == R) continue;
        if (pr != row)
            for (std::size_t j = 0; j < C; ++j) std::swap(m.at(pr, j), m.at(row, j));
        K inv = K(1) / m.at(row, col);
        for (std::size_t j = col; j < C; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            K f = m.at(i, col);
            for (std::size_t j = col; j < C; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    RankKernel<K> out;
    out.rank = pivot_col.size();
    std::vector<bool> is_pivot(C, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < C; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(C, K(0));
        v[free_col] = K(1);
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = K(0) - m.at(k, free_col);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class K>
std::size_t rank_of(const Mat<K>& m) {
    return rank_kernel(m).rank;
}

// Exact inverse; nullopt when singular.
template <class K>
std::optional<Mat<K>> inverse(Mat<K> m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Mat<K> inv = Mat<K>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && m.at(pr, col).is_zero()) ++pr;
        if (pr == n) return std::nullopt;
        if (pr != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(pr, j), m.at(col, j));
                std::swap(inv.at(pr, j), inv.at(col, j));
            }
        K pi = K(1) / m.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = m.at(col, j) * pi;
            inv.at(col, j) = inv.at(col, j) * pi;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            K f = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Cofactor determinant over any commutative ring; fine at the small sizes
// the minor computations use.
template <class R>
R det_cofactor(const Mat<R>& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw math_error("linalg: determinant of non-square matrix");
    if (n == 0) return R(1);
    if (n == 1) return m.at(0, 0);
    R acc = R(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Mat<R> sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        R term = m.at(0, j) * det_cofactor(sub);
        if (j % 2)
            acc = acc - term;
        else
            acc = acc + term;
    }
    return acc;
}

}  // namespace strata
