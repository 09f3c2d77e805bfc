#pragma once

// Dense exact linear algebra over GaussRat (and, generically, over any
// commutative ring with exact division, which is what the symbolic-lambda
// pencil code needs).  Numeric ranks go through Eigen's SVD.

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <stdexcept>
#include <vector>

#include "waring_eig/gaussrat.hpp"

namespace waring_eig {

template <typename R>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c, R(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: size mismatch");
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    std::vector<R> mul_vec(const std::vector<R>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Mat: vector size mismatch");
        std::vector<R> out(rows_, R(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<R> e_;
};

using ExactMatrix = Mat<GaussRat>;

namespace detail {
template <typename R>
bool ring_is_zero(const R& x) {
    return x.is_zero();
}
inline bool ring_is_zero(const GaussRat& x) { return x.is_zero(); }
}  // namespace detail

/// Rank by fraction-free (Bareiss) elimination.  Works over any integral
/// domain whose operator/ is exact on the divisions Bareiss performs.
/// Deterministic pivoting: first nonzero entry by row index.
template <typename R>
std::size_t bareiss_rank(Mat<R> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    R prev(1);
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && detail::ring_is_zero(m(piv, col))) ++piv;
        if (piv == rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(row, j));
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m(i, j) = (m(row, col) * m(i, j) - m(i, col) * m(row, j)) / prev;
            m(i, col) = R(0);
        }
        prev = m(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

/// Fraction-free determinant (Bareiss); square matrices only.
template <typename R>
R bareiss_det(Mat<R> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    const std::size_t n = m.rows();
    if (n == 0) return R(1);
    R prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && detail::ring_is_zero(m(piv, k))) ++piv;
        if (piv == n) return R(0);
        if (piv != k) {
            sign = -sign;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return sign < 0 ? R(R(0) - d) : d;
}

/// Reduced row echelon form in place; returns pivot column indices.
/// Field scalars only.
template <typename R>
std::vector<std::size_t> rref(Mat<R>& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && detail::ring_is_zero(m(piv, col))) ++piv;
        if (piv == rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(row, j));
        R inv = R(1) / m(row, col);
        for (std::size_t j = col; j < cols; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || detail::ring_is_zero(m(i, col))) continue;
            R f = m(i, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t inline rank_exact(const ExactMatrix& m) { return bareiss_rank(m); }

/// Basis of the right null space, in reduced echelon convention: one vector
/// per free column, with entry 1 in that column.
inline std::vector<std::vector<GaussRat>> kernel_basis(ExactMatrix m) {
    auto pivots = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<GaussRat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussRat> v(cols, GaussRat(0));
        v[free] = GaussRat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact inverse via Gauss-Jordan; throws on singular input.
inline ExactMatrix inverse(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = a.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = GaussRat(1);
    }
    auto piv = rref(aug);
    if (piv.size() != n || piv[n - 1] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    ExactMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

using CMatrix = Eigen::MatrixXcd;

/// Number of singular values above tol * sigma_max.  Tolerance-dependent by
/// construction; throws on non-finite entries.
inline std::size_t rank_numeric(const CMatrix& m, double tol) {
    if (tol <= 0) throw std::invalid_argument("rank_numeric: tol must be positive");
    if (!m.allFinite()) throw std::domain_error("rank_numeric: non-finite entries");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++r;
    return r;
}

/// Singular values, largest first.
inline std::vector<double> singular_values(const CMatrix& m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    std::vector<double> out(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
    return out;
}

inline CMatrix to_numeric(const ExactMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
    return out;
}

}  // namespace waring_eig
