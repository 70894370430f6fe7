#pragma once

#include <Eigen/Dense>

#include <vector>

#include "corona/intpoly.hpp"

namespace corona {

/**
 * Minimal dense row-major matrix for exact scalar types.
 *
 * Numeric linear algebra goes through Eigen; this container only exists for
 * the exact-integer paths (Faddeev-LeVerrier, Bareiss), where cpp_int cannot
 * be used as an Eigen scalar with the toolchain's boost.
 */
template <typename Scalar>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, Scalar(0)) {}

    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * cols_ + j]; }

    Scalar trace() const {
        Scalar t(0);
        for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    Scalar sum() const {
        Scalar s(0);
        for (const Scalar& x : v_) s += x;
        return s;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        DenseMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
        for (std::size_t i = 0; i < a.v_.size(); ++i) a.v_[i] += b.v_[i];
        return a;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> v_;
};

/// Exact symmetric integer matrix type of the library (adjacency, Laplacian,
/// signless Laplacian and friends).
using IntMatrix = DenseMatrix<Int>;

inline Eigen::MatrixXd to_real(const IntMatrix& m) {
    Eigen::MatrixXd r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).convert_to<double>();
    return r;
}

/// Exact determinant by Bareiss fraction-free elimination.
Int bareiss_determinant(IntMatrix m);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

}  // namespace corona
