#include "corona/matrix.hpp"

namespace corona {

Int bareiss_determinant(IntMatrix m) {
    const int n = m.rows();
    if (n != m.cols()) throw std::logic_error("bareiss_determinant: non-square matrix");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    Int det = m(n - 1, n - 1);
    return sign > 0 ? det : Int(-det);
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    c(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return c;
}

}  // namespace corona
