#include "symrep/matrix.hpp"

namespace symrep {

int rref(MatrixQ& m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (m(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
        mpq_class inv = 1 / m(rank, col);
        for (int j = col; j < m.cols(); ++j) m(rank, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col) == 0) continue;
            mpq_class f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

MatrixQ inverse(const MatrixQ& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    MatrixQ aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    if (rref(aug) != n) throw std::invalid_argument("matrix is singular");
    MatrixQ out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

std::vector<std::vector<mpq_class>> nullspace(const MatrixQ& m) {
    MatrixQ r = m;
    rref(r);
    int rows = r.rows(), cols = r.cols();
    std::vector<int> pivot_col_of_row(rows, -1);
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (r(i, j) != 0) {
                pivot_col_of_row[i] = j;
                is_pivot[j] = true;
                break;
            }
    std::vector<std::vector<mpq_class>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(static_cast<size_t>(cols));
        v[free] = 1;
        for (int i = 0; i < rows; ++i)
            if (pivot_col_of_row[i] >= 0) v[pivot_col_of_row[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace symrep
