#ifndef SYMREP_MATRIX_HPP
#define SYMREP_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace symrep {

// Dense matrix over a commutative ring element type (mpq_class in most of
// the library, series or machine words elsewhere).
template <class E>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::vector<E> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != static_cast<size_t>(rows_) * cols_)
            throw std::invalid_argument("matrix entry count mismatch");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = E(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    E& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const E& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<E>& entries() const { return e_; }
    std::vector<E>& entries() { return e_; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    E trace() const {
        if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
        E t{};
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != E{}) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix out(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix out(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const E& aik = a(i, k);
                if (aik == E{}) continue;
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend Matrix operator*(const E& c, const Matrix& m) {
        Matrix out(m.rows_, m.cols_);
        for (size_t k = 0; k < m.e_.size(); ++k) out.e_[k] = c * m.e_[k];
        return out;
    }
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    int rows_ = 0, cols_ = 0;
    std::vector<E> e_;
};

using MatrixQ = Matrix<mpq_class>;

inline MatrixQ bracket(const MatrixQ& a, const MatrixQ& b) { return a * b - b * a; }

// Reduced row echelon over the rationals; returns rank, transforms in place.
int rref(MatrixQ& m);

// Right inverse via Gauss-Jordan; throws on singular input.
MatrixQ inverse(const MatrixQ& m);

// Nullspace basis (column vectors) of m.
std::vector<std::vector<mpq_class>> nullspace(const MatrixQ& m);

}  // namespace symrep

#endif
