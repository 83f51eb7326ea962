#include "symrep/series.hpp"

#include <sstream>

#include "symrep/seminormal.hpp"

namespace symrep {

void TruncSeries::check_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_order(a, b);
    TruncSeries out(a.order());
    for (int k = 0; k < a.order(); ++k) out.c_[k] = a.c_[k] + b.c_[k];
    return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_order(a, b);
    TruncSeries out(a.order());
    for (int k = 0; k < a.order(); ++k) out.c_[k] = a.c_[k] - b.c_[k];
    return out;
}

TruncSeries operator-(const TruncSeries& a) {
    TruncSeries out(a.order());
    for (int k = 0; k < a.order(); ++k) out.c_[k] = -a.c_[k];
    return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries::check_order(a, b);
    TruncSeries out(a.order());
    for (int i = 0; i < a.order(); ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j < a.order(); ++j) {
            if (b.c_[j] == 0) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

TruncSeries TruncSeries::inverse() const {
    if (!is_unit()) throw std::domain_error("series with zero constant term has no inverse");
    TruncSeries out(order());
    mpq_class c0 = 1 / c_[0];
    out.c_[0] = c0;
    for (int k = 1; k < order(); ++k) {
        mpq_class acc = 0;
        for (int j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
        out.c_[k] = -c0 * acc;
    }
    return out;
}

TruncSeries TruncSeries::pow(long e) const {
    TruncSeries base = e >= 0 ? *this : inverse();
    unsigned long exp = static_cast<unsigned long>(e >= 0 ? e : -e);
    TruncSeries out(order(), 1);
    while (exp) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

std::string TruncSeries::to_string() const {
    std::ostringstream out;
    bool any = false;
    for (int k = 0; k < order(); ++k) {
        if (c_[k] == 0) continue;
        if (any) out << " + ";
        out << c_[k];
        if (k == 1) out << "*h";
        if (k > 1) out << "*h^" << k;
        any = true;
    }
    if (!any) out << "0";
    out << " + O(h^" << order() << ")";
    return out.str();
}

TruncSeries exp_scalar(const mpq_class& a, int order) {
    TruncSeries out(order);
    mpq_class term = 1;
    for (int k = 0; k < order; ++k) {
        out.coeff(k) = term;
        term *= a;
        term /= k + 1;
    }
    return out;
}

void SeriesMatrix::check_compat(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.n_ != b.n_ || a.order_ != b.order_)
        throw std::invalid_argument("series matrix shape or order mismatch");
}

SeriesMatrix SeriesMatrix::identity(int n, int order) {
    SeriesMatrix m(n, order);
    for (int i = 0; i < n; ++i) m(i, i) = TruncSeries(order, 1);
    return m;
}

SeriesMatrix SeriesMatrix::from_constant(const MatrixQ& src, int order) {
    if (!src.is_square()) throw std::invalid_argument("series matrix must be square");
    SeriesMatrix m(src.rows(), order);
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) m(i, j) = TruncSeries(order, src(i, j));
    return m;
}

SeriesMatrix SeriesMatrix::transpose() const {
    SeriesMatrix out(n_, order_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

TruncSeries SeriesMatrix::trace() const {
    TruncSeries t(order_);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix::check_compat(a, b);
    SeriesMatrix out(a.n_, a.order_);
    for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
    return out;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix::check_compat(a, b);
    SeriesMatrix out(a.n_, a.order_);
    for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
    return out;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix::check_compat(a, b);
    SeriesMatrix out(a.n_, a.order_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const TruncSeries& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < a.n_; ++j) {
                if (b(k, j).is_zero()) continue;
                out(i, j) += aik * b(k, j);
            }
        }
    return out;
}

SeriesMatrix operator*(const TruncSeries& c, const SeriesMatrix& m) {
    SeriesMatrix out(m.n_, m.order_);
    for (size_t k = 0; k < m.e_.size(); ++k) out.e_[k] = c * m.e_[k];
    return out;
}

SeriesMatrix exp_matrix(const MatrixQ& x, int order) {
    if (!x.is_square()) throw std::invalid_argument("exp of non-square matrix");
    int n = x.rows();
    SeriesMatrix out = SeriesMatrix::identity(n, order);
    MatrixQ power = MatrixQ::identity(n);
    mpq_class factorial = 1;
    for (int k = 1; k < order; ++k) {
        power = power * x;
        factorial *= k;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j).coeff(k) = power(i, j) / factorial;
    }
    return out;
}

TruncSeries det_series(const SeriesMatrix& m) {
    int n = m.dim(), order = m.order();
    SeriesMatrix a = m;
    TruncSeries det(order, 1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col).is_unit()) { pivot = i; break; }
        if (pivot < 0)
            throw std::domain_error("no unit pivot in series determinant");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        TruncSeries inv = a(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            TruncSeries f = a(i, col) * inv;
            for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

SeriesMatrix series_inverse(const SeriesMatrix& m) {
    int n = m.dim(), order = m.order();
    SeriesMatrix a = m;
    SeriesMatrix inv = SeriesMatrix::identity(n, order);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col).is_unit()) { pivot = i; break; }
        if (pivot < 0) throw std::domain_error("series matrix is not invertible");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        TruncSeries p = a(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a(col, j) *= p;
            inv(col, j) *= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            TruncSeries f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

SeriesMatrix series_wedge_power(const SeriesMatrix& m, int r) {
    auto basis = wedge_basis(m.dim(), r);
    int N = static_cast<int>(basis.size());
    SeriesMatrix out(N, m.order());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            // Leibniz expansion; minors stay small (r <= 5 in practice).
            const auto& rows = basis[i];
            const auto& cols = basis[j];
            int k = static_cast<int>(rows.size());
            std::vector<int> perm(static_cast<size_t>(k));
            for (int t = 0; t < k; ++t) perm[t] = t;
            TruncSeries det(m.order());
            do {
                int sign = 1;
                for (int x = 0; x < k; ++x)
                    for (int y = x + 1; y < k; ++y)
                        if (perm[x] > perm[y]) sign = -sign;
                TruncSeries term(m.order(), sign);
                bool zero = false;
                for (int t = 0; t < k && !zero; ++t) {
                    const TruncSeries& e = m(rows[t], cols[perm[t]]);
                    if (e.is_zero()) zero = true;
                    else term *= e;
                }
                if (!zero) det += term;
            } while (std::next_permutation(perm.begin(), perm.end()));
            out(i, j) = det;
        }
    return out;
}

}  // namespace symrep
