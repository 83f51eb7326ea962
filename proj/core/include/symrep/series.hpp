#ifndef SYMREP_SERIES_HPP
#define SYMREP_SERIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "symrep/matrix.hpp"

namespace symrep {

// Polynomial in h truncated at order K, exact rational coefficients.
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(int order) : c_(static_cast<size_t>(order)) {
        if (order < 1) throw std::invalid_argument("series order must be >= 1");
    }
    TruncSeries(int order, const mpq_class& constant) : TruncSeries(order) { c_[0] = constant; }

    static TruncSeries h(int order) {
        TruncSeries s(order);
        if (order > 1) s.c_[1] = 1;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }
    const mpq_class& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    mpq_class& coeff(int k) { return c_.at(static_cast<size_t>(k)); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_unit() const { return !c_.empty() && c_[0] != 0; }

    TruncSeries inverse() const;
    TruncSeries pow(long e) const;  // negative exponents through the inverse

    std::string to_string() const;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a);
    TruncSeries& operator+=(const TruncSeries& b) { return *this = *this + b; }
    TruncSeries& operator-=(const TruncSeries& b) { return *this = *this - b; }
    TruncSeries& operator*=(const TruncSeries& b) { return *this = *this * b; }
    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<mpq_class> c_;
    static void check_order(const TruncSeries& a, const TruncSeries& b);
};

// exp(a h) truncated: sum_{k<K} a^k h^k / k!
TruncSeries exp_scalar(const mpq_class& a, int order);

// Square matrix of series sharing one truncation order.
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    SeriesMatrix(int n, int order)
        : n_(n), order_(order),
          e_(static_cast<size_t>(n) * n, TruncSeries(order)) {}

    static SeriesMatrix identity(int n, int order);
    static SeriesMatrix from_constant(const MatrixQ& m, int order);

    int dim() const { return n_; }
    int order() const { return order_; }

    TruncSeries& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const TruncSeries& operator()(int i, int j) const {
        return e_[static_cast<size_t>(i) * n_ + j];
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    SeriesMatrix transpose() const;
    TruncSeries trace() const;

    friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
    friend SeriesMatrix operator*(const TruncSeries& c, const SeriesMatrix& m);
    friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

private:
    int n_ = 0, order_ = 0;
    std::vector<TruncSeries> e_;
    static void check_compat(const SeriesMatrix& a, const SeriesMatrix& b);
};

// exp(h x) truncated.
SeriesMatrix exp_matrix(const MatrixQ& x, int order);

// Determinant by Gaussian elimination with unit pivots.
TruncSeries det_series(const SeriesMatrix& m);

// Gauss-Jordan; every pivot must be a unit.
SeriesMatrix series_inverse(const SeriesMatrix& m);

// Lambda^r on the canonical wedge basis, minors over the series ring.
SeriesMatrix series_wedge_power(const SeriesMatrix& m, int r);

}  // namespace symrep

#endif
