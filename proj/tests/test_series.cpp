#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symrep/partition.hpp"
#include "symrep/seminormal.hpp"
#include "symrep/series.hpp"

using namespace symrep;

namespace {
TruncSeries random_series(std::mt19937_64& rng, int order) {
    TruncSeries s(order);
    for (int k = 0; k < order; ++k) {
        mpq_class q(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 6) + 1);
        q.canonicalize();
        s.coeff(k) = q;
    }
    return s;
}
}  // namespace

TEST_CASE("exponential series") {
    TruncSeries e = exp_scalar(1, 4);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == 1);
    CHECK(e.coeff(2) == mpq_class(1, 2));
    CHECK(e.coeff(3) == mpq_class(1, 6));
    CHECK(exp_scalar(0, 5) == TruncSeries(5, 1));
}

TEST_CASE("units and inverses") {
    for (int order : {4, 8, 16}) {
        TruncSeries q = exp_scalar(1, order);
        CHECK(q * q.inverse() == TruncSeries(order, 1));
        CHECK(q.inverse() == exp_scalar(-1, order));
        CHECK(q.pow(3) * q.pow(-3) == TruncSeries(order, 1));
    }
    CHECK_THROWS(TruncSeries::h(4).inverse());
}

TEST_CASE("ring laws on random elements") {
    std::mt19937_64 rng(5);
    for (int order : {4, 8, 16}) {
        for (int t = 0; t < 20; ++t) {
            TruncSeries a = random_series(rng, order);
            TruncSeries b = random_series(rng, order);
            TruncSeries c = random_series(rng, order);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == TruncSeries(order));
        }
    }
}

TEST_CASE("order mixing is rejected") {
    CHECK_THROWS(TruncSeries(4, 1) + TruncSeries(8, 1));
    CHECK_THROWS(TruncSeries(4, 1) * TruncSeries(8, 1));
}

TEST_CASE("matrix exponential") {
    CHECK(exp_matrix(MatrixQ(3, 3), 6) == SeriesMatrix::identity(3, 6));
    // exp(h s) = cosh(h) I + sinh(h) s whenever s^2 = I.
    MatrixQ s = rep_gen(Partition::parse("[2,1]"), 2);
    SeriesMatrix e = exp_matrix(s, 8);
    TruncSeries q = exp_scalar(1, 8);
    TruncSeries qi = exp_scalar(-1, 8);
    TruncSeries half(8, mpq_class(1, 2));
    TruncSeries ch = half * (q + qi);
    TruncSeries sh = half * (q - qi);
    SeriesMatrix expected = ch * SeriesMatrix::identity(2, 8) +
                            sh * SeriesMatrix::from_constant(s, 8);
    CHECK(e == expected);
    CHECK(e(0, 0).coeff(0) == 1);
    CHECK(e(0, 1).coeff(0) == 0);
}

TEST_CASE("series determinant and inverse") {
    MatrixQ s = rep_gen(Partition::parse("[3,2]"), 1);
    SeriesMatrix x = SeriesMatrix::from_constant(s, 8) * exp_matrix(s, 8);
    SeriesMatrix xi = series_inverse(x);
    CHECK(x * xi == SeriesMatrix::identity(5, 8));
    CHECK(det_series(SeriesMatrix::identity(5, 8)) == TruncSeries(8, 1));
    CHECK(det_series(x) * det_series(xi) == TruncSeries(8, 1));
}

TEST_CASE("wedge powers over the series ring") {
    MatrixQ s = rep_gen(Partition::parse("[3,1]"), 1);
    SeriesMatrix x = SeriesMatrix::from_constant(s, 6) * exp_matrix(s, 6);
    SeriesMatrix y = exp_matrix(rep_gen(Partition::parse("[3,1]"), 2), 6);
    for (int r = 1; r <= 3; ++r) {
        CHECK(series_wedge_power(x, r) * series_wedge_power(y, r) ==
              series_wedge_power(x * y, r));
    }
    CHECK(series_wedge_power(x, 3)(0, 0) == det_series(x));
}
