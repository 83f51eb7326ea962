#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "symrep/fp.hpp"
#include "symrep/lie_closure.hpp"
#include "symrep/partition.hpp"
#include "symrep/seminormal.hpp"

using namespace symrep;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }

std::vector<MatrixQ> transposition_images(const Partition& shape) {
    RepHandle h = build_rep(shape);
    std::vector<MatrixQ> out;
    for (int i = 1; i <= h.n; ++i)
        for (int j = i + 1; j <= h.n; ++j) out.push_back(rep_transposition(h, i, j));
    return out;
}
}  // namespace

TEST_CASE("field mode parsing") {
    CHECK(FieldMode::parse("Q") == FieldMode::Q());
    CHECK(FieldMode::parse("Fp:2147483647") == FieldMode::Fp(kMersenne31));
    CHECK(FieldMode::Q().to_string() == "Q");
    CHECK(FieldMode::Fp(7).to_string() == "Fp:7");
    CHECK_THROWS(FieldMode::parse("R"));
    CHECK_THROWS(FieldMode::parse("Fp:4"));
}

TEST_CASE("prime field arithmetic") {
    for (std::uint64_t p : {std::uint64_t(7), kMersenne31, kMersenne61}) {
        PrimeField f(p);
        std::mt19937_64 rng(3);
        for (int t = 0; t < 200; ++t) {
            std::uint64_t a = rng() % p, b = rng() % p;
            CHECK(f.mul(a, b) == static_cast<std::uint64_t>((__uint128_t(a) * b) % p));
            CHECK(f.add(a, b) == (a + b) % p);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
        }
        CHECK(f.reduce(mpq_class(1, 3)) == f.mul(1 % p, f.inv(3 % p)));
    }
    PrimeField f7(7);
    CHECK_THROWS_AS(f7.reduce(mpq_class(1, 7)), PrimeCollision);
}

TEST_CASE("closure of elementary generators") {
    MatrixQ e12(2, 2), e21(2, 2);
    e12(0, 1) = 1;
    e21(1, 0) = 1;
    SpanBasisQ basis = lie_closure_q({e12, e21});
    CHECK(basis.rank() == 3);
    CHECK(lie_closure_q({MatrixQ::identity(3)}).rank() == 1);
}

TEST_CASE("span membership") {
    MatrixQ e12(2, 2), e21(2, 2);
    e12(0, 1) = 1;
    e21(1, 0) = 1;
    SpanBasisQ basis = lie_closure_q({e12, e21});
    std::vector<mpq_class> diag{1, 0, 0, -1};
    CHECK(basis.contains(diag));
    std::vector<mpq_class> id{1, 0, 0, 1};
    CHECK_FALSE(basis.contains(id));
}

TEST_CASE("g_lambda dimensions on small shapes") {
    CHECK(g_lambda_dim(P("[2,1]"), FieldMode::Q()) == 3);
    CHECK(g_lambda_dim(P("[2,2]"), FieldMode::Q()) == 3);
    CHECK(g_lambda_dim(P("[3,2]"), FieldMode::Q()) == 24);
    CHECK(g_lambda_dim(P("[3,1,1]"), FieldMode::Q()) == 15);
}

TEST_CASE("closure of s3 transposition images keeps gamma = 0 traceless") {
    SpanBasisQ basis = lie_closure_q(transposition_images(P("[2,1]")));
    CHECK(basis.rank() == 3);
}

TEST_CASE("mode consistency") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& shape : enumerate_partitions(n)) {
            if (dimension(shape) == 1) continue;
            long rq = g_lambda_dim(shape, FieldMode::Q());
            CHECK(rq == g_lambda_dim(shape, FieldMode::Fp(kMersenne31)));
            CHECK(rq == g_lambda_dim(shape, FieldMode::Fp(kMersenne61)));
        }
}

TEST_CASE("closure does not depend on generator order") {
    for (const auto& shape : {P("[3,1]"), P("[2,2,1]")}) {
        auto gens = transposition_images(shape);
        SpanBasisQ a = lie_closure_q(gens);
        std::mt19937_64 rng(11);
        std::shuffle(gens.begin(), gens.end(), rng);
        SpanBasisQ b = lie_closure_q(gens);
        CHECK(a.rank() == b.rank());
        for (const auto& row : b.rows) CHECK(a.contains(row));
    }
}

TEST_CASE("conjugate shapes have equal closure rank") {
    for (int n = 4; n <= 6; ++n)
        for (const auto& shape : en_representatives(n))
            CHECK(g_lambda_dim(shape, FieldMode::Fp(kMersenne31)) ==
                  g_lambda_dim(shape.conjugate(), FieldMode::Fp(kMersenne31)));
}

TEST_CASE("osp containment") {
    CHECK(osp_containment_check(P("[2,2]")));
    CHECK(osp_containment_check(P("[3,2,1]")));
    CHECK(osp_containment_check(P("[2,1]")));
    CHECK_THROWS(osp_containment_check(P("[3,1]")));
}

TEST_CASE("theorem A small n") {
    ClosureReport r3 = theorem_a_verify(3, FieldMode::Q());
    CHECK(r3.pass);
    CHECK(r3.total == 3);
    ClosureReport r4 = theorem_a_verify(4, FieldMode::Q());
    CHECK(r4.pass);
    CHECK(r4.total == 11);
    for (const auto& [name, ok] : r4.containment_checks) CHECK_MESSAGE(ok, name);
    ClosureReport r5 = theorem_a_verify(5, FieldMode::Fp(kMersenne31));
    CHECK(r5.pass);
    CHECK(r5.total == 39);
}

TEST_CASE("distinct blocks are non-isomorphic") {
    // Prop-level check: no intertwiner between different irreducibles of dim >= 2.
    std::vector<Partition> shapes{P("[3,1]"), P("[2,2]"), P("[2,1,1]")};
    for (const auto& a : shapes)
        for (const auto& b : shapes) {
            auto p = solve_intertwiner(build_rep(a).gens, build_rep(b).gens);
            CHECK(p.has_value() == (a == b));
        }
}

TEST_CASE("prime collision surfaces as an error") {
    CHECK_THROWS_AS(g_lambda_dim(P("[2,1]"), FieldMode::Fp(2)), PrimeCollision);
}
