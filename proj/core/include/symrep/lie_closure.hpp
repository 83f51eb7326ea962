#ifndef SYMREP_LIE_CLOSURE_HPP
#define SYMREP_LIE_CLOSURE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symrep/fp.hpp"
#include "symrep/matrix.hpp"
#include "symrep/partition.hpp"

namespace symrep {

struct FieldMode {
    bool rational = true;
    std::uint64_t prime = 0;

    static FieldMode Q() { return {true, 0}; }
    static FieldMode Fp(std::uint64_t p) { return {false, p}; }
    // "Q" or "Fp:<prime>"
    static FieldMode parse(const std::string& text);
    std::string to_string() const;
    friend bool operator==(const FieldMode&, const FieldMode&) = default;
};

// Echelonized span of flattened matrices over the rationals.
struct SpanBasisQ {
    std::size_t ambient = 0;
    std::vector<std::vector<mpq_class>> rows;  // reduced echelon, leading 1 pivots
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return rows.size(); }
    bool contains(std::vector<mpq_class> v) const;  // by value: reduces a copy
};

using ProgressFn = std::function<void(long round, std::size_t rank)>;

// Smallest subspace containing the generators and closed under bracket.
SpanBasisQ lie_closure_q(const std::vector<MatrixQ>& gens,
                         const ProgressFn& progress = {});
long lie_closure_rank(const std::vector<MatrixQ>& gens, const FieldMode& mode,
                      const ProgressFn& progress = {});

// Closure of the transposition images intersected with the traceless matrices.
SpanBasisQ g_lambda_basis_q(const Partition& shape);
long g_lambda_dim(const Partition& shape, const FieldMode& mode);

// Every transposition image u satisfies u^t B = -B u for the canonical form.
bool osp_containment_check(const Partition& shape);

struct ClosureBlockReport {
    std::vector<int> shape;
    long matrix_dim = 0;
    long dim = 0;
    mpz_class predicted;
    std::string cls;  // "sl", "osp-sym", "osp-symp"
};

struct ClosureReport {
    int n = 0;
    FieldMode mode;
    std::vector<ClosureBlockReport> blocks;
    mpz_class total;
    mpz_class predicted_total;
    std::vector<std::pair<std::string, bool>> containment_checks;
    long rounds = 0;
    double elapsed_seconds = 0.0;
    bool pass = false;
};

// Block-diagonal closure over {alpha} + E_n/~ representatives + F_n, with the
// center subtracted per block; reports joint and per-block dimensions.
ClosureReport g_prime_dim(int n, const FieldMode& mode,
                          const ProgressFn& progress = {});

// g_prime_dim plus the exact-rational structural containment checks; in
// prime-field mode the mod-p rank is a lower bound and the rational checks
// supply the matching upper bound.
ClosureReport theorem_a_verify(int n, const FieldMode& mode,
                               const ProgressFn& progress = {});

}  // namespace symrep

#endif
