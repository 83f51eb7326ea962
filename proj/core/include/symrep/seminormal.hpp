#ifndef SYMREP_SEMINORMAL_HPP
#define SYMREP_SEMINORMAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "symrep/matrix.hpp"
#include "symrep/partition.hpp"
#include "symrep/tableau.hpp"

namespace symrep {

// Young's seminormal model on the canonical standard-tableau basis.
// Generators are the adjacent transpositions s_1 .. s_{n-1}.
struct RepHandle {
    Partition shape;
    std::vector<StandardTableau> basis;
    std::vector<MatrixQ> gens;  // gens[r-1] = matrix of s_r
    int n = 0;
    int dim() const { return static_cast<int>(basis.size()); }
};

RepHandle build_rep(const Partition& shape);

// Matrix of a single generator without keeping the handle around.
MatrixQ rep_gen(const Partition& shape, int r);

// Permutation given in one-line notation: perm[i-1] = sigma(i).
MatrixQ rep_perm(const RepHandle& h, const std::vector<int>& perm);
MatrixQ rep_transposition(const RepHandle& h, int i, int j);

struct CoxeterReport {
    bool ok = true;
    std::string first_violation;
};

// s_r^2 = 1, braid relations, and commutation at distance >= 2, exactly.
CoxeterReport verify_coxeter(const RepHandle& h);

// Sum over all transpositions; must be the scalar n(n-1) gamma / (2 dim).
struct TnResult {
    MatrixQ matrix;
    mpq_class scalar;
    bool is_scalar = false;
};
TnResult sum_transpositions(const RepHandle& h);

struct BilinearData {
    Partition shape;
    MatrixQ B;  // B[S,T] = w(T) delta_{S,T'}
    int sign = 0;
};
BilinearData bilinear_form(const Partition& shape);

// Diagonal invariant scalar product, G[T,T] = 1/zeta(T).
MatrixQ gram_matrix(const RepHandle& h);

// M(T) = w(T) zeta(T') T', a map from the shape's space to its conjugate's.
MatrixQ m_map(const Partition& shape);

// x^# = G^{-1} x^t G.
MatrixQ adjoint_wrt_gram(const RepHandle& h, const MatrixQ& x);

// Invertible P with P A_i = B_i P for all i, unique up to scalar between
// irreducibles; normalized so the first nonzero entry (row-major) is 1.
std::optional<MatrixQ> solve_intertwiner(const std::vector<MatrixQ>& gens_a,
                                         const std::vector<MatrixQ>& gens_b);

// r-subsets of {0..n-1} in lexicographic order: the canonical wedge basis.
std::vector<std::vector<int>> wedge_basis(int n, int r);

// Lambda^r of a matrix (minors on the canonical wedge basis).
MatrixQ wedge_power(const MatrixQ& x, int r);

// Derivation on the wedge: sum over slots of x acting in one slot.
MatrixQ delta_r(const MatrixQ& x, int r);

struct HookIsoReport {
    bool ok = true;
    std::string detail;
};

// (a) On Lambda^r of the permutation representation, the transposition as a
// derivation equals its wedge action plus (r-1) Id; (b) an intertwiner exists
// between rho_{[n-r,1^r]} shifted by (r-1) Id and the derivation action on
// Lambda^r of [n-1,1].
HookIsoReport hook_iso_check(int n, int r);

// Group-level identification W rho_{[n-r,1^r]}(sigma) W^{-1} = Lambda^r rho_{[n-1,1]}(sigma).
MatrixQ hook_intertwiner(int n, int r);

}  // namespace symrep

#endif
