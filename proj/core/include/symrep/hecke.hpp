#ifndef SYMREP_HECKE_HPP
#define SYMREP_HECKE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symrep/partition.hpp"
#include "symrep/seminormal.hpp"
#include "symrep/series.hpp"

namespace symrep {

// Image of the i-th braid generator: rho(s_i) exp(h rho(s_i)).
SeriesMatrix braid_image(const Partition& shape, int i, int order);
SeriesMatrix braid_image(const RepHandle& h, int i, int order);

// (X - q)(X + q^{-1}) = 0 modulo h^K with q = e^h.
bool quadratic_check(const Partition& shape, int i, int order);

// det(braid image) = eta * exp(gamma h) for every generator.
bool det_check(const Partition& shape, int order);

enum class HullGroup { GL, SL, OSP };
enum class HullGroupTilde { GL, SL, SLtilde, OSPtilde };
enum class FormKind { None, Orthogonal, Symplectic };

struct HullClass {
    HullGroup G;
    HullGroupTilde Gtilde;
    mpz_class gamma;
    int eta;
    FormKind form;
};

std::string to_string(HullGroup g);
std::string to_string(HullGroupTilde g);
std::string to_string(FormKind f);

// Classification for proper shapes; hooks are rejected.
HullClass hull_classify(const Partition& shape);

struct Table1Report {
    int n = 0;
    int order = 0;
    int trials = 0;
    long det_checks = 0;       // even words on gamma = 0 blocks with det = 1
    long osp_checks = 0;       // even words on self-conjugate blocks preserving B
    long anti_checks = 0;      // single letters flipping B
    bool pass = false;
    std::string detail;
};

// Random even words certify the Table 1 inclusions; single letters certify
// the strict part.
Table1Report table1_certificates(int n, int order, int trials, std::uint64_t seed);

// Precomputed per-shape data for the membership checker on all shapes of n.
struct GnqContext {
    int n = 0;
    int order = 0;
    std::vector<Partition> shapes;
    std::map<Partition, RepHandle> reps;
    std::map<Partition, MatrixQ> duality;       // P for shapes in E_n^+
    std::map<Partition, BilinearData> forms;    // all self-conjugate shapes
    std::map<int, MatrixQ> hook_intertwiners;   // r -> W, and inverses below
    std::map<int, MatrixQ> hook_intertwiner_invs;
};

GnqContext build_gnq_context(int n, int order);

struct GnqReport {
    bool cond_duality = true;     // P x_{lambda'}^{-1} = x_lambda^# P
    bool cond_osp = true;         // x in OSP on self-conjugate blocks
    bool cond_det = true;         // det(x_lambda) = x_[n]^gamma
    bool cond_hooks = true;       // x_[n]^{r-1} x_{alpha_r} = Lambda^r x_alpha
    std::string detail;
    bool pass() const { return cond_duality && cond_osp && cond_det && cond_hooks; }
};

using SeriesTuple = std::map<Partition, SeriesMatrix>;
using MatrixTuple = std::map<Partition, MatrixQ>;

GnqReport gnq_membership(const GnqContext& ctx, const SeriesTuple& x);

// Blockwise image tuples for common inputs.
SeriesTuple gnq_identity_tuple(const GnqContext& ctx);
SeriesTuple gnq_perm_tuple(const GnqContext& ctx, const std::vector<int>& perm);
SeriesTuple gnq_braid_tuple(const GnqContext& ctx, int i);

// Linearized membership for a tuple of candidate Lie elements.
GnqReport infinitesimal_gnq(const GnqContext& ctx, const MatrixTuple& u);

MatrixTuple gnq_transposition_tuple(const GnqContext& ctx, int i, int j);

struct HullRow {
    Partition shape;
    mpz_class dim;
    mpz_class gamma;
    int eta;
    FormKind form;
    HullGroup G;
    HullGroupTilde Gtilde;
};

// One row per proper shape of n, in canonical order.
std::vector<HullRow> hull_table(int n);

}  // namespace symrep

#endif
