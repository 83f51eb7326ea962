#ifndef SYMREP_PARTITION_HPP
#define SYMREP_PARTITION_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symrep {

// Cell coordinates follow the drawing convention used throughout:
// part i is the length of COLUMN i, so cell (col, line) belongs to the
// diagram iff line <= parts[col-1]. Renderers transposing to the
// row-based convention must swap the two coordinates.
struct DiagramCell {
    int col = 0;
    int line = 0;
    friend bool operator==(const DiagramCell&, const DiagramCell&) = default;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Text format "[4,2,1]"; exponent shorthand "[4,2^3]" accepted.
    static Partition parse(const std::string& text);

    int n() const { return n_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;  // 1-based, 0 beyond the last part
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool is_self_conjugate() const { return *this == conjugate(); }

    std::vector<DiagramCell> cells() const;
    bool contains_cell(int col, int line) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Canonical order for map keys: by n, then lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Entrywise comparison of padded part sequences; first strict difference decides.
bool lex_less(const Partition& a, const Partition& b);

enum class ShapeClass { Hook, ProperAsym, ProperSym };

struct PartitionClass {
    ShapeClass tag;
    bool is_lex_representative = false;  // meaningful for ProperAsym only
};

// b(lambda) = max { i | lambda_i >= i }
int diagonal_length(const Partition& p);

bool is_hook(const Partition& p);
PartitionClass classify(const Partition& p);

// Descents: indices r with lambda_r > lambda_{r+1}.
std::vector<int> descents(const Partition& p);
Partition remove_at(const Partition& p, int r);
std::vector<Partition> predecessors(const Partition& p);

Partition diagram_union(const Partition& a, const Partition& b);
Partition diagram_intersection(const Partition& a, const Partition& b);

// Number of standard tableaux; product formula.
mpz_class dimension(const Partition& p);
// Independent route through the branching recursion (memoized).
mpz_class dimension_young(const Partition& p);

mpz_class binomial(int n, int k);

// The family D(a,b) = [a+2,2,1^b] and its closed-form dimension.
Partition dab(int a, int b);
mpz_class dim_dab(int a, int b);

// Shifts: cell pairs (i1,j1),(i2,j2) with i1 < i2 and j1 > j2.
long shift_count(const Partition& p);
// (-1)^{shift_count}; defined for self-conjugate shapes (+1 orthogonal, -1 symplectic).
int form_sign(const Partition& p);
// Product of (d-1)/(d+1) over shifts, d = (i2-i1)+(j1-j2); equals
// zeta(T) zeta(T') for every standard tableau of a self-conjugate shape.
mpq_class xi(const Partition& p);

// Character value on a transposition, normalized so gamma([n]) = +1.
mpz_class gamma(const Partition& p);
// Determinant of a transposition's matrix: (-1)^{(dim - gamma)/2}.
int eta(const Partition& p);

std::vector<Partition> enumerate_partitions(int n);
// One partition per conjugation class of E_n, the lex-smaller of {lambda, lambda'}.
std::vector<Partition> en_representatives(int n);
std::vector<Partition> fn_set(int n);

// dim of the orthogonal/symplectic algebra attached to a self-conjugate shape.
mpz_class osp_dim(const Partition& p);

// ((n-1)^2 - 1) + sum over E_n/~ of (dim^2 - 1) + sum over F_n of osp_dim.
mpz_class predicted_theorem_a_dim(int n);

// A self-conjugate partition of n; proper whenever one exists (n = 3 gives [2,1]).
Partition find_self_conjugate(int n);

}  // namespace symrep

#endif
