#include "symrep/seminormal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace symrep {

namespace {

int basis_index(const std::vector<StandardTableau>& basis, const StandardTableau& t) {
    auto key = t.sort_key();
    auto it = std::lower_bound(basis.begin(), basis.end(), key,
                               [](const StandardTableau& a, const std::vector<int>& k) {
                                   return a.sort_key() < k;
                               });
    if (it == basis.end() || it->sort_key() != key)
        throw std::logic_error("tableau not found in canonical basis");
    return static_cast<int>(it - basis.begin());
}

}  // namespace

RepHandle build_rep(const Partition& shape) {
    RepHandle h;
    h.shape = shape;
    h.n = shape.n();
    h.basis = enumerate_syt(shape);
    int N = h.dim();
    for (int r = 1; r <= h.n - 1; ++r) {
        MatrixQ m(N, N);
        for (int t = 0; t < N; ++t) {
            const auto& T = h.basis[t];
            if (T.same_column(r)) {
                m(t, t) = 1;
            } else if (T.same_line(r)) {
                m(t, t) = -1;
            } else if (T.less_than_swapped(r)) {
                // Basis pair (T, T_r) with d = d_T(r+1, r) > 0:
                //   s_r . T   = (-1/d) T + ((d-1)/d) T_r
                //   s_r . T_r = ((d+1)/d) T + (1/d) T_r
                int d = T.axial_distance(r + 1, r);
                int u = basis_index(h.basis, *T.swap(r));
                auto frac = [](int num, int den) {
                    mpq_class q(num, den);
                    q.canonicalize();
                    return q;
                };
                m(t, t) = frac(-1, d);
                m(u, t) = frac(d - 1, d);
                m(t, u) = frac(d + 1, d);
                m(u, u) = frac(1, d);
            }
        }
        h.gens.push_back(std::move(m));
    }
    return h;
}

MatrixQ rep_gen(const Partition& shape, int r) {
    if (r < 1 || r > shape.n() - 1)
        throw std::out_of_range("generator index out of range");
    return build_rep(shape).gens[r - 1];
}

MatrixQ rep_perm(const RepHandle& h, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != h.n)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<int> p = perm;
    {
        std::vector<bool> seen(p.size() + 1, false);
        for (int v : p) {
            if (v < 1 || v > h.n || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }
    // Bubble-sort decomposition into adjacent transpositions.
    MatrixQ out = MatrixQ::identity(h.dim());
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < h.n; ++i) {
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                out = h.gens[i] * out;
                moved = true;
            }
        }
    }
    return out;
}

MatrixQ rep_transposition(const RepHandle& h, int i, int j) {
    std::vector<int> perm(static_cast<size_t>(h.n));
    std::iota(perm.begin(), perm.end(), 1);
    std::swap(perm[i - 1], perm[j - 1]);
    return rep_perm(h, perm);
}

CoxeterReport verify_coxeter(const RepHandle& h) {
    const auto& g = h.gens;
    int m = static_cast<int>(g.size());
    MatrixQ id = MatrixQ::identity(h.dim());
    auto fail = [&](const std::string& what) {
        return CoxeterReport{false, what + " on " + h.shape.to_string()};
    };
    for (int i = 0; i < m; ++i)
        if (g[i] * g[i] != id) return fail("s_" + std::to_string(i + 1) + "^2 != 1");
    for (int i = 0; i + 1 < m; ++i)
        if (g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1])
            return fail("braid relation at " + std::to_string(i + 1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j)
            if (g[i] * g[j] != g[j] * g[i])
                return fail("commutation " + std::to_string(i + 1) + "," + std::to_string(j + 1));
    return {};
}

TnResult sum_transpositions(const RepHandle& h) {
    int N = h.dim();
    MatrixQ sum(N, N);
    for (int i = 1; i <= h.n; ++i)
        for (int j = i + 1; j <= h.n; ++j) sum = sum + rep_transposition(h, i, j);
    TnResult res{sum, 0, true};
    res.scalar = sum(0, 0);
    for (int i = 0; i < N && res.is_scalar; ++i)
        for (int j = 0; j < N; ++j)
            if ((i == j ? res.scalar : mpq_class(0)) != sum(i, j)) {
                res.is_scalar = false;
                break;
            }
    return res;
}

BilinearData bilinear_form(const Partition& shape) {
    if (!shape.is_self_conjugate())
        throw std::invalid_argument("bilinear form needs a self-conjugate shape");
    auto basis = enumerate_syt(shape);
    int N = static_cast<int>(basis.size());
    MatrixQ B(N, N);
    for (int t = 0; t < N; ++t) {
        int s = basis_index(basis, basis[t].conjugate());
        B(s, t) = basis[t].weight_w();
    }
    return {shape, std::move(B), form_sign(shape)};
}

MatrixQ gram_matrix(const RepHandle& h) {
    int N = h.dim();
    MatrixQ G(N, N);
    for (int t = 0; t < N; ++t) G(t, t) = 1 / h.basis[t].weight_zeta();
    return G;
}

MatrixQ m_map(const Partition& shape) {
    auto basis = enumerate_syt(shape);
    auto cobasis = enumerate_syt(shape.conjugate());
    int N = static_cast<int>(basis.size());
    MatrixQ M(N, N);
    for (int t = 0; t < N; ++t) {
        auto conj = basis[t].conjugate();
        int row = basis_index(cobasis, conj);
        M(row, t) = mpq_class(basis[t].weight_w()) * conj.weight_zeta();
    }
    return M;
}

MatrixQ adjoint_wrt_gram(const RepHandle& h, const MatrixQ& x) {
    if (x.rows() != h.dim() || x.cols() != h.dim())
        throw std::invalid_argument("adjoint dimension mismatch");
    int N = h.dim();
    MatrixQ out(N, N);
    // G is diagonal with G[t] = 1/zeta(t): (G^-1 x^t G)[i,j] = zeta(i)/zeta(j) x[j,i].
    std::vector<mpq_class> zeta(static_cast<size_t>(N));
    for (int t = 0; t < N; ++t) zeta[t] = h.basis[t].weight_zeta();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) out(i, j) = zeta[i] / zeta[j] * x(j, i);
    return out;
}

std::optional<MatrixQ> solve_intertwiner(const std::vector<MatrixQ>& gens_a,
                                         const std::vector<MatrixQ>& gens_b) {
    if (gens_a.size() != gens_b.size())
        throw std::invalid_argument("generator count mismatch");
    if (gens_a.empty()) throw std::invalid_argument("no generators");
    int a = gens_a[0].rows(), b = gens_b[0].rows();
    // Unknown P is b x a, flattened row-major; equations P A_i - B_i P = 0.
    int vars = a * b;
    int eqs = static_cast<int>(gens_a.size()) * vars;
    MatrixQ sys(eqs, vars);
    int row = 0;
    for (size_t g = 0; g < gens_a.size(); ++g) {
        const MatrixQ& A = gens_a[g];
        const MatrixQ& B = gens_b[g];
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) {
                // d/dP[k,l] of (P A - B P)[i,j]
                for (int l = 0; l < a; ++l) sys(row, i * a + l) += A(l, j);
                for (int k = 0; k < b; ++k) sys(row, k * a + j) -= B(i, k);
                ++row;
            }
    }
    auto null = nullspace(sys);
    auto unflatten = [&](const std::vector<mpq_class>& v) {
        MatrixQ P(b, a);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) P(i, j) = v[static_cast<size_t>(i) * a + j];
        return P;
    };
    auto invertible = [&](const MatrixQ& P) {
        if (!P.is_square()) return false;
        MatrixQ c = P;
        return rref(c) == P.rows();
    };
    auto normalize = [&](MatrixQ P) {
        for (auto& x : P.entries())
            if (x != 0) {
                mpq_class inv = 1 / x;
                for (auto& y : P.entries()) y *= inv;
                break;
            }
        return P;
    };
    for (const auto& v : null) {
        MatrixQ P = unflatten(v);
        if (invertible(P)) return normalize(std::move(P));
    }
    // For reducible inputs a generic combination can be invertible even when no
    // single basis vector is; try a few deterministic combinations.
    if (null.size() > 1 && a == b) {
        for (int salt = 1; salt <= 8; ++salt) {
            std::vector<mpq_class> v(static_cast<size_t>(vars));
            long c = 1;
            for (const auto& w : null) {
                for (size_t k = 0; k < v.size(); ++k) v[k] += c * w[k];
                c = c * (salt + 2) + 1;
            }
            MatrixQ P = unflatten(v);
            if (invertible(P)) return normalize(std::move(P));
        }
    }
    return std::nullopt;
}

std::vector<std::vector<int>> wedge_basis(int n, int r) {
    if (r < 0 || r > n) throw std::out_of_range("wedge degree out of range");
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (r == 0) out.assign(1, {});
    return out;
}

namespace {
mpq_class minor_det(const MatrixQ& x, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    int r = static_cast<int>(rows.size());
    MatrixQ sub(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub(i, j) = x(rows[i], cols[j]);
    // Expansion by Gaussian elimination.
    mpq_class det = 1;
    for (int col = 0; col < r; ++col) {
        int pivot = -1;
        for (int i = col; i < r; ++i)
            if (sub(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < r; ++j) std::swap(sub(pivot, j), sub(col, j));
            det = -det;
        }
        det *= sub(col, col);
        mpq_class inv = 1 / sub(col, col);
        for (int i = col + 1; i < r; ++i) {
            if (sub(i, col) == 0) continue;
            mpq_class f = sub(i, col) * inv;
            for (int j = col; j < r; ++j) sub(i, j) -= f * sub(col, j);
        }
    }
    return det;
}
}  // namespace

MatrixQ wedge_power(const MatrixQ& x, int r) {
    if (!x.is_square()) throw std::invalid_argument("wedge power of non-square matrix");
    auto basis = wedge_basis(x.rows(), r);
    int N = static_cast<int>(basis.size());
    MatrixQ out(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) out(i, j) = minor_det(x, basis[i], basis[j]);
    return out;
}

MatrixQ delta_r(const MatrixQ& x, int r) {
    if (!x.is_square()) throw std::invalid_argument("delta_r of non-square matrix");
    int n = x.rows();
    if (r < 1 || r > n) throw std::out_of_range("delta_r degree out of range");
    auto basis = wedge_basis(n, r);
    std::map<std::vector<int>, int> index;
    for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
    int N = static_cast<int>(basis.size());
    MatrixQ out(N, N);
    for (int j = 0; j < N; ++j) {
        const auto& J = basis[j];
        for (int slot = 0; slot < r; ++slot) {
            for (int target = 0; target < n; ++target) {
                if (x(target, J[slot]) == 0) continue;
                // Replace J[slot] by target, resort, track the sign.
                std::vector<int> I = J;
                I[slot] = target;
                int sign = 1;
                bool zero = false;
                for (int a = 0; a < r && !zero; ++a)
                    for (int b = a + 1; b < r; ++b) {
                        if (I[a] == I[b]) { zero = true; break; }
                        if (I[a] > I[b]) { std::swap(I[a], I[b]); sign = -sign; }
                    }
                if (zero) continue;
                out(index[I], j) += sign * x(target, J[slot]);
            }
        }
    }
    return out;
}

namespace {
MatrixQ permutation_rep_transposition(int n, int a, int b) {
    MatrixQ m(n, n);
    for (int i = 0; i < n; ++i) {
        int img = i;
        if (i == a) img = b;
        else if (i == b) img = a;
        m(img, i) = 1;
    }
    return m;
}

Partition hook_partition(int n, int r) {
    std::vector<int> parts{n - r};
    for (int k = 0; k < r; ++k) parts.push_back(1);
    return Partition(std::move(parts));
}
}  // namespace

HookIsoReport hook_iso_check(int n, int r) {
    if (n < 3 || r < 1 || r > n - 1)
        throw std::out_of_range("hook_iso_check needs n >= 3, 1 <= r <= n-1");
    // (a) On Lambda^r of the permutation representation, adjacent transpositions
    // act as a derivation equal to the wedge action shifted by (r-1) Id.
    int N_wedge_beta = static_cast<int>(wedge_basis(n, r).size());
    MatrixQ id_beta = MatrixQ::identity(N_wedge_beta);
    for (int i = 0; i + 1 < n; ++i) {
        MatrixQ tau = permutation_rep_transposition(n, i, i + 1);
        if (delta_r(tau, r) != wedge_power(tau, r) + mpq_class(r - 1) * id_beta) {
            std::ostringstream msg;
            msg << "derivation identity fails on generator " << i + 1
                << " for n=" << n << " r=" << r;
            return {false, msg.str()};
        }
    }
    // (b) The hook representation matches the derivation action on Lambda^r
    // of the reflection representation, up to the same shift.
    RepHandle alpha = build_rep(hook_partition(n, 1));
    RepHandle alpha_r = build_rep(hook_partition(n, r));
    MatrixQ id = MatrixQ::identity(alpha_r.dim());
    std::vector<MatrixQ> gens_a, gens_b;
    for (int i = 0; i + 1 < n; ++i) {
        gens_a.push_back(alpha_r.gens[i] + mpq_class(r - 1) * id);
        gens_b.push_back(delta_r(alpha.gens[i], r));
    }
    if (!solve_intertwiner(gens_a, gens_b))
        return {false, "no intertwiner for n=" + std::to_string(n) + " r=" + std::to_string(r)};
    return {};
}

MatrixQ hook_intertwiner(int n, int r) {
    RepHandle alpha = build_rep(hook_partition(n, 1));
    RepHandle alpha_r = build_rep(hook_partition(n, r));
    std::vector<MatrixQ> gens_a, gens_b;
    for (int i = 0; i + 1 < n; ++i) {
        gens_a.push_back(alpha_r.gens[i]);
        gens_b.push_back(wedge_power(alpha.gens[i], r));
    }
    auto W = solve_intertwiner(gens_a, gens_b);
    if (!W) throw std::logic_error("hook intertwiner not found");
    return *W;
}

}  // namespace symrep
