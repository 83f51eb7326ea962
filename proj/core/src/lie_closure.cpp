#include "symrep/lie_closure.hpp"

#include <chrono>
#include <deque>

#include "symrep/seminormal.hpp"

namespace symrep {

FieldMode FieldMode::parse(const std::string& text) {
    if (text == "Q" || text == "q") return Q();
    if (text.rfind("Fp:", 0) == 0 || text.rfind("fp:", 0) == 0) {
        std::uint64_t p = std::stoull(text.substr(3));
        PrimeField check(p);  // validates range
        (void)check;
        return Fp(p);
    }
    throw std::invalid_argument("field mode must be 'Q' or 'Fp:<prime>': " + text);
}

std::string FieldMode::to_string() const {
    return rational ? "Q" : "Fp:" + std::to_string(prime);
}

namespace {

struct RatOps {
    using Elem = mpq_class;
    static bool is_zero(const Elem& e) { return e == 0; }
    static Elem zero() { return 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem inv(const Elem& a) { return 1 / a; }
    static Elem from_q(const mpq_class& q) { return q; }
};

struct FpOps {
    PrimeField f;
    using Elem = std::uint64_t;
    static bool is_zero(Elem e) { return e == 0; }
    static Elem zero() { return 0; }
    Elem add(Elem a, Elem b) const { return f.add(a, b); }
    Elem sub(Elem a, Elem b) const { return f.sub(a, b); }
    Elem mul(Elem a, Elem b) const { return f.mul(a, b); }
    Elem inv(Elem a) const { return f.inv(a); }
    Elem from_q(const mpq_class& q) const { return f.reduce(q); }
};

// Reduced-echelon span of flattened block-diagonal matrices.
template <class Ops>
class Engine {
public:
    using E = typename Ops::Elem;

    Engine(Ops ops, std::vector<int> block_dims) : ops_(std::move(ops)), dims_(std::move(block_dims)) {
        for (int d : dims_) {
            offsets_.push_back(ambient_);
            ambient_ += static_cast<std::size_t>(d) * d;
        }
        pivot_of_col_.assign(ambient_, -1);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<E>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Full sweep against the basis; true iff something nonzero remains.
    bool reduce(std::vector<E>& v) const {
        bool nonzero = false;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (Ops::is_zero(v[c])) continue;
            long r = pivot_of_col_[c];
            if (r < 0) {
                nonzero = true;
                continue;
            }
            const auto& row = rows_[static_cast<std::size_t>(r)];
            E coeff = v[c];
            for (std::size_t j = c; j < ambient_; ++j) {
                if (Ops::is_zero(row[j])) continue;
                v[j] = ops_.sub(v[j], ops_.mul(coeff, row[j]));
            }
        }
        return nonzero;
    }

    // v must already be reduced and nonzero; normalizes, keeps RREF.
    std::size_t insert(std::vector<E> v) {
        std::size_t c = 0;
        while (c < ambient_ && Ops::is_zero(v[c])) ++c;
        E scale = ops_.inv(v[c]);
        for (std::size_t j = c; j < ambient_; ++j)
            if (!Ops::is_zero(v[j])) v[j] = ops_.mul(v[j], scale);
        for (auto& row : rows_) {
            if (Ops::is_zero(row[c])) continue;
            E coeff = row[c];
            for (std::size_t j = c; j < ambient_; ++j)
                if (!Ops::is_zero(v[j])) row[j] = ops_.sub(row[j], ops_.mul(coeff, v[j]));
        }
        pivot_of_col_[c] = static_cast<long>(rows_.size());
        pivots_.push_back(c);
        rows_.push_back(std::move(v));
        return rows_.size() - 1;
    }

    // [a, b] computed blockwise on flat vectors.
    std::vector<E> bracket(const std::vector<E>& a, const std::vector<E>& b) const {
        std::vector<E> out(ambient_, Ops::zero());
        for (std::size_t blk = 0; blk < dims_.size(); ++blk) {
            std::size_t o = offsets_[blk];
            std::size_t m = static_cast<std::size_t>(dims_[blk]);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < m; ++k) {
                    const E& aik = a[o + i * m + k];
                    const E& bik = b[o + i * m + k];
                    if (!Ops::is_zero(aik)) {
                        const E* brow = &b[o + k * m];
                        E* orow = &out[o + i * m];
                        for (std::size_t j = 0; j < m; ++j)
                            orow[j] = ops_.add(orow[j], ops_.mul(aik, brow[j]));
                    }
                    if (!Ops::is_zero(bik)) {
                        const E* arow = &a[o + k * m];
                        E* orow = &out[o + i * m];
                        for (std::size_t j = 0; j < m; ++j)
                            orow[j] = ops_.sub(orow[j], ops_.mul(bik, arow[j]));
                    }
                }
        }
        return out;
    }

private:
    Ops ops_;
    std::vector<int> dims_;
    std::vector<std::size_t> offsets_;
    std::size_t ambient_ = 0;
    std::vector<std::vector<E>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> pivot_of_col_;
};

template <class Ops>
std::vector<typename Ops::Elem> flatten_blocks(const Ops& ops,
                                               const std::vector<MatrixQ>& blocks) {
    std::vector<typename Ops::Elem> out;
    for (const auto& m : blocks)
        for (const auto& e : m.entries()) out.push_back(ops.from_q(e));
    return out;
}

struct RunStats {
    long rounds = 0;
};

// Saturation: new basis vectors are bracketed against the generators only;
// left-normed brackets span the generated subalgebra, so the fixed point of
// this loop is the full bracket closure.
template <class Ops>
RunStats run_closure(Engine<Ops>& eng,
                     const std::vector<std::vector<typename Ops::Elem>>& gens,
                     const ProgressFn& progress) {
    std::deque<std::vector<typename Ops::Elem>> queue;
    for (const auto& g : gens) {
        auto v = g;
        if (eng.reduce(v)) {
            std::size_t idx = eng.insert(std::move(v));
            queue.push_back(eng.rows()[idx]);
        }
    }
    RunStats stats;
    std::size_t in_round = queue.size();
    while (!queue.empty()) {
        if (in_round == 0) {
            ++stats.rounds;
            if (progress) progress(stats.rounds, eng.rank());
            in_round = queue.size();
        }
        auto v = std::move(queue.front());
        queue.pop_front();
        --in_round;
        for (const auto& g : gens) {
            auto w = eng.bracket(g, v);
            if (eng.reduce(w)) {
                std::size_t idx = eng.insert(std::move(w));
                queue.push_back(eng.rows()[idx]);
            }
        }
    }
    ++stats.rounds;
    if (progress) progress(stats.rounds, eng.rank());
    return stats;
}

std::vector<int> single_block_dims(const std::vector<MatrixQ>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    int d = gens[0].rows();
    for (const auto& g : gens)
        if (!g.is_square() || g.rows() != d)
            throw std::invalid_argument("generators must be square of equal size");
    return {d};
}

std::vector<MatrixQ> transposition_images(const RepHandle& h) {
    std::vector<MatrixQ> out;
    for (int i = 1; i <= h.n; ++i)
        for (int j = i + 1; j <= h.n; ++j) out.push_back(rep_transposition(h, i, j));
    return out;
}

}  // namespace

bool SpanBasisQ::contains(std::vector<mpq_class> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t c = pivots[r];
        if (v[c] == 0) continue;
        mpq_class coeff = v[c];
        for (std::size_t j = c; j < ambient; ++j)
            if (rows[r][j] != 0) v[j] -= coeff * rows[r][j];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

SpanBasisQ lie_closure_q(const std::vector<MatrixQ>& gens, const ProgressFn& progress) {
    Engine<RatOps> eng(RatOps{}, single_block_dims(gens));
    std::vector<std::vector<mpq_class>> flats;
    for (const auto& g : gens) flats.push_back(flatten_blocks(RatOps{}, {g}));
    run_closure(eng, flats, progress);
    return {eng.ambient(), eng.rows(), eng.pivots()};
}

long lie_closure_rank(const std::vector<MatrixQ>& gens, const FieldMode& mode,
                      const ProgressFn& progress) {
    if (mode.rational) return static_cast<long>(lie_closure_q(gens, progress).rank());
    FpOps ops{PrimeField(mode.prime)};
    Engine<FpOps> eng(ops, single_block_dims(gens));
    std::vector<std::vector<std::uint64_t>> flats;
    for (const auto& g : gens) flats.push_back(flatten_blocks(ops, {g}));
    run_closure(eng, flats, progress);
    return static_cast<long>(eng.rank());
}

namespace {

std::vector<mpq_class> flatten_identity(int d) {
    std::vector<mpq_class> v(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i) * d + i] = 1;
    return v;
}

template <class Ops>
bool span_contains_identity(const Engine<Ops>& eng, const Ops& ops, int d) {
    std::vector<typename Ops::Elem> v(static_cast<std::size_t>(d) * d, Ops::zero());
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i) * d + i] = ops.from_q(1);
    auto copy = v;
    return !eng.reduce(copy);
}

}  // namespace

SpanBasisQ g_lambda_basis_q(const Partition& shape) {
    if (dimension(shape) <= 1)
        throw std::invalid_argument("g_lambda needs dim > 1");
    RepHandle h = build_rep(shape);
    auto gens = transposition_images(h);
    Engine<RatOps> eng(RatOps{}, {h.dim()});
    std::vector<std::vector<mpq_class>> flats;
    for (const auto& g : gens) flats.push_back(flatten_blocks(RatOps{}, {g}));
    run_closure(eng, flats, {});
    // Intersect with the traceless matrices: project x -> x - (tr x / N) I.
    int N = h.dim();
    Engine<RatOps> traceless(RatOps{}, {N});
    for (auto row : eng.rows()) {
        mpq_class tr = 0;
        for (int i = 0; i < N; ++i) tr += row[static_cast<std::size_t>(i) * N + i];
        if (tr != 0) {
            mpq_class shift = tr / N;
            for (int i = 0; i < N; ++i) row[static_cast<std::size_t>(i) * N + i] -= shift;
        }
        if (traceless.reduce(row)) traceless.insert(std::move(row));
    }
    return {traceless.ambient(), traceless.rows(), traceless.pivots()};
}

long g_lambda_dim(const Partition& shape, const FieldMode& mode) {
    if (dimension(shape) <= 1)
        throw std::invalid_argument("g_lambda needs dim > 1");
    if (mode.rational) return static_cast<long>(g_lambda_basis_q(shape).rank());
    RepHandle h = build_rep(shape);
    auto gens = transposition_images(h);
    FpOps ops{PrimeField(mode.prime)};
    Engine<FpOps> eng(ops, {h.dim()});
    std::vector<std::vector<std::uint64_t>> flats;
    for (const auto& g : gens) flats.push_back(flatten_blocks(ops, {g}));
    run_closure(eng, flats, {});
    long rank = static_cast<long>(eng.rank());
    if (span_contains_identity(eng, ops, h.dim())) --rank;
    return rank;
}

bool osp_containment_check(const Partition& shape) {
    if (!shape.is_self_conjugate())
        throw std::invalid_argument("osp containment needs a self-conjugate shape");
    auto bd = bilinear_form(shape);
    RepHandle h = build_rep(shape);
    for (const auto& u : transposition_images(h)) {
        MatrixQ lhs = u.transpose() * bd.B;
        MatrixQ rhs = mpq_class(-1) * (bd.B * u);
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

struct BlockSpec {
    Partition shape;
    std::string cls;
    mpz_class predicted;
    RepHandle rep;
    mpq_class center;  // gamma / dim
};

std::vector<BlockSpec> theorem_a_blocks(int n) {
    std::vector<BlockSpec> out;
    auto add = [&](const Partition& p, std::string cls, mpz_class predicted) {
        BlockSpec b{p, std::move(cls), std::move(predicted), build_rep(p), 0};
        b.center = mpq_class(gamma(p)) / mpq_class(dimension(p));
        out.push_back(std::move(b));
    };
    std::vector<int> alpha_parts{n - 1, 1};
    add(Partition(alpha_parts), "sl", mpz_class(n - 1) * (n - 1) - 1);
    for (const auto& p : en_representatives(n)) {
        mpz_class d = dimension(p);
        add(p, "sl", d * d - 1);
    }
    for (const auto& p : fn_set(n))
        add(p, form_sign(p) > 0 ? "osp-sym" : "osp-symp", osp_dim(p));
    return out;
}

// Block-diagonal images of tau - gamma/dim per block, one element per transposition.
std::vector<std::vector<MatrixQ>> theorem_a_generators(int n,
                                                       const std::vector<BlockSpec>& blocks) {
    std::vector<std::vector<MatrixQ>> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<MatrixQ> blockmats;
            for (const auto& b : blocks) {
                MatrixQ m = rep_transposition(b.rep, i, j);
                for (int k = 0; k < m.rows(); ++k) m(k, k) -= b.center;
                blockmats.push_back(std::move(m));
            }
            gens.push_back(std::move(blockmats));
        }
    return gens;
}

template <class Ops>
ClosureReport run_g_prime(int n, const FieldMode& mode, Ops ops,
                          const std::vector<BlockSpec>& blocks,
                          const ProgressFn& progress) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> dims;
    for (const auto& b : blocks) dims.push_back(b.rep.dim());
    Engine<Ops> eng(ops, dims);
    std::vector<std::vector<typename Ops::Elem>> flats;
    for (const auto& g : theorem_a_generators(n, blocks))
        flats.push_back(flatten_blocks(ops, g));
    auto stats = run_closure(eng, flats, progress);

    ClosureReport report;
    report.n = n;
    report.mode = mode;
    report.rounds = stats.rounds;
    report.total = static_cast<long>(eng.rank());
    report.predicted_total = predicted_theorem_a_dim(n);

    // Per-block dimensions from echelonized projections of the joint basis.
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        std::size_t len = static_cast<std::size_t>(b.rep.dim()) * b.rep.dim();
        Engine<Ops> proj(ops, {b.rep.dim()});
        for (const auto& row : eng.rows()) {
            std::vector<typename Ops::Elem> slice(row.begin() + offset,
                                                  row.begin() + offset + len);
            if (proj.reduce(slice)) proj.insert(std::move(slice));
        }
        ClosureBlockReport cb;
        cb.shape = b.shape.parts();
        cb.matrix_dim = b.rep.dim();
        cb.dim = static_cast<long>(proj.rank());
        cb.predicted = b.predicted;
        cb.cls = b.cls;
        report.blocks.push_back(std::move(cb));
        offset += len;
    }

    report.pass = report.total == report.predicted_total;
    for (const auto& cb : report.blocks)
        if (mpz_class(cb.dim) != cb.predicted) report.pass = false;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace

ClosureReport g_prime_dim(int n, const FieldMode& mode, const ProgressFn& progress) {
    if (n < 3) throw std::invalid_argument("g_prime_dim needs n >= 3");
    auto blocks = theorem_a_blocks(n);
    if (mode.rational)
        return run_g_prime(n, mode, RatOps{}, blocks, progress);
    return run_g_prime(n, mode, FpOps{PrimeField(mode.prime)}, blocks, progress);
}

ClosureReport theorem_a_verify(int n, const FieldMode& mode, const ProgressFn& progress) {
    ClosureReport report = g_prime_dim(n, mode, progress);
    auto t0 = std::chrono::steady_clock::now();
    auto blocks = theorem_a_blocks(n);

    // Centered generators are traceless in every block.
    bool traceless = true;
    for (const auto& g : theorem_a_generators(n, blocks))
        for (const auto& m : g)
            if (m.trace() != 0) traceless = false;
    report.containment_checks.emplace_back("traceless", traceless);

    // osp condition on the self-conjugate blocks.
    bool osp_ok = true;
    for (const auto& p : fn_set(n))
        if (!osp_containment_check(p)) osp_ok = false;
    report.containment_checks.emplace_back("osp_containment", osp_ok);

    // Conjugate pairs intertwine through the sign twist.
    bool duality_ok = true;
    for (const auto& p : en_representatives(n)) {
        RepHandle a = build_rep(p.conjugate());
        RepHandle b = build_rep(p);
        std::vector<MatrixQ> ga = a.gens, gb;
        for (const auto& m : b.gens) gb.push_back(mpq_class(-1) * m);
        if (!solve_intertwiner(ga, gb)) duality_ok = false;
    }
    report.containment_checks.emplace_back("conjugate_duality", duality_ok);

    for (const auto& [name, ok] : report.containment_checks)
        if (!ok) report.pass = false;
    report.elapsed_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace symrep
