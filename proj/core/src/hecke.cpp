#include "symrep/hecke.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "symrep/matrix.hpp"

namespace symrep {

namespace {

SeriesMatrix series_from(const MatrixQ& m, int order) {
    return SeriesMatrix::from_constant(m, order);
}

// x^# = G^{-1} x^t G with the diagonal Gram matrix G[T,T] = 1/zeta(T).
SeriesMatrix series_adjoint(const RepHandle& h, const SeriesMatrix& x) {
    int d = h.dim();
    if (x.dim() != d) throw std::invalid_argument("adjoint dimension mismatch");
    std::vector<mpq_class> zeta(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) zeta[static_cast<size_t>(i)] = h.basis[static_cast<size_t>(i)].weight_zeta();
    SeriesMatrix out(d, x.order());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            mpq_class c = zeta[static_cast<size_t>(i)] / zeta[static_cast<size_t>(j)];
            out(i, j) = TruncSeries(x.order(), c) * x(j, i);
        }
    return out;
}

TruncSeries one_series(int order) { return TruncSeries(order, 1); }

TruncSeries series_scalar_power(const TruncSeries& s, const mpz_class& e) {
    if (!mpz_fits_slong_p(e.get_mpz_t()))
        throw std::overflow_error("series exponent too large");
    return s.pow(e.get_si());
}

}  // namespace

SeriesMatrix braid_image(const RepHandle& h, int i, int order) {
    if (i < 1 || i > h.n - 1) throw std::out_of_range("generator index out of range");
    const MatrixQ& s = h.gens[static_cast<size_t>(i - 1)];
    return series_from(s, order) * exp_matrix(s, order);
}

SeriesMatrix braid_image(const Partition& shape, int i, int order) {
    return braid_image(build_rep(shape), i, order);
}

bool quadratic_check(const Partition& shape, int i, int order) {
    RepHandle h = build_rep(shape);
    SeriesMatrix x = braid_image(h, i, order);
    TruncSeries q = exp_scalar(1, order);
    TruncSeries qi = exp_scalar(-1, order);
    SeriesMatrix id = SeriesMatrix::identity(h.dim(), order);
    SeriesMatrix lhs = x * x - (q - qi) * x - id;
    return lhs.is_zero();
}

bool det_check(const Partition& shape, int order) {
    RepHandle h = build_rep(shape);
    TruncSeries expected =
        TruncSeries(order, eta(shape)) * exp_scalar(mpq_class(gamma(shape)), order);
    for (int i = 1; i <= h.n - 1; ++i)
        if (det_series(braid_image(h, i, order)) != expected) return false;
    return true;
}

std::string to_string(HullGroup g) {
    switch (g) {
        case HullGroup::GL: return "GL";
        case HullGroup::SL: return "SL";
        case HullGroup::OSP: return "OSP";
    }
    return "?";
}

std::string to_string(HullGroupTilde g) {
    switch (g) {
        case HullGroupTilde::GL: return "GL";
        case HullGroupTilde::SL: return "SL";
        case HullGroupTilde::SLtilde: return "SL~";
        case HullGroupTilde::OSPtilde: return "OSP~";
    }
    return "?";
}

std::string to_string(FormKind f) {
    switch (f) {
        case FormKind::None: return "none";
        case FormKind::Orthogonal: return "orthogonal";
        case FormKind::Symplectic: return "symplectic";
    }
    return "?";
}

HullClass hull_classify(const Partition& shape) {
    if (is_hook(shape)) throw std::invalid_argument("hull class is defined for proper shapes only");
    HullClass c;
    c.gamma = gamma(shape);
    c.eta = eta(shape);
    c.form = FormKind::None;
    if (shape.is_self_conjugate()) {
        c.G = HullGroup::OSP;
        c.Gtilde = HullGroupTilde::OSPtilde;
        c.form = form_sign(shape) > 0 ? FormKind::Orthogonal : FormKind::Symplectic;
    } else if (c.gamma != 0) {
        c.G = HullGroup::GL;
        c.Gtilde = HullGroupTilde::GL;
    } else {
        c.G = HullGroup::SL;
        c.Gtilde = c.eta == 1 ? HullGroupTilde::SL : HullGroupTilde::SLtilde;
    }
    return c;
}

std::vector<HullRow> hull_table(int n) {
    std::vector<HullRow> rows;
    for (const Partition& p : enumerate_partitions(n)) {
        if (is_hook(p)) continue;
        HullClass c = hull_classify(p);
        rows.push_back({p, dimension(p), c.gamma, c.eta, c.form, c.G, c.Gtilde});
    }
    return rows;
}

Table1Report table1_certificates(int n, int order, int trials, std::uint64_t seed) {
    Table1Report rep;
    rep.n = n;
    rep.order = order;
    rep.trials = trials;
    rep.pass = true;
    if (n < 3) throw std::invalid_argument("need n >= 3");

    struct Block {
        RepHandle h;
        std::vector<SeriesMatrix> letters;  // braid images of s_1..s_{n-1}
        bool det_one = false;               // gamma = 0
        MatrixQ B;                          // self-conjugate form, 0x0 otherwise
    };
    std::vector<Block> blocks;
    for (const Partition& p : enumerate_partitions(n)) {
        if (dimension(p) == 1) continue;
        bool sc = p.is_self_conjugate();
        bool g0 = gamma(p) == 0;
        if (!sc && !g0) continue;
        Block b;
        b.h = build_rep(p);
        for (int i = 1; i <= n - 1; ++i) b.letters.push_back(braid_image(b.h, i, order));
        b.det_one = g0;
        if (sc) b.B = bilinear_form(p).B;
        blocks.push_back(std::move(b));
    }

    auto fail = [&](const std::string& what) {
        if (rep.pass) rep.detail = what;
        rep.pass = false;
    };

    TruncSeries one = one_series(order);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, 4);
    std::uniform_int_distribution<int> letter_dist(0, n - 2);

    for (int t = 0; t < trials; ++t) {
        int len = 2 * len_dist(rng);  // even words of length 2..8
        std::vector<int> word(static_cast<size_t>(len));
        for (int& w : word) w = letter_dist(rng);
        for (const Block& b : blocks) {
            SeriesMatrix x = b.letters[static_cast<size_t>(word[0])];
            for (int k = 1; k < len; ++k) x = x * b.letters[static_cast<size_t>(word[k])];
            if (b.det_one) {
                ++rep.det_checks;
                if (det_series(x) != one) fail("det != 1 on " + b.h.shape.to_string());
            }
            if (b.B.rows() > 0) {
                ++rep.osp_checks;
                SeriesMatrix bs = series_from(b.B, order);
                if (!(x.transpose() * bs * x == bs))
                    fail("form not preserved on " + b.h.shape.to_string());
            }
        }
    }

    // Single letters land strictly outside OSP: X^t B X = -B.
    for (const Block& b : blocks) {
        if (b.B.rows() == 0) continue;
        SeriesMatrix bs = series_from(b.B, order);
        SeriesMatrix neg = TruncSeries(order, -1) * bs;
        for (const SeriesMatrix& x : b.letters) {
            ++rep.anti_checks;
            if (!(x.transpose() * bs * x == neg))
                fail("anti-certificate failed on " + b.h.shape.to_string());
        }
    }
    return rep;
}

GnqContext build_gnq_context(int n, int order) {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    if (order < 2) throw std::invalid_argument("need order >= 2");
    GnqContext ctx;
    ctx.n = n;
    ctx.order = order;
    ctx.shapes = enumerate_partitions(n);
    for (const Partition& p : ctx.shapes) ctx.reps.emplace(p, build_rep(p));
    for (const Partition& p : ctx.shapes) {
        PartitionClass cls = classify(p);
        if (cls.tag == ShapeClass::ProperAsym && cls.is_lex_representative) {
            Partition q = p.conjugate();
            std::vector<MatrixQ> neg;
            for (const MatrixQ& g : ctx.reps.at(p).gens) neg.push_back(mpq_class(-1) * g);
            auto P = solve_intertwiner(ctx.reps.at(q).gens, neg);
            if (!P) throw std::runtime_error("missing duality intertwiner for " + p.to_string());
            ctx.duality.emplace(p, *P);
        }
        if (p.is_self_conjugate()) ctx.forms.emplace(p, bilinear_form(p));
    }
    for (int r = 1; r <= n - 1; ++r) {
        MatrixQ w = hook_intertwiner(n, r);
        ctx.hook_intertwiner_invs.emplace(r, inverse(w));
        ctx.hook_intertwiners.emplace(r, std::move(w));
    }
    return ctx;
}

GnqReport gnq_membership(const GnqContext& ctx, const SeriesTuple& x) {
    GnqReport rep;
    for (const Partition& p : ctx.shapes) {
        auto it = x.find(p);
        if (it == x.end()) throw std::invalid_argument("missing block " + p.to_string());
        if (it->second.dim() != ctx.reps.at(p).dim() || it->second.order() != ctx.order)
            throw std::invalid_argument("bad block " + p.to_string());
    }
    std::ostringstream detail;
    auto note = [&](const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    };

    // 1. P x_{lambda'}^{-1} = x_lambda^# P on conjugate pairs.
    for (const auto& [p, P] : ctx.duality) {
        SeriesMatrix ps = series_from(P, ctx.order);
        SeriesMatrix lhs = ps * series_inverse(x.at(p.conjugate()));
        SeriesMatrix rhs = series_adjoint(ctx.reps.at(p), x.at(p)) * ps;
        if (!(lhs == rhs)) {
            rep.cond_duality = false;
            note("duality fails on " + p.to_string());
        }
    }

    // 2. x^t B x = B on self-conjugate blocks.
    for (const auto& [p, form] : ctx.forms) {
        SeriesMatrix bs = series_from(form.B, ctx.order);
        const SeriesMatrix& xb = x.at(p);
        if (!(xb.transpose() * bs * xb == bs)) {
            rep.cond_osp = false;
            note("form fails on " + p.to_string());
        }
    }

    // 3. det(x_lambda) = x_[n]^{gamma}; negative exponents via multiplication.
    TruncSeries t = x.at(Partition({ctx.n}))(0, 0);
    TruncSeries one = one_series(ctx.order);
    for (const Partition& p : ctx.shapes) {
        mpz_class g = gamma(p);
        TruncSeries d = det_series(x.at(p));
        bool ok = g >= 0 ? d == series_scalar_power(t, g)
                         : d * series_scalar_power(t, -g) == one;
        if (!ok) {
            rep.cond_det = false;
            note("determinant fails on " + p.to_string());
        }
    }

    // 4. x_[n]^{r-1} x_{alpha_r} = Lambda^r x_alpha via the hook intertwiners.
    const SeriesMatrix& xa = x.at(Partition({ctx.n - 1, 1}));
    for (int r = 1; r <= ctx.n - 1; ++r) {
        std::vector<int> parts{ctx.n - r};
        for (int k = 0; k < r; ++k) parts.push_back(1);
        Partition alpha_r{parts};
        SeriesMatrix w = series_from(ctx.hook_intertwiners.at(r), ctx.order);
        SeriesMatrix wi = series_from(ctx.hook_intertwiner_invs.at(r), ctx.order);
        SeriesMatrix lhs = series_scalar_power(t, r - 1) * (w * x.at(alpha_r) * wi);
        SeriesMatrix rhs = series_wedge_power(xa, r);
        if (!(lhs == rhs)) {
            rep.cond_hooks = false;
            note("hook relation fails at r=" + std::to_string(r));
        }
    }

    rep.detail = detail.str();
    return rep;
}

SeriesTuple gnq_identity_tuple(const GnqContext& ctx) {
    SeriesTuple x;
    for (const auto& [p, h] : ctx.reps)
        x.emplace(p, SeriesMatrix::identity(h.dim(), ctx.order));
    return x;
}

SeriesTuple gnq_perm_tuple(const GnqContext& ctx, const std::vector<int>& perm) {
    SeriesTuple x;
    for (const auto& [p, h] : ctx.reps)
        x.emplace(p, series_from(rep_perm(h, perm), ctx.order));
    return x;
}

SeriesTuple gnq_braid_tuple(const GnqContext& ctx, int i) {
    SeriesTuple x;
    for (const auto& [p, h] : ctx.reps) x.emplace(p, braid_image(h, i, ctx.order));
    return x;
}

MatrixTuple gnq_transposition_tuple(const GnqContext& ctx, int i, int j) {
    MatrixTuple u;
    for (const auto& [p, h] : ctx.reps) u.emplace(p, rep_transposition(h, i, j));
    return u;
}

GnqReport infinitesimal_gnq(const GnqContext& ctx, const MatrixTuple& u) {
    GnqReport rep;
    for (const Partition& p : ctx.shapes) {
        auto it = u.find(p);
        if (it == u.end()) throw std::invalid_argument("missing block " + p.to_string());
        if (it->second.rows() != ctx.reps.at(p).dim())
            throw std::invalid_argument("bad block " + p.to_string());
    }
    std::ostringstream detail;
    auto note = [&](const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    };

    // P u_{lambda'} = -u_lambda^# P.
    for (const auto& [p, P] : ctx.duality) {
        MatrixQ lhs = P * u.at(p.conjugate());
        MatrixQ rhs = mpq_class(-1) * (adjoint_wrt_gram(ctx.reps.at(p), u.at(p)) * P);
        if (!(lhs == rhs)) {
            rep.cond_duality = false;
            note("duality fails on " + p.to_string());
        }
    }

    // u^t B + B u = 0 on self-conjugate blocks.
    for (const auto& [p, form] : ctx.forms) {
        const MatrixQ& ub = u.at(p);
        if (!(ub.transpose() * form.B + form.B * ub).is_zero()) {
            rep.cond_osp = false;
            note("osp condition fails on " + p.to_string());
        }
    }

    // tr(u_lambda) = gamma(lambda) * u_[n].
    mpq_class scalar = u.at(Partition({ctx.n}))(0, 0);
    for (const Partition& p : ctx.shapes) {
        if (u.at(p).trace() != mpq_class(gamma(p)) * scalar) {
            rep.cond_det = false;
            note("trace condition fails on " + p.to_string());
        }
    }

    // Delta_r(u_alpha) = W u_{alpha_r} W^{-1} + (r-1) u_[n] I on hooks.
    const MatrixQ& ua = u.at(Partition({ctx.n - 1, 1}));
    for (int r = 1; r <= ctx.n - 1; ++r) {
        std::vector<int> parts{ctx.n - r};
        for (int k = 0; k < r; ++k) parts.push_back(1);
        Partition alpha_r{parts};
        const MatrixQ& w = ctx.hook_intertwiners.at(r);
        const MatrixQ& wi = ctx.hook_intertwiner_invs.at(r);
        MatrixQ rhs = w * u.at(alpha_r) * wi +
                      (mpq_class(r - 1) * scalar) * MatrixQ::identity(w.rows());
        if (!(delta_r(ua, r) == rhs)) {
            rep.cond_hooks = false;
            note("hook linearization fails at r=" + std::to_string(r));
        }
    }

    rep.detail = detail.str();
    return rep;
}

}  // namespace symrep
