#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symrep/hecke.hpp"
#include "symrep/json_io.hpp"
#include "symrep/lie_closure.hpp"
#include "symrep/partition.hpp"
#include "symrep/seminormal.hpp"
#include "symrep/tableau.hpp"

namespace {

using namespace symrep;

constexpr int kMaxN = 12;

int checked_n(int n) {
    if (n < 1 || n > kMaxN) throw CLI::ValidationError("n must be in 1.." + std::to_string(kMaxN));
    return n;
}

Partition parse_shape(const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string("bad partition: ") + e.what());
    }
}

void progress_to_stderr(long round, std::size_t rank) {
    std::cerr << "round " << round << ": rank " << rank << "\n";
}

int cmd_partitions_list(int n, bool json) {
    auto parts = enumerate_partitions(checked_n(n));
    if (json) {
        nlohmann::json out = {{"schema", 1}, {"n", n}, {"partitions", nlohmann::json::array()}};
        for (const auto& p : parts) out["partitions"].push_back(shape_json(p));
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& p : parts) std::cout << p.to_string() << "\n";
    }
    return 0;
}

int cmd_syt(const std::string& shape_text, bool count, bool enumerate, bool json) {
    Partition p = parse_shape(shape_text);
    checked_n(p.n());
    if (count) {
        if (json)
            std::cout << nlohmann::json{{"schema", 1},
                                        {"shape", shape_json(p)},
                                        {"count", dimension(p).get_str()}}
                             .dump()
                      << "\n";
        else
            std::cout << dimension(p).get_str() << "\n";
        return 0;
    }
    auto tabs = enumerate_syt(p);
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& t : tabs) out.push_back(tableau_json(t));
        std::cout << nlohmann::json{{"schema", 1}, {"tableaux", out}}.dump() << "\n";
    } else {
        for (const auto& t : tabs) std::cout << t.to_string() << "\n";
    }
    (void)enumerate;
    return 0;
}

int cmd_rep(const std::string& shape_text, bool matrices, bool verify, bool json) {
    Partition p = parse_shape(shape_text);
    checked_n(p.n());
    RepHandle h = build_rep(p);
    if (matrices) {
        for (int r = 1; r <= h.n - 1; ++r) {
            if (json)
                std::cout << matrix_json(p, r, h.gens[static_cast<size_t>(r - 1)]).dump() << "\n";
            else {
                std::cout << "s_" << r << ":\n";
                const MatrixQ& m = h.gens[static_cast<size_t>(r - 1)];
                for (int i = 0; i < m.rows(); ++i) {
                    for (int j = 0; j < m.cols(); ++j)
                        std::cout << (j ? " " : "") << m(i, j).get_str();
                    std::cout << "\n";
                }
            }
        }
        return 0;
    }
    (void)verify;
    CoxeterReport cox = verify_coxeter(h);
    TnResult tn = sum_transpositions(h);
    bool ok = cox.ok && tn.is_scalar;
    if (json)
        std::cout << nlohmann::json{{"schema", 1},
                                    {"shape", shape_json(p)},
                                    {"dim", h.dim()},
                                    {"coxeter", cox.ok},
                                    {"tn_scalar", tn.is_scalar},
                                    {"pass", ok}}
                         .dump()
                  << "\n";
    else
        std::cout << p.to_string() << ": dim " << h.dim() << ", coxeter "
                  << (cox.ok ? "ok" : ("FAIL (" + cox.first_violation + ")"))
                  << ", T_n scalar " << (tn.is_scalar ? "ok" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_closure(const std::string& shape_text, int all_n, const FieldMode& mode, bool json,
                bool verbose) {
    std::vector<Partition> shapes;
    if (all_n > 0) {
        for (const auto& p : enumerate_partitions(checked_n(all_n)))
            if (dimension(p) > 1) shapes.push_back(p);
    } else {
        shapes.push_back(parse_shape(shape_text));
        checked_n(shapes[0].n());
    }
    bool all_ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : shapes) {
        long dim = g_lambda_dim(p, mode);
        bool checked = false, ok = true;
        std::string cls = "unrestricted";
        if (!is_hook(p)) {
            mpz_class predicted;
            if (p.is_self_conjugate()) {
                predicted = osp_dim(p);
                cls = form_sign(p) > 0 ? "osp-sym" : "osp-symp";
            } else {
                predicted = dimension(p) * dimension(p) - 1;
                cls = "sl";
            }
            checked = true;
            ok = mpz_class(dim) == predicted;
            all_ok = all_ok && ok;
        }
        if (json)
            rows.push_back({{"shape", shape_json(p)}, {"dim", dim}, {"class", cls}, {"ok", ok}});
        else
            std::cout << p.to_string() << ": dim " << dim << " (" << cls << ")"
                      << (checked ? (ok ? " ok" : " MISMATCH") : "") << "\n";
        (void)verbose;
    }
    if (json)
        std::cout << nlohmann::json{{"schema", 1},
                                    {"mode", mode.to_string()},
                                    {"blocks", rows},
                                    {"pass", all_ok}}
                         .dump()
                  << "\n";
    return all_ok ? 0 : 1;
}

int cmd_theorem_a(int n, const FieldMode& mode, bool json, bool verbose) {
    ClosureReport rep = theorem_a_verify(checked_n(n), mode,
                                         verbose ? ProgressFn(progress_to_stderr) : ProgressFn{});
    if (json) {
        std::cout << closure_report_json(rep).dump() << "\n";
    } else {
        for (const auto& b : rep.blocks)
            std::cout << Partition(b.shape).to_string() << ": dim " << b.dim << " predicted "
                      << b.predicted.get_str() << " (" << b.cls << ")\n";
        for (const auto& [name, ok] : rep.containment_checks)
            std::cout << name << ": " << (ok ? "ok" : "FAIL") << "\n";
        std::cout << "total " << rep.total.get_str() << " predicted "
                  << rep.predicted_total.get_str() << " -> " << (rep.pass ? "pass" : "FAIL")
                  << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_hull_table(int n, bool json, bool csv) {
    auto rows = hull_table(checked_n(n));
    if (json)
        std::cout << hull_table_json(n, rows).dump() << "\n";
    else if (csv)
        std::cout << hull_table_csv(rows);
    else
        for (const auto& r : rows)
            std::cout << r.shape.to_string() << ": dim " << r.dim.get_str() << ", gamma "
                      << r.gamma.get_str() << ", eta " << r.eta << ", form "
                      << to_string(r.form) << ", " << to_string(r.G) << " / "
                      << to_string(r.Gtilde) << "\n";
    return 0;
}

int cmd_hecke_check(int n, int order, int trials, std::uint64_t seed, bool json) {
    checked_n(n);
    bool quad_ok = true, det_ok = true;
    for (const auto& p : enumerate_partitions(n)) {
        for (int i = 1; i <= n - 1; ++i) quad_ok = quad_ok && quadratic_check(p, i, order);
        det_ok = det_ok && det_check(p, order);
    }
    Table1Report t1 = table1_certificates(n, order, trials, seed);
    bool ok = quad_ok && det_ok && t1.pass;
    if (json) {
        nlohmann::json out = {{"schema", 1},
                              {"n", n},
                              {"order", order},
                              {"quadratic", quad_ok},
                              {"determinant", det_ok},
                              {"table1", table1_report_json(t1)},
                              {"pass", ok}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "quadratic relation: " << (quad_ok ? "ok" : "FAIL") << "\n";
        std::cout << "determinant law: " << (det_ok ? "ok" : "FAIL") << "\n";
        std::cout << "table-1 certificates: " << (t1.pass ? "ok" : ("FAIL (" + t1.detail + ")"))
                  << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_gnq_check(int n, int order, bool json) {
    checked_n(n);
    GnqContext ctx = build_gnq_context(n, order);
    GnqReport id_rep = gnq_membership(ctx, gnq_identity_tuple(ctx));

    std::vector<int> cycle(static_cast<size_t>(n));
    std::iota(cycle.begin(), cycle.end(), 1);
    cycle[0] = 2;
    cycle[1] = 3;
    cycle[2] = 1;  // the 3-cycle (1 2 3), an even permutation
    GnqReport even_rep = gnq_membership(ctx, gnq_perm_tuple(ctx, cycle));

    GnqReport braid_rep = gnq_membership(ctx, gnq_braid_tuple(ctx, 1));
    GnqReport inf_rep = infinitesimal_gnq(ctx, gnq_transposition_tuple(ctx, 1, 2));

    bool ok = id_rep.pass() && even_rep.pass() && !braid_rep.cond_osp && inf_rep.pass();
    if (json) {
        nlohmann::json out = {{"schema", 1},
                              {"n", n},
                              {"order", order},
                              {"identity", gnq_report_json(id_rep)},
                              {"even_permutation", gnq_report_json(even_rep)},
                              {"braid_sigma1", gnq_report_json(braid_rep)},
                              {"infinitesimal", gnq_report_json(inf_rep)},
                              {"pass", ok}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "identity tuple: " << (id_rep.pass() ? "pass" : "FAIL") << "\n";
        std::cout << "even permutation tuple: " << (even_rep.pass() ? "pass" : "FAIL") << "\n";
        std::cout << "sigma_1 tuple rejected on a symmetric block: "
                  << (!braid_rep.cond_osp ? "yes" : "NO") << "\n";
        std::cout << "transposition linearization: " << (inf_rep.pass() ? "pass" : "FAIL")
                  << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetric-group representation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string mode_text = "Q";
    int order = 8;
    int trials = 16;
    std::uint64_t seed = 1;
    int jobs = 1;
    app.add_option("--mode", mode_text, "field mode: Q or Fp:<prime>")
        ->envname("SYMREP_MODE")
        ->capture_default_str();
    app.add_option("--order", order, "series truncation order")
        ->envname("SYMREP_ORDER")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized certificates")
        ->envname("SYMREP_SEED")
        ->capture_default_str();
    app.add_option("--trials", trials, "number of random words")->capture_default_str();
    app.add_option("--jobs", jobs, "worker cap (runs are serial below this cap)")
        ->envname("SYMREP_JOBS")
        ->capture_default_str();
    bool json = false, csv = false, verbose = false;
    app.add_flag("--json", json, "machine-readable output");
    app.add_flag("--csv", csv, "CSV output where supported");
    app.add_flag("-v,--verbose", verbose, "progress to stderr");

    int n = 0;
    std::string shape_text;
    int all_n = 0;
    bool count = false, enumerate = false, matrices = false, verify = false;

    auto* c_parts = app.add_subcommand("partitions-list", "all partitions of n");
    c_parts->add_option("n", n, "weight")->required();

    auto* c_syt = app.add_subcommand("syt", "standard tableaux of a shape");
    c_syt->add_option("shape", shape_text, "partition, e.g. [3,1]")->required();
    auto* o_count = c_syt->add_flag("--count", count, "print the number only");
    c_syt->add_flag("--enumerate", enumerate, "print every tableau")->excludes(o_count);

    auto* c_rep = app.add_subcommand("rep", "seminormal representation of a shape");
    c_rep->add_option("shape", shape_text, "partition")->required();
    auto* o_mat = c_rep->add_flag("--matrices", matrices, "dump generator matrices");
    c_rep->add_flag("--verify", verify, "check Coxeter relations and the T_n scalar")
        ->excludes(o_mat);

    auto* c_clo = app.add_subcommand("closure", "bracket closure of transposition images");
    c_clo->add_option("shape", shape_text, "partition");
    c_clo->add_option("--all", all_n, "run every shape of n with dim > 1");

    auto* c_ta = app.add_subcommand("theorem-a", "block-diagonal closure certification");
    c_ta->add_option("n", n, "weight")->required();

    auto* c_hull = app.add_subcommand("hull-table", "hull classes of the proper shapes of n");
    c_hull->add_option("n", n, "weight")->required();

    auto* c_hecke = app.add_subcommand("hecke-check", "quadratic/determinant/certificate suite");
    c_hecke->add_option("n", n, "weight")->required();

    auto* c_gnq = app.add_subcommand("gnq-check", "membership checker on standard tuples");
    c_gnq->add_option("n", n, "weight")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        FieldMode mode = FieldMode::parse(mode_text);
        if (c_parts->parsed()) return cmd_partitions_list(n, json);
        if (c_syt->parsed()) return cmd_syt(shape_text, count || !enumerate, enumerate, json);
        if (c_rep->parsed()) return cmd_rep(shape_text, matrices, verify || !matrices, json);
        if (c_clo->parsed()) {
            if (shape_text.empty() == (all_n == 0)) {
                std::cerr << "closure needs exactly one of a shape or --all\n";
                return 2;
            }
            return cmd_closure(shape_text, all_n, mode, json, verbose);
        }
        if (c_ta->parsed()) return cmd_theorem_a(n, mode, json, verbose);
        if (c_hull->parsed()) return cmd_hull_table(n, json, csv);
        if (c_hecke->parsed()) return cmd_hecke_check(n, order, trials, seed, json);
        if (c_gnq->parsed()) return cmd_gnq_check(n, order, json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const PrimeCollision& e) {
        std::cerr << e.what() << "; retry with a different prime (e.g. --mode Fp:2305843009213693951)\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
