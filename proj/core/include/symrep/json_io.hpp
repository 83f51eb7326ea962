#ifndef SYMREP_JSON_IO_HPP
#define SYMREP_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "symrep/hecke.hpp"
#include "symrep/lie_closure.hpp"
#include "symrep/matrix.hpp"
#include "symrep/partition.hpp"
#include "symrep/tableau.hpp"

namespace symrep {

inline nlohmann::json shape_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

inline Partition shape_from_json(const nlohmann::json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline nlohmann::json tableau_json(const StandardTableau& t) {
    nlohmann::json cells = nlohmann::json::array();
    for (int e = 1; e <= t.shape().n(); ++e) {
        auto c = t.cell_of(e);
        cells.push_back({e, c.col, c.line});
    }
    return {{"shape", shape_json(t.shape())}, {"cells", cells}};
}

inline nlohmann::json matrix_json(const Partition& shape, int r, const MatrixQ& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        entries.push_back(row);
    }
    return {{"shape", shape_json(shape)}, {"generator", r}, {"entries", entries}};
}

inline nlohmann::json closure_report_json(const ClosureReport& rep) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : rep.blocks)
        blocks.push_back({{"shape", b.shape},
                          {"dim", b.dim},
                          {"predicted", b.predicted.get_si()},
                          {"class", b.cls}});
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& [name, ok] : rep.containment_checks)
        checks.push_back({{"check", name}, {"ok", ok}});
    return {{"schema", 1},
            {"n", rep.n},
            {"mode", rep.mode.to_string()},
            {"blocks", blocks},
            {"total", rep.total.get_si()},
            {"predicted_total", rep.predicted_total.get_si()},
            {"containment_checks", checks},
            {"pass", rep.pass}};
}

inline ClosureReport closure_report_from_json(const nlohmann::json& j) {
    ClosureReport rep;
    rep.n = j.at("n").get<int>();
    rep.mode = FieldMode::parse(j.at("mode").get<std::string>());
    for (const auto& b : j.at("blocks")) {
        ClosureBlockReport blk;
        blk.shape = b.at("shape").get<std::vector<int>>();
        blk.dim = b.at("dim").get<long>();
        blk.predicted = b.at("predicted").get<long>();
        blk.cls = b.at("class").get<std::string>();
        rep.blocks.push_back(std::move(blk));
    }
    for (const auto& c : j.at("containment_checks"))
        rep.containment_checks.emplace_back(c.at("check").get<std::string>(),
                                            c.at("ok").get<bool>());
    rep.total = j.at("total").get<long>();
    rep.predicted_total = j.at("predicted_total").get<long>();
    rep.pass = j.at("pass").get<bool>();
    return rep;
}

inline nlohmann::json hull_table_json(int n, const std::vector<HullRow>& rows) {
    nlohmann::json out = {{"schema", 1}, {"n", n}, {"rows", nlohmann::json::array()}};
    for (const auto& r : rows)
        out["rows"].push_back({{"shape", shape_json(r.shape)},
                               {"dim", r.dim.get_si()},
                               {"gamma", r.gamma.get_si()},
                               {"eta", r.eta},
                               {"form", to_string(r.form)},
                               {"G", to_string(r.G)},
                               {"Gtilde", to_string(r.Gtilde)}});
    return out;
}

inline std::string hull_table_csv(const std::vector<HullRow>& rows) {
    std::string out = "shape,dim,gamma,eta,form,G,Gtilde\n";
    for (const auto& r : rows) {
        out += r.shape.to_string() + "," + r.dim.get_str() + "," + r.gamma.get_str() +
               "," + std::to_string(r.eta) + "," + to_string(r.form) + "," +
               to_string(r.G) + "," + to_string(r.Gtilde) + "\n";
    }
    return out;
}

inline nlohmann::json gnq_report_json(const GnqReport& rep) {
    return {{"schema", 1},
            {"duality", rep.cond_duality},
            {"osp", rep.cond_osp},
            {"determinant", rep.cond_det},
            {"hooks", rep.cond_hooks},
            {"detail", rep.detail},
            {"pass", rep.pass()}};
}

inline nlohmann::json table1_report_json(const Table1Report& rep) {
    return {{"schema", 1},
            {"n", rep.n},
            {"order", rep.order},
            {"trials", rep.trials},
            {"det_checks", rep.det_checks},
            {"osp_checks", rep.osp_checks},
            {"anti_checks", rep.anti_checks},
            {"detail", rep.detail},
            {"pass", rep.pass}};
}

}  // namespace symrep

#endif
