#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gsc/analysis.hpp"

namespace gsc {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaRate = "gsc.rate/v1";
inline constexpr const char* kSchemaVerify = "gsc.verify/v1";
inline constexpr const char* kSchemaWright = "gsc.verify.wright/v1";
inline constexpr const char* kSchemaBerry = "gsc.verify.berry/v1";

inline ordered_json bound_check_json(const BoundCheckReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["observed"] = rep.observed;
    j["bound"] = rep.bound;
    j["pass"] = rep.pass;
    ordered_json det;
    for (const auto& [k, v] : rep.details) det[k] = v;
    j["details"] = det;
    j["notes"] = rep.notes;
    return j;
}

inline ordered_json rate_bound_json(const RateBound& rb) {
    ordered_json j;
    j["entropy_bits"] = rb.entropy_bits;
    j["dispersion_bits"] = rb.dispersion_bits;
    j["label_bits"] = rb.label_bits;
    j["total_bits"] = rb.total_bits;
    j["bound_rate"] = rb.rate;
    j["remainder_term"] = "unmodeled";
    return j;
}

inline ordered_json wright_report_json(const std::vector<WrightRow>& rows) {
    ordered_json j;
    j["schema"] = kSchemaWright;
    bool monotone = true;
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].abs_err >= rows[i - 1].abs_err) monotone = false;
    ordered_json list = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["j"] = r.j;
        row["mu"] = r.mu;
        row["ratio"] = r.ratio;
        row["abs_err"] = r.abs_err;
        row["regime_ok"] = r.regime_ok;
        list.push_back(row);
    }
    j["rows"] = list;
    j["abs_err_decreasing"] = monotone;
    return j;
}

inline ordered_json berry_report_json(const BerryEsseenReport& rep) {
    ordered_json j;
    j["schema"] = kSchemaBerry;
    j["p"] = rep.p;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["a_config"] = rep.a_config;
    ordered_json list = ordered_json::array();
    for (size_t i = 0; i < rep.m_grid.size(); ++i) {
        ordered_json row;
        row["m"] = rep.m_grid[i];
        row["deviation"] = rep.deviation[i];
        row["deviation_scaled"] = rep.scaled[i];
        list.push_back(row);
    }
    j["rows"] = list;
    j["pass"] = rep.pass;
    return j;
}

inline ordered_json theorem1_report_json(const Theorem1Report& rep) {
    ordered_json j;
    j["name"] = "budget_log_vs_rate";
    j["cells"] = rep.cells;
    j["violations_one_to_one"] = rep.violations_one_to_one;
    j["violations_published"] = rep.violations_published;
    j["pass"] = rep.violations_one_to_one == 0;
    ordered_json list = ordered_json::array();
    for (const auto& r : rep.rows) {
        ordered_json row;
        row["n"] = r.n;
        row["p"] = r.p;
        row["eps"] = r.eps;
        row["k"] = r.k;
        row["budget"] = r.budget;
        row["bound_one_to_one"] = r.bound_one_to_one;
        row["bound_published"] = r.bound_published;
        row["ok_one_to_one"] = r.ok_one_to_one;
        row["ok_published"] = r.ok_published;
        list.push_back(row);
    }
    j["rows"] = list;
    return j;
}

}  // namespace gsc
