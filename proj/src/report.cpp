#include "ineqforge/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ineqforge/errors.hpp"
#include "ineqforge/version.hpp"

namespace ineq::report {

json RunConfig::to_json() const {
    json j;
    j["subcommand"] = subcommand;
    json opts = json::object();
    for (const auto& [k, v] : options) opts[k] = v;
    j["options"] = opts;
    return j;
}

RunConfig RunConfig::from_json(const json& j) {
    RunConfig cfg;
    cfg.subcommand = j.at("subcommand").get<std::string>();
    if (j.contains("options"))
        for (auto it = j["options"].begin(); it != j["options"].end(); ++it)
            cfg.options[it.key()] = it.value().get<std::string>();
    return cfg;
}

json to_json(const forms::DeficitReport& r) {
    json j;
    j["A"] = r.A;
    j["B"] = r.B;
    j["deficit"] = r.deficit;
    if (r.identity_rhs) j["identity_rhs"] = *r.identity_rhs;
    j["theta"] = r.theta;
    j["interpolation_value"] = r.interpolation_value;
    j["case"] = r.case1 ? "case1" : "case2";
    j["flags"] = r.flags;
    return j;
}

json to_json(const verify::VerificationReport& r) {
    json j;
    j["theorem"] = r.theorem;
    j["N"] = r.N;
    j["m"] = r.m;
    j["theta"] = r.theta;
    if (r.p > 0) {
        j["p"] = r.p;
        j["q"] = r.q;
        j["r"] = r.r;
    }
    j["family"] = r.family;
    j["seed"] = r.seed;
    j["grid"] = {{"kind", r.grid_kind}, {"r_min", r.r_min}, {"r_max", r.r_max}, {"n", r.grid_n}};
    j["out_of_range_probe"] = r.out_of_range_probe;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json rj;
        rj["member"] = row.member;
        rj["lhs"] = row.lhs;
        rj["rhs"] = row.rhs;
        rj["ratio"] = row.ratio;
        rj["case"] = row.case1 ? "case1" : "case2";
        rj["skipped"] = row.skipped;
        rj["flags"] = row.flags;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    j["min_ratio"] = r.min_ratio;
    j["ratio_floor"] = r.ratio_floor;
    j["constant_scope"] = "family-relative";
    j["pass"] = r.pass;
    return j;
}

json to_json(const verify::ChainReport& r) {
    json j;
    j["N"] = r.N;
    j["m"] = r.m;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json rj;
        rj["member"] = row.member;
        rj["links"] = {row.link[0], row.link[1], row.link[2], row.link[3]};
        rj["min_gap_rel"] = row.min_gap_rel;
        rj["flags"] = row.flags;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    j["min_gap_rel"] = r.min_gap_rel;
    j["pass"] = r.pass;
    return j;
}

json to_json(const verify::ReductionReport& r) {
    json j;
    j["N"] = r.N;
    j["m"] = r.m;
    j["theta"] = r.theta;
    j["scope_ok"] = r.scope_ok;
    j["sup_translated"] = r.sup_translated;
    j["at_origin"] = r.at_origin;
    j["rearranged"] = r.rearranged;
    j["talenti_side"] = r.talenti_side;
    j["a_preservation_rel"] = r.a_preservation_rel;
    j["lq_preservation_rel"] = r.lq_preservation_rel;
    j["sup2d"] = r.sup2d;
    j["rearranged2d"] = r.rearranged2d;
    j["flags"] = r.flags;
    j["pass"] = r.pass;
    return j;
}

json to_json(const verify::ThetaScanTable& t) {
    json j;
    j["widths"] = t.widths;
    json rows = json::array();
    for (size_t i = 0; i < t.thetas.size(); ++i) {
        json rj;
        rj["theta"] = t.thetas[i];
        rj["ratio"] = t.ratio[i];
        rj["inf_ratio"] = t.inf_ratio[i];
        rows.push_back(rj);
    }
    j["scan"] = rows;
    return j;
}

json to_json(const talenti::TalentiReport& r) {
    json j;
    j["h"] = r.h;
    j["tol_grid"] = r.tol_grid;
    j["max_violation"] = r.max_violation;
    j["level_violation"] = r.level_violation;
    j["abs_forcing"] = r.abs_forcing;
    j["radii"] = r.radii;
    j["u_star"] = r.u_star;
    j["v"] = r.v;
    j["pass"] = r.pass;
    return j;
}

json finalize_report(const RunConfig& cfg, json payload) {
    json j;
    j["version"] = library_version;
    j["config"] = cfg.to_json();
    j["report"] = std::move(payload);
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw accuracy_error("cannot write " + path);
    out << text << '\n';
}

std::string emit_plot_data(const json& report, const std::string& kind) {
    const json& r = report.contains("report") ? report["report"] : report;
    std::ostringstream csv;
    csv.precision(17);
    if (kind == "theta-scan") {
        if (!r.contains("scan")) throw domain_error("emit_plot_data: report lacks a theta scan");
        csv << "theta,width,ratio,inf_ratio\n";
        for (const auto& row : r["scan"]) {
            const auto& widths = r["widths"];
            for (size_t i = 0; i < widths.size(); ++i)
                csv << row["theta"].get<double>() << ',' << widths[i].get<double>() << ','
                    << row["ratio"][i].get<double>() << ',' << row["inf_ratio"][i].get<double>()
                    << '\n';
        }
        return csv.str();
    }
    if (kind == "talenti") {
        if (!r.contains("u_star")) throw domain_error("emit_plot_data: report lacks talenti fields");
        csv << "x,y,u_star,v\n";
        for (size_t i = 0; i < r["radii"].size(); ++i)
            csv << r["radii"][i].get<double>() << ",0," << r["u_star"][i].get<double>() << ','
                << r["v"][i].get<double>() << '\n';
        return csv.str();
    }
    if (kind == "deficit-sweep") {
        if (!r.contains("rows")) throw domain_error("emit_plot_data: report lacks rows");
        csv << "epsilon,ratio\n";
        for (const auto& row : r["rows"]) {
            const std::string label = row["member"].get<std::string>();
            const auto pos = label.find_last_of('_');
            csv << label.substr(pos + 1) << ',' << row["ratio"].get<double>() << '\n';
        }
        return csv.str();
    }
    if (kind == "spectrum") {
        if (!r.contains("frequencies")) throw domain_error("emit_plot_data: report lacks a spectrum");
        csv << "rho,value\n";
        for (size_t i = 0; i < r["frequencies"].size(); ++i)
            csv << r["frequencies"][i].get<double>() << ',' << r["values"][i].get<double>() << '\n';
        return csv.str();
    }
    throw domain_error("emit_plot_data: unknown kind " + kind);
}

}
