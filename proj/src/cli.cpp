#include "ineqforge/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ineqforge/constants.hpp"
#include "ineqforge/errors.hpp"
#include "ineqforge/hankel.hpp"
#include "ineqforge/norms.hpp"
#include "ineqforge/report.hpp"
#include "ineqforge/version.hpp"

namespace ineq::cli {

namespace {

using report::json;
using report::RunConfig;

double opt_num(const RunConfig& c, const std::string& k, double dflt) {
    auto it = c.options.find(k);
    return it == c.options.end() ? dflt : std::stod(it->second);
}

int opt_int(const RunConfig& c, const std::string& k, int dflt) {
    auto it = c.options.find(k);
    return it == c.options.end() ? dflt : std::stoi(it->second);
}

std::string opt_str(const RunConfig& c, const std::string& k, const std::string& dflt) {
    auto it = c.options.find(k);
    return it == c.options.end() ? dflt : it->second;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

GridPtr grid_from(const RunConfig& c) {
    const auto kind = opt_str(c, "grid_kind", "log");
    return make_grid(kind == "cheb" ? GridKind::mapped_chebyshev : GridKind::log_uniform,
                     opt_num(c, "grid_rmin", 1e-4), opt_num(c, "grid_rmax", 1e4),
                     opt_int(c, "grid_n", 2048));
}

// built-in analytic profiles: gaussian | gausspi | cauchy:a,s | bump | @file
RadialProfile profile_from(const RunConfig& c, const GridPtr& g) {
    const auto name = opt_str(c, "profile", "gaussian");
    if (!name.empty() && name[0] == '@') {
        bool resampled = false;
        auto p = RadialProfile::from_file(name.substr(1), &resampled);
        if (resampled) std::cerr << "note: file radii not geometric, resampled\n";
        return p;
    }
    if (name == "gaussian")
        return RadialProfile::from_function(g, [](double r) { return std::exp(-r * r); });
    if (name == "gausspi")
        return RadialProfile::from_function(
            g, [](double r) { return std::exp(-M_PI * r * r); });
    if (name.rfind("cauchy", 0) == 0) {
        double a = 3.0, s = 1.0;
        if (auto pos = name.find(':'); pos != std::string::npos) {
            auto v = parse_list(name.substr(pos + 1));
            if (!v.empty()) a = v[0];
            if (v.size() > 1) s = v[1];
        }
        return RadialProfile::from_function(g, [=](double r) {
            const double q = r / s;
            return std::pow(1.0 + q * q, -a);
        });
    }
    if (name == "bump")
        return RadialProfile::from_function(g, [](double r) {
            const double s = std::log(r);
            return std::exp(-0.5 * s * s);
        });
    throw domain_error("unknown profile: " + name);
}

void persist(const RunConfig& cfg, json payload, int* exit_code_io = nullptr) {
    auto full = report::finalize_report(cfg, std::move(payload));
    const auto out = opt_str(cfg, "out", "");
    if (out.size() > 4 && out.substr(out.size() - 4) == ".csv") {
        const auto kind = opt_str(cfg, "csv_kind", "");
        report::write_output(out, report::emit_plot_data(full, kind));
    } else {
        report::write_output(out, full.dump(2));
    }
    (void)exit_code_io;
}

int run_constants(RunConfig cfg) {
    const int N = opt_int(cfg, "N", -1), m = opt_int(cfg, "m", -1);
    if (N < 1 || m < 0) throw domain_error("constants: need --N and --m");
    json j;
    j["N"] = N;
    j["m"] = m;
    j["omega_N"] = ball_volume(N);
    j["sphere_area"] = sphere_area(N);
    if (m >= 1 && N > 4 * m) {
        j["c1"] = constants::c1(N, m);
        j["gradient_chain_even"] = constants::gradient_chain_even(N, m);
    }
    if (N > 4 * m + 2) {
        j["c2"] = constants::c2(N, m);
        j["gradient_chain_odd"] = constants::gradient_chain_odd(N, m);
    }
    if (N > 4) j["second_order_rellich"] = constants::second_order_rellich(N);
    if (cfg.options.count("p") && cfg.options.count("q"))
        j["lorentz_hardy"] =
            constants::lorentz_hardy(N, opt_num(cfg, "p", 2), opt_num(cfg, "q", 2));
    persist(cfg, std::move(j));
    return 0;
}

int run_deficit(RunConfig cfg) {
    const int N = opt_int(cfg, "N", 5), m = opt_int(cfg, "m", 1);
    const double theta = opt_num(cfg, "theta", 1.0 / N);
    auto g = grid_from(cfg);
    auto u = profile_from(cfg, g);
    const auto parity = opt_str(cfg, "case", "even");
    auto rep = parity == "odd" ? forms::deficit_odd(u, N, m, theta)
                               : forms::deficit_even(u, N, m, theta);
    persist(cfg, report::to_json(rep));
    if (!rep.flags.empty()) return 2;
    return rep.deficit >= -1e-8 * std::max(rep.A, 1.0) ? 0 : 1;
}

int run_transform(RunConfig cfg) {
    const int N = opt_int(cfg, "N", 3);
    auto g = grid_from(cfg);
    auto u = profile_from(cfg, g);
    auto rho = parse_list(opt_str(cfg, "rho", "0,0.5,1,2"));
    auto sp = transforms::fourier_radial(u, N, rho);
    json j;
    j["N"] = N;
    j["frequencies"] = sp.frequencies;
    j["values"] = sp.values;
    if (cfg.options.find("csv_kind") == cfg.options.end())
        cfg.options["csv_kind"] = "spectrum";
    persist(cfg, std::move(j));
    return 0;
}

int run_norm(RunConfig cfg) {
    const int N = opt_int(cfg, "N", 5);
    auto g = grid_from(cfg);
    auto u = profile_from(cfg, g);
    const auto kind = opt_str(cfg, "kind", "sobolev");
    norms::NormResult res;
    json j;
    j["kind"] = kind;
    if (kind == "lorentz") {
        res = norms::lorentz_norm(u, N, opt_num(cfg, "p", 4.0), opt_num(cfg, "r", 2.0));
    } else if (kind == "morrey") {
        res = norms::morrey_norm(u, N, opt_num(cfg, "p", 2.0), opt_num(cfg, "alpha", 1.0));
        j["maximizer"] = {{"center", res.maximizer_a}, {"radius", res.maximizer_b}};
    } else if (kind == "besov") {
        res = norms::besov_norm(u, N, opt_num(cfg, "s", 1.0));
        j["maximizer"] = {{"t", res.maximizer_a}};
    } else if (kind == "sobolev") {
        res = norms::critical_sobolev_norm(u, N, opt_int(cfg, "m", 1),
                                           opt_str(cfg, "case", "even") == "odd"
                                               ? Parity::odd
                                               : Parity::even);
    } else {
        throw domain_error("norm: unknown kind " + kind);
    }
    j["value"] = res.value;
    j["flags"] = res.flags;
    persist(cfg, std::move(j));
    return res.flags.empty() ? 0 : 2;
}

int run_talenti(RunConfig cfg) {
    const int n = opt_int(cfg, "n", 64), k = opt_int(cfg, "k", 1);
    const auto dom = opt_str(cfg, "domain", "square");
    auto shape = dom == "disk"     ? talenti::DomainShape::disk
                 : dom == "lshape" ? talenti::DomainShape::lshape
                                   : talenti::DomainShape::square;
    auto g = talenti::Grid2D::make(shape, n);
    const auto forcing = opt_str(cfg, "forcing", "const");
    auto f = talenti::Field2D::from_function(g, [&](double x, double y) -> double {
        if (forcing == "const") return 1.0;
        if (forcing == "bump")
            return std::exp(-((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5)) / 0.02);
        if (forcing == "offbump")
            return std::exp(-((x - 0.3) * (x - 0.3) + (y - 0.35) * (y - 0.35)) / 0.015);
        throw domain_error("talenti: unknown forcing " + forcing);
    });
    auto rep = talenti::talenti_check(f, k);
    if (cfg.options.find("csv_kind") == cfg.options.end())
        cfg.options["csv_kind"] = "talenti";
    persist(cfg, report::to_json(rep));
    return rep.pass ? 0 : 1;
}

int run_verify(RunConfig cfg) {
    const auto theorem = opt_str(cfg, "theorem", "radial-even");
    const int N = opt_int(cfg, "N", 5), m = opt_int(cfg, "m", 1);
    const std::uint64_t seed = static_cast<std::uint64_t>(opt_num(cfg, "seed", 12345));
    const int count = opt_int(cfg, "count", 20);
    auto g = grid_from(cfg);
    const double floor = opt_num(cfg, "ratio_floor", 1e-3);

    verify::VerificationReport rep;
    if (theorem == "radial-even" || theorem == "radial-odd") {
        const auto parity = theorem == "radial-odd" ? Parity::odd : Parity::even;
        const double theta = opt_num(cfg, "theta", 1.0 / N);
        auto fam = verify::builtin_family(opt_str(cfg, "family", "gaussians"), N, m,
                                          count, seed);
        rep = verify::verify_radial_interpolation(N, m, theta, fam, parity, g, floor);
        rep.seed = seed;
        if (opt_str(cfg, "family", "gaussians") == "cutoff" &&
            cfg.options.find("csv_kind") == cfg.options.end())
            cfg.options["csv_kind"] = "deficit-sweep";
    } else if (theorem == "lorentz") {
        verify::LorentzParams lp;
        lp.N = N;
        lp.p = opt_num(cfg, "p", 4.0);
        lp.q = opt_num(cfg, "q", 2.0);
        lp.r = opt_num(cfg, "r", lp.N * lp.q / (lp.N - lp.p));
        lp.theta = opt_num(cfg, "theta", (lp.N - lp.p) / lp.N);
        auto fam = verify::builtin_family(opt_str(cfg, "family", "nonincreasing"), N, m,
                                          count, seed);
        rep = verify::verify_lorentz_interpolation(lp, fam, g, floor,
                                                   opt_int(cfg, "enforce_gate", 1) != 0);
        rep.seed = seed;
    } else if (theorem == "nonradial-reduction") {
        const auto parity = opt_str(cfg, "case", "even") == "odd" ? Parity::odd : Parity::even;
        auto red = verify::verify_nonradial_reduction(N, m, parity, g);
        persist(cfg, report::to_json(red));
        return red.pass ? 0 : 1;
    } else {
        throw domain_error("verify: unknown theorem " + theorem);
    }
    persist(cfg, report::to_json(rep));
    return rep.pass ? 0 : 1;
}

int run_estimate(RunConfig cfg) {
    const int N = opt_int(cfg, "N", 5), m = opt_int(cfg, "m", 1);
    const auto parity = opt_str(cfg, "parity", "even") == "odd" ? Parity::odd : Parity::even;
    verify::EstimateOptions opt;
    opt.budget = opt_int(cfg, "budget", 2000);
    opt.starts = opt_int(cfg, "starts", 8);
    opt.seed = static_cast<std::uint64_t>(opt_num(cfg, "seed", 1234));
    opt.rayleigh_mode = opt_int(cfg, "rayleigh", 0) != 0;
    const double theta = opt_num(cfg, "theta", 1.0 / N);
    auto res = verify::estimate_best_constant(N, m, theta, parity, opt, grid_from(cfg));
    json j;
    j["N"] = N;
    j["m"] = m;
    j["theta"] = theta;
    j["mode"] = opt.rayleigh_mode ? "rayleigh" : "interpolation";
    j["estimate"] = res.best;
    j["estimate_scope"] = "family-relative";
    j["family"] = res.best_family;
    j["params"] = res.best_params;
    j["lowest_seen"] = res.lowest_seen;
    j["evals"] = res.evals;
    j["stagnated"] = res.stagnated;
    persist(cfg, std::move(j));
    return 0;
}

int run_scan_theta(RunConfig cfg) {
    const int N = opt_int(cfg, "N", 5), m = opt_int(cfg, "m", 1);
    const auto parity = opt_str(cfg, "parity", "even") == "odd" ? Parity::odd : Parity::even;
    auto thetas = parse_list(opt_str(cfg, "thetas", "0.05,0.1,0.2,0.3,0.4,0.6,1.0"));
    auto tab = verify::theta_scan(N, m, parity, thetas);
    if (cfg.options.find("csv_kind") == cfg.options.end())
        cfg.options["csv_kind"] = "theta-scan";
    persist(cfg, report::to_json(tab));
    return 0;
}

int run_chain(RunConfig cfg) {
    const int N = opt_int(cfg, "N", 5), m = opt_int(cfg, "m", 1);
    const std::uint64_t seed = static_cast<std::uint64_t>(opt_num(cfg, "seed", 12345));
    auto fam = verify::builtin_family(opt_str(cfg, "family", "gaussians"), N, m,
                                      opt_int(cfg, "count", 20), seed);
    auto rep = verify::chain_check(N, m, fam, grid_from(cfg));
    persist(cfg, report::to_json(rep));
    return rep.pass ? 0 : 1;
}

int dispatch(RunConfig cfg) {
    if (cfg.subcommand == "constants") return run_constants(std::move(cfg));
    if (cfg.subcommand == "deficit") return run_deficit(std::move(cfg));
    if (cfg.subcommand == "transform") return run_transform(std::move(cfg));
    if (cfg.subcommand == "norm") return run_norm(std::move(cfg));
    if (cfg.subcommand == "talenti") return run_talenti(std::move(cfg));
    if (cfg.subcommand == "verify") return run_verify(std::move(cfg));
    if (cfg.subcommand == "estimate") return run_estimate(std::move(cfg));
    if (cfg.subcommand == "scan-theta") return run_scan_theta(std::move(cfg));
    if (cfg.subcommand == "chain-check") return run_chain(std::move(cfg));
    throw domain_error("unknown subcommand: " + cfg.subcommand);
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"ineqforge: numerical laboratory for weighted interpolation inequalities"};
    app.set_version_flag("--version", library_version);
    std::string config_path;
    app.add_option("--config", config_path, "JSON run config; overrides all flags");

    RunConfig cfg;
    auto add_sub = [&](const std::string& name, const std::string& desc,
                       const std::vector<std::string>& keys) {
        auto* sub = app.add_subcommand(name, desc);
        for (const auto& k : keys) {
            auto key = k;
            sub->add_option_function<std::string>(
                "--" + key, [&cfg, key](const std::string& v) { cfg.options[key] = v; });
        }
        sub->callback([&cfg, name] { cfg.subcommand = name; });
        return sub;
    };

    const std::vector<std::string> common{"out",      "csv_kind",  "grid_kind",
                                          "grid_n",   "grid_rmin", "grid_rmax",
                                          "seed"};
    auto with_common = [&](std::vector<std::string> v) {
        v.insert(v.end(), common.begin(), common.end());
        return v;
    };
    add_sub("constants", "closed-form sharp constants", with_common({"N", "m", "p", "q"}));
    add_sub("deficit", "quadratic-form deficit of one profile",
            with_common({"case", "N", "m", "theta", "profile"}));
    add_sub("transform", "radial Fourier transform samples",
            with_common({"N", "profile", "rho"}));
    add_sub("norm", "lorentz | morrey | besov | sobolev norms",
            with_common({"kind", "N", "m", "case", "p", "r", "alpha", "s", "profile"}));
    add_sub("talenti", "polyharmonic comparison on 2D domains",
            with_common({"domain", "k", "forcing", "n"}));
    add_sub("verify", "interpolation-inequality verification runs",
            with_common({"theorem", "N", "m", "theta", "family", "count", "p", "q", "r",
                         "ratio_floor", "case", "enforce_gate"}));
    add_sub("estimate", "family-relative best-constant estimate",
            with_common({"N", "m", "theta", "parity", "budget", "starts", "rayleigh"}));
    add_sub("scan-theta", "ratio degeneration scan over theta",
            with_common({"N", "m", "parity", "thetas"}));
    add_sub("chain-check", "Hardy-Rellich chain link checks",
            with_common({"N", "m", "family", "count"}));
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw domain_error("cannot open config " + config_path);
            json j = json::parse(in);
            cfg = RunConfig::from_json(j.contains("config") ? j["config"] : j);
        }
        if (cfg.subcommand.empty()) {
            std::cout << app.help() << '\n';
            return 2;
        }
        return dispatch(std::move(cfg));
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const accuracy_error& e) {
        std::cerr << "accuracy error: " << e.what() << '\n';
        return 2;
    } catch (const numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}
