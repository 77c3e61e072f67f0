#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ineqforge/calculus.hpp"
#include "ineqforge/families.hpp"
#include "ineqforge/grid.hpp"
#include "ineqforge/parallel.hpp"

namespace ineq::verify {

double theta_min(int N);
double theta_max(int N, int m, Parity parity);  // 2m/N even, (2m+1)/N odd

struct ProfileRow {
    std::string member;
    double lhs = 0.0, rhs = 0.0, ratio = 0.0;
    bool case1 = false;   // proof branch (1-theta) A >= B
    bool skipped = false;
    std::vector<std::string> flags;
};

struct VerificationReport {
    std::string theorem;
    int N = 0, m = 0;
    double theta = 0.0;
    double p = 0.0, q = 0.0, r = 0.0;  // lorentz runs
    std::string family;
    std::uint64_t seed = 0;
    std::string grid_kind;
    double r_min = 0.0, r_max = 0.0;
    int grid_n = 0;
    bool out_of_range_probe = false;
    std::vector<ProfileRow> rows;
    double min_ratio = std::numeric_limits<double>::infinity();
    double ratio_floor = 1e-3;
    bool any_flags = false;
    bool pass = false;
};

/// Interpolation-inequality run over a family: LHS from the quadratic forms,
/// RHS the squared critical Sobolev norm. theta outside the admissible range
/// is allowed but labeled an out-of-range probe.
VerificationReport verify_radial_interpolation(int N, int m, double theta,
                                               const Family& family, Parity parity,
                                               GridPtr grid = nullptr,
                                               double ratio_floor = 1e-3,
                                               par::Exec exec = par::Exec::openmp);

struct EstimateOptions {
    int budget = 2000;
    int starts = 8;
    std::uint64_t seed = 1234;
    bool rayleigh_mode = false;  // minimize the Rellich quotient A / (B / C1)
    std::vector<std::string> families;  // default picks per mode
};

struct EstimateResult {
    double best = std::numeric_limits<double>::infinity();
    std::string best_family;
    std::vector<double> best_params;
    double lowest_seen = std::numeric_limits<double>::infinity();  // over all evals
    int evals = 0;
    bool stagnated = false;
};

/// Family-relative lower-envelope estimate of the interpolation constant by
/// multi-start Nelder-Mead over family parameters.
EstimateResult estimate_best_constant(int N, int m, double theta, Parity parity,
                                      const EstimateOptions& opt = {},
                                      GridPtr grid = nullptr,
                                      par::Exec exec = par::Exec::openmp);

struct ThetaScanTable {
    std::vector<double> widths;   // degeneration parameter, decreasing
    std::vector<double> thetas;
    std::vector<std::vector<double>> ratio;      // [theta][member]
    std::vector<std::vector<double>> inf_ratio;  // running infimum
};

/// Ratio decay along the concentration family for each theta: desk-scale
/// stand-in for the necessity claims (decay below 1/N, stability inside the
/// admissible window).
ThetaScanTable theta_scan(int N, int m, Parity parity, std::vector<double> thetas,
                          GridPtr scan_grid = nullptr,
                          par::Exec exec = par::Exec::openmp);

struct LorentzParams {
    int N = 5;
    double p = 4.0, q = 2.0, r = 10.0, theta = 0.25;
};

/// Named-constraint admissibility gate for the Lorentz interpolation run;
/// empty result means admissible.
std::vector<std::string> lorentz_violations(const LorentzParams& lp);

/// Lorentz-norm interpolation run restricted to radial nonincreasing inputs
/// (the translation supremum then sits at the origin). enforce_gate = false
/// downgrades gate violations to an out-of-range probe label.
VerificationReport verify_lorentz_interpolation(const LorentzParams& lp,
                                                const Family& family,
                                                GridPtr grid = nullptr,
                                                double ratio_floor = 1e-3,
                                                bool enforce_gate = true,
                                                par::Exec exec = par::Exec::openmp);

struct ChainRow {
    std::string member;
    double link[4] = {0, 0, 0, 0};
    double min_gap_rel = 0.0;  // min_i (link_i - link_{i+1}) / link_0
    std::vector<std::string> flags;
};

struct ChainReport {
    int N = 0, m = 0;
    std::vector<ChainRow> rows;
    double min_gap_rel = 0.0;
    bool pass = false;  // all gaps >= -1e-8
};

/// Even Hardy-Rellich chain on a family:
/// int|Delta^m u|^2 >= (N^2/4) int |grad Delta^{m-1} u|^2/|x|^2
///   >= (4C1/(N-4m)^2) int |grad u|^2 / |x|^{4m-2} >= C1 int u^2/|x|^{4m}.
ChainReport chain_check(int N, int m, const Family& family, GridPtr grid = nullptr,
                        par::Exec exec = par::Exec::openmp);

struct ReductionReport {
    int N = 0, m = 0;
    double theta = 0.0;
    bool scope_ok = true;
    std::vector<std::string> flags;
    // radial multi-bump chain
    double sup_translated = 0.0;   // sup_y int u^2 / |x-y|^w
    double at_origin = 0.0;        // the y = 0 value
    double rearranged = 0.0;       // int (u*)^2 / |x|^w
    double talenti_side = 0.0;     // int v^2 / |x|^w (even case, 0 if skipped)
    double a_preservation_rel = 0.0;   // | int f^2 - int (f*)^2 | / int f^2
    double lq_preservation_rel = 0.0;  // critical-norm preservation under *
    // 2D desk-scale analogue (m = 0 style, kernel 1/|x-y|)
    double sup2d = 0.0, rearranged2d = 0.0;
    bool pass = false;
};

/// Verifies the rearrangement reduction chain of the non-radial theorems at
/// N = 4m+1 (even) / N = 4m+3 (odd), theta = 1/N.
ReductionReport verify_nonradial_reduction(int N, int m, Parity parity,
                                           GridPtr grid = nullptr,
                                           par::Exec exec = par::Exec::openmp);

}
