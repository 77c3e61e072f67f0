#pragma once

#include <string>
#include <vector>

#include "ineqforge/calculus.hpp"
#include "ineqforge/grid.hpp"
#include "ineqforge/parallel.hpp"

namespace ineq::norms {

struct NormResult {
    double value = 0.0;
    double maximizer_a = 0.0;  // morrey: center |y|; besov: t
    double maximizer_b = 0.0;  // morrey: radius R;  besov: x
    std::vector<std::string> flags;
};

/// Schwarz rearrangement: radially nonincreasing profile equimeasurable with
/// |u| under the measure |S^{N-1}| r^{N-1} dr. Distribution function on a
/// 512-level grid of value quantiles, monotone inversion, cubic-refined level
/// crossings. abs_taken reports whether |.| was applied.
RadialProfile decreasing_rearrangement(const RadialProfile& u, int N,
                                       bool* abs_taken = nullptr);

/// Lorentz norm via the rearrangement formula
///   ||u||_{p*,r} = omega_N^{1/p* - 1/r} ( |S^{N-1}| int u*(t)^r t^{rN/p*-1} dt )^{1/r},
/// sup form for r = inf. Slow decay raises a "divergent" flag (partial value).
NormResult lorentz_norm(const RadialProfile& u, int N, double p_star, double r);

/// Morrey norm sup_{R,|y|} (R^{alpha-N} int_{B(y,R)} |u|^p)^{1/p} over a
/// 64 x 64 log grid of centers/radii plus Nelder-Mead refinement in logs.
NormResult morrey_norm(const RadialProfile& u, int N, double p, double alpha,
                       par::Exec exec = par::Exec::openmp);

/// (K_t * u)(x) for the heat kernel, via the radial reduction with the
/// spherically averaged kernel in scaled-Bessel closed form.
double heat_convolution(const RadialProfile& u, int N, double t, double x);

/// Besov norm sup_t t^{s/2} ||K_t * u||_inf over a 128-point log t grid and a
/// ray of x values, golden-section refinement; boundary attainment triggers
/// one range doubling and is flagged if it persists.
NormResult besov_norm(const RadialProfile& u, int N, double s,
                      par::Exec exec = par::Exec::openmp);

enum class Embedding {
    morrey1_to_besov,    // ||u||_{B^{-alpha}} / ||u||_{M^{1,alpha}}
    morreyp_to_morrey1,  // ||u||_{M^{1,alpha/p}} / ||u||_{M^{p,alpha}}
};

/// Ratio of target to source norm for the selected embedding; 0 for u = 0.
double embedding_ratio(const RadialProfile& u, int N, Embedding which, double alpha,
                       double p, par::Exec exec = par::Exec::openmp);

/// ||u||_{L^{2N/(N-4m)}} (even) or ||u||_{L^{2N/(N-4m-2)}} (odd).
NormResult critical_sobolev_norm(const RadialProfile& u, int N, int m,
                                 Parity parity = Parity::even);

/// Plain (|S^{N-1}| int |u|^p r^{N-1} dr)^{1/p}.
double lp_norm(const RadialProfile& u, int N, double p);

/// int u g dx for two radial profiles on one grid.
double pairing(const RadialProfile& u, const RadialProfile& g, int N);

}
