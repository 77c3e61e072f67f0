#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ineqforge/grid.hpp"

namespace ineq::verify {

/// A parametric family of radial test profiles. Members carry the parameter
/// vector; make() instantiates one member on a grid. Generators are pure, so
/// a (seed, grid) pair reproduces the corpus bit for bit.
struct Family {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> params;
    std::function<RadialProfile(const GridPtr&, const std::vector<double>&)> make;

    int size() const { return static_cast<int>(params.size()); }
    RadialProfile instantiate(const GridPtr& g, int i) const { return make(g, params[i]); }
};

/// C-infinity unit step: 0 for t <= 0, 1 for t >= 1.
double smoothstep_cinf(double t);

/// (a0 + a2 r^2) exp(-b r^2)
Family gaussian_poly_family(int count, std::uint64_t seed);

/// (1 + (r/s)^2)^{-a}, a drawn to satisfy the decay surrogates for (N, m)
Family cauchy_family(int N, int m, int count, std::uint64_t seed);

/// Near-extremal log-cutoff powers r^{-(N-4m)/2 + eps} chi_eps(r); plateau
/// length grows like 1/eps within [s_lo, s_hi] and caps widen accordingly.
Family cutoff_power_family(int N, int m, const std::vector<double>& eps_list,
                           double s_lo, double s_hi);

/// Random superpositions of log-space Gaussian bumps (the smooth corpus).
Family bump_family(int count, std::uint64_t seed);

/// Dilation orbit u(lambda r) of a fixed Gaussian-type base profile.
Family dilation_orbit(const std::vector<double>& lambdas);

/// Concentration family r^{-(N-4m)/2} exp(-(s - s0)^2 / (2 T^2)): the
/// degenerating sequence for the theta scan (width T -> 0).
Family concentration_family(int N, int m, const std::vector<double>& widths,
                            double s0 = 0.0);

/// Rearrangement-friendly nonincreasing corpus (Gaussians and Cauchy tails).
Family nonincreasing_family(int count, std::uint64_t seed);

/// Registry lookup by name: gaussians | cauchy | cutoff | bumps | dilation |
/// nonincreasing. Throws domain_error for unknown names.
Family builtin_family(const std::string& name, int N, int m, int count,
                      std::uint64_t seed);

}
