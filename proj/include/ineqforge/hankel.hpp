#pragma once

#include <vector>

#include "ineqforge/bessel.hpp"
#include "ineqforge/calculus.hpp"
#include "ineqforge/grid.hpp"
#include "ineqforge/parallel.hpp"

namespace ineq::transforms {

/// Radial Fourier data: samples of F_N(u)(rho).
struct SpectralProfile {
    std::vector<double> frequencies;
    std::vector<double> values;
};

/// F_N(u)(rho) = 2 pi rho^{-(N-2)/2} int_0^inf U(s) J_{(N-2)/2}(2 pi rho s)
/// s^{N/2} ds, by oscillation-aware panel quadrature (panel width capped at a
/// quarter oscillation 1/(4 rho), 12-point Gauss per panel) with an analytic
/// small-argument branch near rho = 0.
SpectralProfile fourier_radial(const RadialProfile& U, int N,
                               std::vector<double> rho,
                               par::Exec exec = par::Exec::openmp);

struct DimensionShiftResult {
    double max_error = 0.0;  // max |F_{N+2}(v) + 2 pi F_N(u)| / scale
    SpectralProfile shifted; // F_{N+2}(v), v = U'/r
    SpectralProfile base;    // F_N(u)
};

/// Checks F_{N+2}(v) = -2 pi F_N(u) for rV = U'.
DimensionShiftResult dimension_shift_check(const RadialProfile& U, int N,
                                           const std::vector<double>& rho,
                                           par::Exec exec = par::Exec::openmp);

/// (2 pi)^{2 sigma} |S^{N-1}| int rho^{N-1+2 sigma} |F_N(u)|^2 drho, the
/// Fourier side of the |Delta^{sigma/..} u| seminorms. Requires 2 sigma < N;
/// throws accuracy_error when the frequency tail is not resolved.
double seminorm_via_fourier(const RadialProfile& U, int N, double sigma,
                            par::Exec exec = par::Exec::openmp);

struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Even: int |Delta^m u|^2 dx vs |S^{N-1}| int |U^{(2m)}|^2 r^{N-1} dr
/// (N >= 2m-1). Odd: the gradient analogue with U^{(2m+1)} (N >= 2m).
BoundCheck radial_lower_bound_check(const RadialProfile& U, int N, int m,
                                    Parity parity);

/// Both sides of the two derivative-recursion integral identities obtained
/// from U' = rV:
///   int |U^{(2k+1)}|^2 r^{N-1} = int |V^{(2k)}|^2 r^{N+1}
///                              + 2k(2k-N) int |V^{(2k-1)}|^2 r^{N-1}
/// and the (2k+2) variant with factor (2k+1)(2k+1-N).
struct RecursionCheck {
    double lhs_odd = 0.0, rhs_odd = 0.0;    // order 2k+1 identity
    double lhs_even = 0.0, rhs_even = 0.0;  // order 2k+2 variant
};
RecursionCheck recursion_identity_check(const RadialProfile& V, int N, int k);

}
