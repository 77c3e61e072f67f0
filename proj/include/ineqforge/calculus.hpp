#pragma once

#include <string>
#include <vector>

#include "ineqforge/grid.hpp"

namespace ineq {

enum class Parity { even, odd };

/// (N, m) pair with the admissibility checks the theorems need.
struct Dimension {
    int N = 3;
    int m = 0;

    void require_even() const;  // N > 4m, m >= 1
    void require_odd() const;   // N > 4m + 2, m >= 0
};

/// k-th radial derivative, k >= 1 (default ceiling 8). Computed in the log
/// variable: (d/dr)^k = r^{-k} sum_j s(k,j) (d/ds)^j.
RadialProfile derivative(const RadialProfile& u, int k);

/// U'' + (N-1) U'/r, evaluated as e^{-2s}((d/ds)^2 + (N-2) d/ds) U so no
/// explicit division by tiny radii occurs.
RadialProfile radial_laplacian(const RadialProfile& u, int N);

/// m-fold radial Laplacian.
RadialProfile radial_laplacian_power(const RadialProfile& u, int N, int m);

/// U'/r as a profile (log-space form e^{-2s} dU/ds).
RadialProfile derivative_over_r(const RadialProfile& u);

/// Quadrature result with truncation diagnostics: head/tail are the relative
/// contributions of the first/last decade of the grid. flagged when either
/// exceeds 1e-8, i.e. the integrand has not died out inside the grid.
struct IntegralResult {
    double value = 0.0;
    double head_fraction = 0.0;
    double tail_fraction = 0.0;
    bool flagged = false;
};

/// sum_i w_i u(r_i) r_i^beta  ~  int u(r) r^beta dr over the grid span.
double weighted_integral(const RadialProfile& u, double beta);
IntegralResult weighted_integral_checked(const RadialProfile& u, double beta);

/// |S^{N-1}| = 2 pi^{N/2} / Gamma(N/2).
double sphere_area(int N);

/// omega_N, adopted as the unit-ball volume pi^{N/2} / Gamma(N/2 + 1).
double ball_volume(int N);

}
