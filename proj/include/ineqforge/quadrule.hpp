#pragma once

#include <cstddef>
#include <vector>

namespace ineq::quadrule {

/// Finite-difference weights (Fornberg) for the m-th derivative at z from
/// samples at nodes x. Returns one weight per node.
std::vector<double> fd_weights(double z, const std::vector<double>& x, int m);

/// Boundary weights of the Gregory-corrected trapezoid rule; interior weight
/// is 1. Supported orders: 8 (needs >= 16 nodes) and 10 (needs >= 20).
const std::vector<double>& gregory_boundary(int order);

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre on [-1, 1].
GaussRule gauss_legendre(int n);

/// Gauss-Jacobi on [-1, 1] with weight (1-x)^alpha (1+x)^beta.
GaussRule gauss_jacobi(int n, double alpha, double beta);

/// Generalized Gauss-Laguerre on [0, inf) with weight x^alpha e^{-x}.
GaussRule gauss_laguerre(int n, double alpha);

/// Signed Stirling numbers of the first kind s(k, j), 0 <= j <= k <= kmax.
/// They convert scale-derivative powers into plain derivatives:
///   (d/dr)^k = r^{-k} sum_j s(k,j) (r d/dr)^j.
std::vector<std::vector<double>> stirling_first(int kmax);

}
