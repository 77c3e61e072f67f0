#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace ineq::talenti {

enum class DomainShape { square, disk, lshape };

/// Cell-centered square lattice over [0, L]^2 with a domain mask; values are
/// zero outside the mask (homogeneous Dirichlet through ghost cells).
struct Grid2D {
    double L = 1.0;
    int n = 64;
    double h = 0.0;
    std::vector<std::uint8_t> mask;

    static std::shared_ptr<const Grid2D> make(DomainShape shape, int n, double L = 1.0);

    int idx(int i, int j) const { return i * n + j; }
    bool inside(int i, int j) const {
        return i >= 0 && j >= 0 && i < n && j < n && mask[idx(i, j)] != 0;
    }
    double cx(int i) const { return (i + 0.5) * h; }
    int interior_count() const;
    double area() const { return interior_count() * h * h; }
};

using Grid2DPtr = std::shared_ptr<const Grid2D>;

struct Field2D {
    Grid2DPtr grid;
    std::vector<double> values;  // full n*n, zero outside mask

    Field2D() = default;
    explicit Field2D(Grid2DPtr g);
    static Field2D from_function(Grid2DPtr g, const std::function<double(double, double)>& f);
    double& at(int i, int j) { return values[grid->idx(i, j)]; }
    double at(int i, int j) const { return values[grid->idx(i, j)]; }
};

/// 5-point finite-difference Poisson solve -Delta u = f with zero Dirichlet
/// data, conjugate gradient with diagonal preconditioning to relative
/// residual 1e-10. Throws accuracy_error on non-convergence (with the
/// residual history in the message).
Field2D solve_poisson(const Field2D& f);

/// Navier cascade for (-Delta)^k u = f: u_k = f, then -Delta u_{j-1} = u_j.
/// Returns levels [u_k, u_{k-1}, ..., u_0]; k in {1, 2, 3}.
std::vector<Field2D> navier_cascade(const Field2D& f, int k);

/// Right-continuous nonincreasing step function: value[i] on
/// [radii[i-1], radii[i]) with radii[-1] = 0; zero beyond radii.back().
struct StepProfile {
    std::vector<double> radii;
    std::vector<double> values;
    double operator()(double r) const;
    double max() const { return values.empty() ? 0.0 : values.front(); }
};

/// Discrete Schwarz rearrangement of |u| by cell count: sorted cell values on
/// equal-area radii sqrt(k h^2 / pi).
StepProfile schwarz_2d(const Field2D& u);

/// Radial Navier solution levels on the disk of radius R in dimension N:
///   v_{j-1}(r) = int_r^R s^{1-N} int_0^s f_j(t) t^{N-1} dt ds,
/// nested composite-Simpson integration on a uniform partition (node count
/// M+1). Returns levels [v_{k-1}, ..., v_0], each sampled on the partition.
struct RadialSolution {
    double R = 0.0;
    std::vector<double> r;                    // partition nodes
    std::vector<std::vector<double>> levels;  // [v_{k-1}, ..., v_0]
    double eval(int level, double radius) const;
};
RadialSolution radial_navier_disk(const std::function<double(double)>& f, double R,
                                  int k, int N = 2, int M = 8192);

struct TalentiReport {
    double h = 0.0;
    double tol_grid = 0.0;            // 5 h (||v||_inf + 1)
    double max_violation = 0.0;       // max over levels and radii of u_j* - v_j
    std::vector<double> level_violation;
    bool pass = false;
    bool abs_forcing = false;         // f* built from |f|
    // final-level fields for plotting
    std::vector<double> radii, u_star, v;
};

/// Higher-order Talenti comparison u* <= v on the equal-area disk, checked at
/// every cascade level.
TalentiReport talenti_check(const Field2D& f, int k);

}
