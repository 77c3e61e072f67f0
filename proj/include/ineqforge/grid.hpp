#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace ineq {

enum class GridKind { log_uniform, mapped_chebyshev };

/// One-dimensional radial grid on (0, inf), carried in the log variable
/// s = ln r. Immutable after construction; shared between profiles.
///
/// log_uniform: geometric nodes, Gregory-corrected trapezoid weights,
/// order-8 finite differences in s. mapped_chebyshev: Chebyshev-Lobatto
/// nodes in s, Clenshaw-Curtis weights, spectral differentiation matrix.
class RadialGrid {
public:
    static std::shared_ptr<const RadialGrid> make(GridKind kind, double r_min,
                                                  double r_max, int n);

    GridKind kind() const { return kind_; }
    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    int size() const { return static_cast<int>(r_.size()); }

    const std::vector<double>& nodes() const { return r_; }        // radii
    const std::vector<double>& log_nodes() const { return s_; }    // s = ln r
    const std::vector<double>& weights() const { return wr_; }     // for f dr
    const std::vector<double>& log_weights() const { return ws_; } // for f ds

    static constexpr int max_derivative_order = 8;

    /// j-th derivative with respect to s of grid samples.
    std::vector<double> s_derivative(const std::vector<double>& v, int j) const;

    /// Off-grid evaluation of sampled values at log-radius s (local Lagrange
    /// on log-uniform grids, barycentric on Chebyshev grids). Clamps outside.
    double interp_s(const std::vector<double>& v, double s) const;

private:
    RadialGrid() = default;

    GridKind kind_{};
    double r_min_ = 0, r_max_ = 0, hs_ = 0;
    std::vector<double> r_, s_, wr_, ws_;

    // log-uniform: cached FD rows per derivative order (interior + edges)
    struct Stencil {
        int width = 0;
        std::vector<double> interior;           // centered row
        std::vector<std::vector<double>> left;  // rows for first nodes
        std::vector<std::vector<double>> right; // rows for last nodes
    };
    std::vector<Stencil> stencils_;

    // chebyshev: first-derivative matrix in s and barycentric weights
    std::vector<double> cheb_d_;   // n*n, row-major
    std::vector<double> bary_w_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// make_grid(kind, r_min, r_max, n) — factory with precondition checks
/// (n >= 16, 0 < r_min < r_max).
GridPtr make_grid(GridKind kind, double r_min, double r_max, int n);

/// Default workhorse grid: log-uniform, [1e-4, 1e4], 2048 nodes.
GridPtr default_grid();

/// A radial function sampled on a grid. Values must be finite.
struct RadialProfile {
    GridPtr grid;
    std::vector<double> values;

    RadialProfile() = default;
    RadialProfile(GridPtr g, std::vector<double> v);

    static RadialProfile from_function(GridPtr g, const std::function<double(double)>& f);

    /// Two-column text format "r value", radii ascending. Geometric radii are
    /// adopted directly; otherwise the data is resampled onto a log-uniform
    /// grid of the same size and span (reported via *resampled).
    static RadialProfile from_file(const std::string& path, bool* resampled = nullptr);

    double operator()(double r) const;  // interpolated evaluation
    int size() const { return static_cast<int>(values.size()); }
};

}
