#include "ineqforge/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ineqforge/errors.hpp"
#include "ineqforge/quadrule.hpp"

namespace ineq::transforms {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Largest radius past which |U| has died out (relative to its peak).
double support_radius(const RadialProfile& U) {
    double peak = 0.0;
    for (double v : U.values) peak = std::max(peak, std::fabs(v));
    if (peak == 0.0) return U.grid->r_min();
    const auto& r = U.grid->nodes();
    double hi = U.grid->r_min();
    for (int i = 0; i < U.grid->size(); ++i)
        if (std::fabs(U.values[i]) > 1e-15 * peak) hi = r[i];
    return std::min(hi * 1.1, U.grid->r_max());
}

// M_nu(x) = Gamma(nu+1) (x/2)^{-nu} J_nu(x); entire, M(0) = 1.
double bessel_m(double nu, double x) {
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        term *= q / (k * (nu + k));
        sum += term;
        if (std::fabs(term) < 1e-17) break;
    }
    return sum;
}

// Single-frequency transform value.
double transform_at(const RadialProfile& U, int N, double rho, double r_hi) {
    const double nu = 0.5 * (N - 2);
    if (rho == 0.0 || two_pi * rho * r_hi <= 0.5) {
        // analytic small-argument branch: |S^{N-1}| int U M_nu(2 pi rho s) s^{N-1} ds
        const auto& g = *U.grid;
        double acc = 0.0;
        for (int i = 0; i < g.size(); ++i)
            acc += g.weights()[i] * U.values[i] * bessel_m(nu, two_pi * rho * g.nodes()[i]) *
                   std::pow(g.nodes()[i], N - 1.0);
        return sphere_area(N) * acc;
    }

    static const auto gl = quadrule::gauss_legendre(12);
    const double quarter = 1.0 / (4.0 * rho);
    const auto& g = *U.grid;

    double acc = 0.0;
    // [0, r_min] patch with U frozen at its innermost sample
    {
        const double u0 = U.values.front();
        const double a = 0.0, b = g.r_min();
        const int np = 4;
        const double w = (b - a) / np;
        for (int p = 0; p < np; ++p) {
            const double mid = a + (p + 0.5) * w;
            for (size_t k = 0; k < gl.nodes.size(); ++k) {
                const double s = mid + 0.5 * w * gl.nodes[k];
                acc += 0.5 * w * gl.weights[k] * u0 * bessel_j(nu, two_pi * rho * s) *
                       std::pow(s, nu + 1.0);
            }
        }
    }
    double a = g.r_min();
    long panel_count = 0;
    while (a < r_hi) {
        const double width = std::min(0.25 * a, quarter);
        const double b = std::min(a + width, r_hi);
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (size_t k = 0; k < gl.nodes.size(); ++k) {
            const double s = mid + half * gl.nodes[k];
            const double uval = g.interp_s(U.values, std::log(s));
            acc += half * gl.weights[k] * uval * bessel_j(nu, two_pi * rho * s) *
                   std::pow(s, nu + 1.0);
        }
        a = b;
        if (++panel_count > 400000)
            throw accuracy_error("fourier_radial: oscillation not resolvable at rho = " +
                                 std::to_string(rho));
    }
    return two_pi * std::pow(rho, -nu) * acc;
}

}  // namespace

SpectralProfile fourier_radial(const RadialProfile& U, int N, std::vector<double> rho,
                               par::Exec exec) {
    for (double p : rho)
        if (p < 0.0) throw domain_error("fourier_radial: rho >= 0");
    const double r_hi = support_radius(U);
    SpectralProfile out;
    out.frequencies = std::move(rho);
    out.values.assign(out.frequencies.size(), 0.0);
    par::for_each(
        out.frequencies.size(),
        [&](size_t i) { out.values[i] = transform_at(U, N, out.frequencies[i], r_hi); },
        exec);
    return out;
}

DimensionShiftResult dimension_shift_check(const RadialProfile& U, int N,
                                           const std::vector<double>& rho,
                                           par::Exec exec) {
    DimensionShiftResult res;
    res.base = fourier_radial(U, N, rho, exec);
    res.shifted = fourier_radial(derivative_over_r(U), N + 2, rho, exec);
    double scale = 0.0;
    for (double v : res.base.values) scale = std::max(scale, std::fabs(two_pi * v));
    scale = std::max(scale, 1e-300);
    for (size_t i = 0; i < rho.size(); ++i)
        res.max_error = std::max(
            res.max_error, std::fabs(res.shifted.values[i] + two_pi * res.base.values[i]) / scale);
    return res;
}

double seminorm_via_fourier(const RadialProfile& U, int N, double sigma, par::Exec exec) {
    if (sigma < 0.0) throw domain_error("seminorm_via_fourier: sigma >= 0");
    if (2.0 * sigma >= N)
        throw domain_error("seminorm_via_fourier: requires 2 sigma < N");
    static GridPtr freq = make_grid(GridKind::log_uniform, 1e-3, 1e3, 1024);
    const double r_hi = support_radius(U);

    // march decade by decade up the frequency axis; stop once two consecutive
    // decades contribute below 1e-12 of the running total
    const auto& fr = freq->nodes();
    const int n = freq->size();
    std::vector<double> fv(n, 0.0);
    double total = 0.0;
    int quiet = 0, i0 = 0;
    double last_decade = 0.0;
    while (i0 < n) {
        const double decade_end = fr[i0] * 10.0;
        int i1 = i0;
        while (i1 < n && fr[i1] <= decade_end * (1.0 + 1e-12)) ++i1;
        par::for_each(
            static_cast<size_t>(i1 - i0),
            [&](size_t k) { fv[i0 + k] = transform_at(U, N, fr[i0 + k], r_hi); }, exec);
        double part = 0.0;
        for (int i = i0; i < i1; ++i)
            part += freq->weights()[i] * std::pow(fr[i], N - 1.0 + 2.0 * sigma) * fv[i] * fv[i];
        total += part;
        last_decade = part;
        quiet = (std::fabs(part) <= 1e-12 * std::fabs(total)) ? quiet + 1 : 0;
        i0 = i1;
        if (quiet >= 2) break;
    }
    if (i0 >= n && std::fabs(last_decade) > 1e-8 * std::fabs(total))
        throw accuracy_error("seminorm_via_fourier: frequency tail above tolerance");
    return std::pow(two_pi, 2.0 * sigma) * sphere_area(N) * total;
}

BoundCheck radial_lower_bound_check(const RadialProfile& U, int N, int m, Parity parity) {
    if (m < 1) throw domain_error("radial_lower_bound_check: m >= 1");
    const double area = sphere_area(N);
    BoundCheck out;
    if (parity == Parity::even) {
        if (N < 2 * m - 1) throw domain_error("radial_lower_bound_check: even case needs N >= 2m-1");
        auto lap = radial_laplacian_power(U, N, m);
        std::vector<double> sq(lap.values.size());
        for (size_t i = 0; i < sq.size(); ++i) sq[i] = lap.values[i] * lap.values[i];
        out.lhs = area * weighted_integral(RadialProfile(U.grid, std::move(sq)), N - 1.0);
        auto d = derivative(U, 2 * m);
        std::vector<double> sq2(d.values.size());
        for (size_t i = 0; i < sq2.size(); ++i) sq2[i] = d.values[i] * d.values[i];
        out.rhs = area * weighted_integral(RadialProfile(U.grid, std::move(sq2)), N - 1.0);
    } else {
        if (N < 2 * m) throw domain_error("radial_lower_bound_check: odd case needs N >= 2m");
        auto grad = derivative(radial_laplacian_power(U, N, m), 1);
        std::vector<double> sq(grad.values.size());
        for (size_t i = 0; i < sq.size(); ++i) sq[i] = grad.values[i] * grad.values[i];
        out.lhs = area * weighted_integral(RadialProfile(U.grid, std::move(sq)), N - 1.0);
        auto d = derivative(U, 2 * m + 1);
        std::vector<double> sq2(d.values.size());
        for (size_t i = 0; i < sq2.size(); ++i) sq2[i] = d.values[i] * d.values[i];
        out.rhs = area * weighted_integral(RadialProfile(U.grid, std::move(sq2)), N - 1.0);
    }
    return out;
}

RecursionCheck recursion_identity_check(const RadialProfile& V, int N, int k) {
    if (k < 1) throw domain_error("recursion_identity_check: k >= 1");
    if (2 * k + 1 > RadialGrid::max_derivative_order)
        throw domain_error("recursion_identity_check: derivative order ceiling exceeded");
    const auto& r = V.grid->nodes();
    const int n = V.grid->size();

    auto d2km1 = derivative(V, 2 * k - 1);
    auto d2k = derivative(V, 2 * k);
    auto d2kp1 = derivative(V, 2 * k + 1);

    auto sq_integral = [&](const std::vector<double>& v, double beta) {
        std::vector<double> sq(n);
        for (int i = 0; i < n; ++i) sq[i] = v[i] * v[i];
        return weighted_integral(RadialProfile(V.grid, std::move(sq)), beta);
    };

    RecursionCheck out;
    {
        // U^{(2k+1)} = r V^{(2k)} + 2k V^{(2k-1)}
        std::vector<double> u(n);
        for (int i = 0; i < n; ++i) u[i] = r[i] * d2k.values[i] + 2.0 * k * d2km1.values[i];
        out.lhs_odd = sq_integral(u, N - 1.0);
        out.rhs_odd = sq_integral(d2k.values, N + 1.0) +
                      2.0 * k * (2.0 * k - N) * sq_integral(d2km1.values, N - 1.0);
    }
    {
        // U^{(2k+2)} = r V^{(2k+1)} + (2k+1) V^{(2k)}
        std::vector<double> u(n);
        for (int i = 0; i < n; ++i)
            u[i] = r[i] * d2kp1.values[i] + (2.0 * k + 1.0) * d2k.values[i];
        out.lhs_even = sq_integral(u, N - 1.0);
        out.rhs_even = sq_integral(d2kp1.values, N + 1.0) +
                       (2.0 * k + 1.0) * (2.0 * k + 1.0 - N) * sq_integral(d2k.values, N - 1.0);
    }
    return out;
}

}
