#include "ineqforge/calculus.hpp"

#include <cmath>
#include <numbers>

#include "ineqforge/errors.hpp"
#include "ineqforge/quadrule.hpp"

namespace ineq {

void Dimension::require_even() const {
    if (m < 1) throw domain_error("even-order case requires m >= 1");
    if (N <= 4 * m) throw domain_error("even-order case requires N > 4m");
}

void Dimension::require_odd() const {
    if (m < 0) throw domain_error("m must be nonnegative");
    if (N <= 4 * m + 2) throw domain_error("odd-order case requires N > 4m + 2");
}

RadialProfile derivative(const RadialProfile& u, int k) {
    if (k < 1 || k > RadialGrid::max_derivative_order)
        throw domain_error("derivative: unsupported order (1.." +
                           std::to_string(RadialGrid::max_derivative_order) + ")");
    static const auto stirling = quadrule::stirling_first(RadialGrid::max_derivative_order);
    const auto& g = *u.grid;
    const int n = g.size();
    std::vector<double> acc(n, 0.0);
    for (int j = 1; j <= k; ++j) {
        const double c = stirling[k][j];
        if (c == 0.0) continue;
        auto dj = g.s_derivative(u.values, j);
        for (int i = 0; i < n; ++i) acc[i] += c * dj[i];
    }
    for (int i = 0; i < n; ++i) acc[i] *= std::pow(g.nodes()[i], -k);
    return RadialProfile(u.grid, std::move(acc));
}

RadialProfile radial_laplacian(const RadialProfile& u, int N) {
    if (N < 1) throw domain_error("radial_laplacian: N >= 1");
    const auto& g = *u.grid;
    const int n = g.size();
    auto d1 = g.s_derivative(u.values, 1);
    auto d2 = g.s_derivative(u.values, 2);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double inv_r2 = 1.0 / (g.nodes()[i] * g.nodes()[i]);
        out[i] = inv_r2 * (d2[i] + (N - 2) * d1[i]);
    }
    return RadialProfile(u.grid, std::move(out));
}

RadialProfile radial_laplacian_power(const RadialProfile& u, int N, int m) {
    RadialProfile v = u;
    for (int i = 0; i < m; ++i) v = radial_laplacian(v, N);
    return v;
}

RadialProfile derivative_over_r(const RadialProfile& u) {
    const auto& g = *u.grid;
    auto d1 = g.s_derivative(u.values, 1);
    for (int i = 0; i < g.size(); ++i) d1[i] /= g.nodes()[i] * g.nodes()[i];
    return RadialProfile(u.grid, std::move(d1));
}

namespace {

// Origin patch: the integrand g(r) = U(r) r^beta is continued below r_min as
// the power law fitted from the first two nodes, int_0^{r_min} ~ g0 r_min /
// (gamma + 1). Heads with gamma <= -0.9 cannot be patched and are flagged.
struct HeadPatch {
    double value = 0.0;
    bool divergent = false;
};

HeadPatch head_patch(const RadialGrid& g, const std::vector<double>& vals, double beta) {
    HeadPatch p;
    const double g0 = vals[0] * std::pow(g.nodes()[0], beta);
    const double g1 = vals[1] * std::pow(g.nodes()[1], beta);
    if (g0 == 0.0) return p;
    if (g1 == 0.0 || (g0 > 0) != (g1 > 0)) return p;  // no stable power fit
    const double hs = g.log_nodes()[1] - g.log_nodes()[0];
    double gamma = std::log(std::fabs(g1 / g0)) / hs;
    if (gamma <= -0.9) {
        p.divergent = true;
        return p;
    }
    gamma = std::min(gamma, 50.0);
    p.value = g0 * g.r_min() / (gamma + 1.0);
    return p;
}

}  // namespace

IntegralResult weighted_integral_checked(const RadialProfile& u, double beta) {
    const auto& g = *u.grid;
    const int n = g.size();
    double total = 0.0, absum = 0.0;
    std::vector<double> terms(n);
    for (int i = 0; i < n; ++i) {
        const double t = g.weights()[i] * u.values[i] * std::pow(g.nodes()[i], beta);
        if (!std::isfinite(t)) throw numeric_error("weighted_integral: non-finite term");
        terms[i] = t;
        total += t;
        absum += std::fabs(t);
    }
    const auto patch = head_patch(g, u.values, beta);
    // tail: mass of the last decade of the radial span
    const double ln10 = std::numbers::ln10;
    double tail = 0.0;
    for (int i = 0; i < n; ++i)
        if (g.log_nodes()[i] > g.log_nodes().back() - ln10) tail += terms[i];

    IntegralResult res;
    res.value = total + patch.value;
    const double scale = std::max(std::fabs(res.value), 1e-300);
    res.head_fraction = std::fabs(patch.value) / scale;
    res.tail_fraction = std::fabs(tail) / scale;
    res.flagged = (res.tail_fraction > 1e-8 ||
                   (patch.divergent && std::fabs(terms[0]) > 1e-10 * scale)) &&
                  absum > 1e-280;
    return res;
}

double weighted_integral(const RadialProfile& u, double beta) {
    const auto& g = *u.grid;
    double total = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double t = g.weights()[i] * u.values[i] * std::pow(g.nodes()[i], beta);
        if (!std::isfinite(t)) throw numeric_error("weighted_integral: non-finite term");
        total += t;
    }
    return total + head_patch(g, u.values, beta).value;
}

double sphere_area(int N) {
    if (N < 1) throw domain_error("sphere_area: N >= 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * N) / std::tgamma(0.5 * N);
}

double ball_volume(int N) {
    if (N < 1) throw domain_error("ball_volume: N >= 1");
    return std::pow(std::numbers::pi, 0.5 * N) / std::tgamma(0.5 * N + 1.0);
}

}
