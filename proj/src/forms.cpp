#include "ineqforge/forms.hpp"

#include <algorithm>
#include <cmath>

#include "ineqforge/constants.hpp"
#include "ineqforge/errors.hpp"

namespace ineq::forms {

namespace {

RadialProfile squared(const RadialProfile& u) {
    std::vector<double> v(u.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = u.values[i] * u.values[i];
    return RadialProfile(u.grid, std::move(v));
}

RadialProfile abs_pow(const RadialProfile& u, double q) {
    std::vector<double> v(u.values.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = std::pow(std::fabs(u.values[i]), q);
    return RadialProfile(u.grid, std::move(v));
}

void collect(std::vector<std::string>& flags, const IntegralResult& r, const char* what) {
    if (r.flagged) flags.push_back(std::string(what) + ": truncation tail above 1e-8");
}

double interpolation_value(double deficit, double B, double theta) {
    if (B <= 0.0) return 0.0;
    // quadrature noise must not drive the deficit negative into complex powers
    const double d = std::max(deficit, 0.0);
    if (d == 0.0 && theta > 0.0) return 0.0;
    return std::pow(d, theta) * std::pow(B, 1.0 - theta);
}

DeficitReport assemble(double A, double B, double theta,
                       std::vector<std::string> flags) {
    DeficitReport rep;
    rep.A = A;
    rep.B = B;
    rep.deficit = A - B;
    rep.theta = theta;
    rep.interpolation_value = interpolation_value(rep.deficit, B, theta);
    rep.case1 = (1.0 - theta) * A >= B;
    rep.flags = std::move(flags);
    return rep;
}

}  // namespace

DeficitReport deficit_even(const RadialProfile& u, int N, int m, double theta) {
    Dimension{N, m}.require_even();
    const double area = sphere_area(N);
    std::vector<std::string> flags;

    auto lap = radial_laplacian_power(u, N, m);
    auto ia = weighted_integral_checked(squared(lap), N - 1);
    collect(flags, ia, "A");
    auto ib = weighted_integral_checked(squared(u), N - 1 - 4.0 * m);
    collect(flags, ib, "B");

    const double A = area * ia.value;
    const double B = constants::c1(N, m) * area * ib.value;
    return assemble(A, B, theta, std::move(flags));
}

DeficitReport deficit_odd(const RadialProfile& u, int N, int m, double theta) {
    Dimension{N, m}.require_odd();
    const double area = sphere_area(N);
    std::vector<std::string> flags;

    auto lap = radial_laplacian_power(u, N, m);
    auto grad = derivative(lap, 1);
    auto ia = weighted_integral_checked(squared(grad), N - 1);
    collect(flags, ia, "A");
    auto ib = weighted_integral_checked(squared(u), N - 3 - 4.0 * m);
    collect(flags, ib, "B");

    const double A = area * ia.value;
    const double B = constants::c2(N, m) * area * ib.value;
    return assemble(A, B, theta, std::move(flags));
}

IdentityCheck groundstate_identity_2nd(const RadialProfile& v, int N) {
    const double area = sphere_area(N);
    IdentityCheck chk;

    auto lap = radial_laplacian(v, N);
    auto d1 = derivative(v, 1);
    auto iA = weighted_integral_checked(squared(lap), N - 1);
    auto iB = weighted_integral_checked(squared(d1), N - 3);
    collect(chk.flags, iA, "lhs A");
    collect(chk.flags, iB, "lhs B");
    const double A = area * iA.value;
    const double B = area * 0.25 * N * N * iB.value;
    chk.lhs = A - B;
    chk.scale = std::max({std::fabs(A), std::fabs(B), 1.0});

    // f = (v'/r) r^{N/2}
    auto w = derivative_over_r(v);
    std::vector<double> fv(w.values.size());
    const auto& r = v.grid->nodes();
    for (size_t i = 0; i < fv.size(); ++i) fv[i] = w.values[i] * std::pow(r[i], 0.5 * N);
    RadialProfile f(v.grid, std::move(fv));
    auto fp = derivative(f, 1);
    auto iR = weighted_integral_checked(squared(fp), 1.0);
    collect(chk.flags, iR, "rhs");
    chk.rhs = area * iR.value;
    return chk;
}

IdentityCheck groundstate_identity_1st(const RadialProfile& u, int N, int m) {
    if (N <= 4 * m) throw domain_error("groundstate_identity_1st: N > 4m");
    const double area = sphere_area(N);
    const double a = 0.5 * (N - 4.0 * m);
    IdentityCheck chk;

    auto d1 = derivative(u, 1);
    auto iA = weighted_integral_checked(squared(d1), N - 4.0 * m + 1.0);
    auto iB = weighted_integral_checked(squared(u), N - 4.0 * m - 1.0);
    collect(chk.flags, iA, "lhs A");
    collect(chk.flags, iB, "lhs B");
    const double A = area * iA.value;
    const double B = area * a * a * iB.value;
    chk.lhs = A - B;
    chk.scale = std::max({std::fabs(A), std::fabs(B), 1.0});

    std::vector<double> fv(u.values.size());
    const auto& r = u.grid->nodes();
    for (size_t i = 0; i < fv.size(); ++i) fv[i] = u.values[i] * std::pow(r[i], a);
    RadialProfile f(u.grid, std::move(fv));
    auto fp = derivative(f, 1);
    auto iR = weighted_integral_checked(squared(fp), 1.0);
    collect(chk.flags, iR, "rhs");
    chk.rhs = area * iR.value;
    return chk;
}

LogProfile to_log_profile(const RadialProfile& f) {
    LogProfile psi;
    psi.s = f.grid->log_nodes();
    psi.values = f.values;
    psi.weights = f.grid->log_weights();
    return psi;
}

double LogProfile::integral_sq_derivative(const RadialGrid& g) const {
    auto d = g.s_derivative(values, 1);
    double acc = 0.0;
    for (size_t i = 0; i < d.size(); ++i) acc += weights[i] * d[i] * d[i];
    return acc;
}

double LogProfile::integral_abs_pow(double kappa) const {
    double acc = 0.0;
    for (size_t i = 0; i < values.size(); ++i)
        acc += weights[i] * std::pow(std::fabs(values[i]), kappa);
    return acc;
}

BesselPairResidual bessel_pair_residual(const GridPtr& g, double q, int N,
                                        double V_exponent, PowerForm B_form,
                                        double phi_exponent) {
    const double a = phi_exponent;
    const int n = g->size();
    // flux term r^{N-1} V |phi'|^{q-2} phi'
    double c1 = 0.0, e1 = 0.0;
    if (a != 0.0) {
        c1 = (a > 0 ? 1.0 : -1.0) * std::pow(std::fabs(a), q - 1.0);
        e1 = N - 1.0 + V_exponent + (a - 1.0) * (q - 1.0);
    }
    std::vector<double> flux(n, 0.0);
    for (int i = 0; i < n; ++i)
        if (c1 != 0.0) flux[i] = c1 * std::pow(g->nodes()[i], e1);
    RadialProfile fluxp(g, std::move(flux));
    auto dflux = derivative(fluxp, 1);

    const double e2 = N - 1.0 + B_form.exponent + a * (q - 1.0);
    BesselPairResidual out{RadialProfile(g, std::vector<double>(n, 0.0)), 0.0, 0.0};
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t2 = B_form.coeff * std::pow(g->nodes()[i], e2);
        out.residual.values[i] = dflux.values[i] + t2;
        scale = std::max(scale, std::max(std::fabs(dflux.values[i]), std::fabs(t2)));
    }
    out.scale = std::max(scale, 1e-300);
    for (int i = 0; i < n; ++i)
        out.max_rel = std::max(out.max_rel, std::fabs(out.residual.values[i]) / out.scale);
    return out;
}

Lemma42Result lemma42_lower_bound(const RadialProfile& u, double q, int N, double p,
                                  std::optional<double> c_q_assumed) {
    if (q < 2.0) throw domain_error("lemma42_lower_bound: q >= 2");
    if (!(p >= q && p < N)) throw domain_error("lemma42_lower_bound: q <= p < N");
    const double area = sphere_area(N);
    const double ev = N * (q / p - 1.0);             // V exponent
    const double eb = N * q / p - q - N;             // B exponent
    const double cb = std::pow((N - p) / p, q);      // B coefficient
    const double a = -(N - p) / p;                   // phi exponent

    auto du = derivative(u, 1);
    const double termA = area * weighted_integral(abs_pow(du, q), ev + N - 1.0);
    const double termB = area * cb * weighted_integral(abs_pow(u, q), eb + N - 1.0);

    // v = u / phi = u r^{-a}
    std::vector<double> vv(u.values.size());
    const auto& r = u.grid->nodes();
    for (size_t i = 0; i < vv.size(); ++i) vv[i] = u.values[i] * std::pow(r[i], -a);
    RadialProfile v(u.grid, std::move(vv));
    auto dv = derivative(v, 1);
    const double rem = area * weighted_integral(abs_pow(dv, q), ev + a * q + N - 1.0);

    Lemma42Result res;
    res.lhs = termA - termB;
    res.remainder = rem;
    res.c_q_assumed = c_q_assumed.value_or(q == 2.0 ? 1.0 : 0.0);
    const double eps = 1e-8 * std::max({std::fabs(termA), std::fabs(termB), 1.0});
    res.bound_holds = res.lhs >= res.c_q_assumed * res.remainder - eps;
    return res;
}

double pointwise_cp(double p, double a, double b) {
    const double d = a - b;
    return std::pow(std::fabs(a), p) + (p - 1.0) * std::pow(std::fabs(b), p) -
           p * std::pow(std::fabs(d), p - 2.0) * d * b;
}

}
