#include "ineqforge/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ineqforge/errors.hpp"
#include "ineqforge/optimize.hpp"

namespace ineq::norms {

namespace {

constexpr double pi = std::numbers::pi;

// ---------------------------------------------------------------- rearrange

// locate the crossing a(s) = level inside [s_i, s_{i+1}] with a local cubic
double crossing_s(const RadialGrid& g, const std::vector<double>& a, int i, double level) {
    const auto& s = g.log_nodes();
    const int n = g.size();
    const int j0 = std::clamp(i - 1, 0, n - 4);
    auto val = [&](double sq) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) {
            double lk = 1.0;
            for (int m = 0; m < 4; ++m)
                if (m != k) lk *= (sq - s[j0 + m]) / (s[j0 + k] - s[j0 + m]);
            acc += lk * a[j0 + k];
        }
        return acc - level;
    };
    double lo = s[i], hi = s[i + 1];
    double flo = a[i] - level;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = val(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// sum of b^N - a^N over the superlevel set {a > level}
double superlevel_rn(const RadialGrid& g, const std::vector<double>& a, double level, int N) {
    const int n = g.size();
    double sum = 0.0;
    double open_at = -1.0;  // r where the current interval opened
    if (a[0] > level) open_at = 0.0;  // extend to the origin: U ~ const inside r_min
    for (int i = 0; i + 1 < n; ++i) {
        const bool in0 = a[i] > level, in1 = a[i + 1] > level;
        if (in0 == in1) continue;
        const double rc = std::exp(crossing_s(g, a, i, level));
        if (!in0 && in1) {
            open_at = rc;
        } else {
            sum += std::pow(rc, N) - std::pow(open_at, N);
            open_at = -1.0;
        }
    }
    if (open_at >= 0.0) sum += std::pow(g.r_max(), N) - std::pow(open_at, N);
    return sum;
}

}  // namespace

RadialProfile decreasing_rearrangement(const RadialProfile& u, int N, bool* abs_taken) {
    const auto& g = *u.grid;
    const int n = g.size();
    std::vector<double> a(n);
    bool took_abs = false;
    for (int i = 0; i < n; ++i) {
        a[i] = std::fabs(u.values[i]);
        if (u.values[i] < 0.0) took_abs = true;
    }
    if (abs_taken) *abs_taken = took_abs;

    double amax = 0.0;
    for (double v : a) amax = std::max(amax, v);
    if (amax == 0.0) return RadialProfile(u.grid, std::vector<double>(n, 0.0));

    // 512 levels from the value quantiles (resolves where the mass sits)
    std::vector<double> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    const int L = 512;
    std::vector<double> levels;
    levels.reserve(L);
    for (int j = 0; j < L; ++j) {
        const double q = (j + 0.5) / L;
        const double v = sorted[static_cast<size_t>(q * (n - 1))];
        if (v > 0.0 && (levels.empty() || v > levels.back() * (1.0 + 1e-14)))
            levels.push_back(v);
    }
    if (levels.empty() || levels.back() < amax * (1.0 - 1e-14))
        levels.push_back(amax * (1.0 - 1e-15));

    // decreasing table R(level) = (sum (b^N - a^N))^{1/N}
    std::vector<double> radius(levels.size());
    for (size_t j = 0; j < levels.size(); ++j)
        radius[j] = std::pow(superlevel_rn(g, a, levels[j], N), 1.0 / N);

    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double rho = g.nodes()[i];
        if (rho >= radius.front()) {
            out[i] = 0.0;  // outside the support of u*
            continue;
        }
        if (rho <= radius.back()) {
            out[i] = levels.back();
            continue;
        }
        // radius[] decreases with level index; binary search the bracket
        size_t lo = 0, hi = radius.size() - 1;
        while (hi - lo > 1) {
            const size_t mid = (lo + hi) / 2;
            if (radius[mid] > rho)
                lo = mid;
            else
                hi = mid;
        }
        const double r0 = radius[lo], r1 = radius[hi];
        const double t = (r0 - rho) / std::max(r0 - r1, 1e-300);
        out[i] = levels[lo] + t * (levels[hi] - levels[lo]);
    }
    return RadialProfile(u.grid, std::move(out));
}

// ------------------------------------------------------------------ lorentz

NormResult lorentz_norm(const RadialProfile& u, int N, double p_star, double r) {
    if (!(p_star > 0.0) || !(r >= 1.0)) throw domain_error("lorentz_norm: p* > 0, r >= 1");
    bool monotone = true;
    for (int i = 0; i + 1 < u.size(); ++i)
        if (u.values[i + 1] > u.values[i] + 1e-14 * std::fabs(u.values[i])) {
            monotone = false;
            break;
        }
    bool nonneg = std::all_of(u.values.begin(), u.values.end(), [](double v) { return v >= 0.0; });
    const RadialProfile star =
        (monotone && nonneg) ? u : decreasing_rearrangement(u, N);

    NormResult res;
    const double wn = ball_volume(N);
    if (std::isinf(r)) {
        double best = 0.0, arg = 0.0;
        for (int i = 0; i < star.size(); ++i) {
            const double v = star.values[i] * std::pow(wn, 1.0 / p_star) *
                             std::pow(star.grid->nodes()[i], N / p_star);
            if (v > best) {
                best = v;
                arg = star.grid->nodes()[i];
            }
        }
        res.value = best;
        res.maximizer_a = arg;
        return res;
    }
    std::vector<double> integ(star.size());
    for (int i = 0; i < star.size(); ++i)
        integ[i] = std::pow(star.values[i], r);
    auto I = weighted_integral_checked(RadialProfile(star.grid, std::move(integ)),
                                       r * N / p_star - 1.0);
    if (I.flagged) res.flags.push_back("divergent: decay too slow for (p*, r); partial value");
    res.value = std::pow(wn, 1.0 / p_star - 1.0 / r) *
                std::pow(sphere_area(N) * std::max(I.value, 0.0), 1.0 / r);
    return res;
}

// ------------------------------------------------------------------- morrey

namespace {

// int_c^1 (1 - t^2)^{(N-3)/2} dt by the integer/half-integer recurrence
double cap_integral(int N, double c) {
    c = std::clamp(c, -1.0, 1.0);
    const int m = N - 3;
    if (m % 2 == 0) {
        // even exponent: start from I_0 = 1 - c
        double i0 = 1.0 - c;
        for (int k = 2; k <= m; k += 2)
            i0 = (-c * std::pow(1.0 - c * c, 0.5 * k) + k * i0) / (k + 1.0);
        return i0;
    }
    double i0 = std::acos(c);  // I_{-1}
    for (int k = 1; k <= m; k += 2)
        i0 = (-c * std::pow(1.0 - c * c, 0.5 * k) + k * i0) / (k + 1.0);
    return i0;
}

// int_{B(y,R)} |u|^p dx for |y| = d, radial |u|^p given as samples "up".
double ball_integral(const RadialGrid& g, const std::vector<double>& up, int N, double d,
                     double R) {
    const double full = cap_integral(N, -1.0);
    const double ring = sphere_area(N) / full;  // |S^{N-2}| when N >= 2
    double acc = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double rho = g.nodes()[i];
        if (rho >= d + R) break;
        double frac;
        if (d == 0.0 || rho <= R - d) {
            frac = full;
        } else {
            const double c = (d * d + rho * rho - R * R) / (2.0 * d * rho);
            if (c >= 1.0) continue;
            frac = cap_integral(N, c);
        }
        acc += g.weights()[i] * up[i] * std::pow(rho, N - 1.0) * frac;
    }
    // mass inside r_min when the ball covers the origin
    if (d < R && g.r_min() < d + R) {
        const double r0 = std::min(g.r_min(), R - d > 0 ? g.r_min() : g.r_min());
        acc += up.front() * full * std::pow(r0, N) / N;
    }
    return acc * ring;
}

}  // namespace

NormResult morrey_norm(const RadialProfile& u, int N, double p, double alpha,
                       par::Exec exec) {
    if (!(p >= 1.0)) throw domain_error("morrey_norm: p >= 1");
    if (!(alpha >= 0.0 && alpha <= N)) throw domain_error("morrey_norm: alpha in [0, N]");
    const auto& g = *u.grid;
    std::vector<double> up(g.size());
    for (int i = 0; i < g.size(); ++i) up[i] = std::pow(std::fabs(u.values[i]), p);

    const int nc = 64, nr = 64;
    std::vector<double> centers(nc), radii(nr);
    centers[0] = 0.0;
    for (int i = 1; i < nc; ++i)
        centers[i] = g.r_min() *
                     std::pow(g.r_max() / g.r_min(), (i - 1) / static_cast<double>(nc - 2));
    for (int j = 0; j < nr; ++j)
        radii[j] = g.r_min() *
                   std::pow(10.0 * g.r_max() / g.r_min(), j / static_cast<double>(nr - 1));

    auto objective = [&](double d, double R) {
        const double I = ball_integral(g, up, N, d, R);
        return std::pow(R, alpha - N) * I;  // value^p
    };

    std::vector<double> best(nc, 0.0);
    std::vector<int> bestj(nc, 0);
    par::for_each(
        nc,
        [&](size_t i) {
            for (int j = 0; j < nr; ++j) {
                const double v = objective(centers[i], radii[j]);
                if (v > best[i]) {
                    best[i] = v;
                    bestj[i] = j;
                }
            }
        },
        exec);
    int ci = 0;
    for (int i = 1; i < nc; ++i)
        if (best[i] > best[ci]) ci = i;

    NormResult res;
    double vmax = best[ci];
    double dstar = centers[ci], rstar = radii[bestj[ci]];
    if (ci == 0) {
        // supremum on the axis d = 0: refine in log R only
        double xb;
        const double v = opt::golden_max(
            [&](double lr) { return objective(0.0, std::exp(lr)); },
            std::log(rstar) - 1.0, std::log(rstar) + 1.0, 40, &xb);
        if (v > vmax) {
            vmax = v;
            rstar = std::exp(xb);
        }
    } else {
        auto nm = opt::nelder_mead(
            [&](const std::vector<double>& x) { return -objective(std::exp(x[0]), std::exp(x[1])); },
            {std::log(dstar), std::log(rstar)}, 0.3, 400);
        if (-nm.f > vmax) {
            vmax = -nm.f;
            dstar = std::exp(nm.x[0]);
            rstar = std::exp(nm.x[1]);
        }
    }
    if (bestj[ci] == nr - 1) res.flags.push_back("supremum attained at radius-grid boundary");
    res.value = std::pow(vmax, 1.0 / p);
    res.maximizer_a = dstar;
    res.maximizer_b = rstar;
    return res;
}

// -------------------------------------------------------------------- besov

namespace {

// scaled modified Bessel e^{-a} (2/a)^nu I_nu(a) ... in M-form:
// M(a) = sum_k (a^2/4)^k / (k! Gamma(nu+k+1)), e^{-a} applied by the caller
// via expotential bookkeeping; here we return e^{-a} (2/a)^{-nu}-free value.
double scaled_gegenbauer_kernel(int N, double a) {
    // W(a) = e^{-a} int_{-1}^{1} e^{a tau} (1 - tau^2)^{(N-3)/2} dtau
    //      = sqrt(pi) Gamma((N-1)/2) e^{-a} (2/a)^{(N-2)/2} I_{(N-2)/2}(a)
    const double nu = 0.5 * (N - 2);
    const double cg = std::sqrt(pi) * std::tgamma(0.5 * (N - 1));
    if (a < std::max(34.0, 8.0 * nu * nu + 30.0)) {
        // positive-term series of (2/a)^nu I_nu(a), scaled by e^{-a} at the end
        const double q = 0.25 * a * a;
        double term = 1.0 / std::tgamma(nu + 1.0), sum = term;
        for (int k = 1; k < 400; ++k) {
            term *= q / (k * (nu + k));
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return cg * sum * std::exp(-a);
    }
    // Hankel-type asymptotics of e^{-a} I_nu(a)
    const double mu = 4.0 * nu * nu;
    double c = 1.0, sum = 1.0;
    for (int k = 1; k <= 20; ++k) {
        const double f = 2.0 * k - 1.0;
        c *= -(mu - f * f) / (8.0 * a * k);
        sum += c;
        if (std::fabs(c) < 1e-16) break;
    }
    return cg * std::pow(2.0 / a, nu) * sum / std::sqrt(2.0 * pi * a);
}

}  // namespace

double heat_convolution(const RadialProfile& u, int N, double t, double x) {
    if (!(t > 0.0)) throw domain_error("heat_convolution: t > 0");
    const auto& g = *u.grid;
    const double full = cap_integral(N, -1.0);
    const double ring = sphere_area(N) / full;  // |S^{N-2}|
    const double pref = std::pow(4.0 * pi * t, -0.5 * N) * ring * full;
    // ring * W(a) with W = full * normalized kernel; scaled_gegenbauer_kernel
    // already returns the unnormalized angular integral
    const double width = 12.0 * std::sqrt(t);

    double acc = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double rho = g.nodes()[i];
        if (rho < x - width) continue;
        if (rho > x + width) break;
        const double a = x * rho / (2.0 * t);
        const double gauss = std::exp(-(x - rho) * (x - rho) / (4.0 * t));
        const double w = scaled_gegenbauer_kernel(N, a) / full;
        acc += g.weights()[i] * u.values[i] * std::pow(rho, N - 1.0) * gauss * w;
    }
    // origin patch: mass below r_min with U frozen at its innermost sample
    if (x - width < g.r_min()) {
        const double r0 = g.r_min();
        const int np = 6;
        for (int p = 0; p < np; ++p) {
            const double rho = r0 * (p + 0.5) / np;
            const double a = x * rho / (2.0 * t);
            const double gauss = std::exp(-(x - rho) * (x - rho) / (4.0 * t));
            const double w = scaled_gegenbauer_kernel(N, a) / full;
            acc += (r0 / np) * u.values.front() * std::pow(rho, N - 1.0) * gauss * w;
        }
    }
    return pref * acc;
}

NormResult besov_norm(const RadialProfile& u, int N, double s, par::Exec exec) {
    if (!(s > 0.0)) throw domain_error("besov_norm: s > 0");
    if (N > 16) throw domain_error("besov_norm: N ceiling 16");
    const auto& g = *u.grid;

    double r_sup = g.r_min();
    double peak = 0.0;
    for (double v : u.values) peak = std::max(peak, std::fabs(v));
    for (int i = 0; i < g.size(); ++i)
        if (std::fabs(u.values[i]) > 1e-13 * peak) r_sup = g.nodes()[i];

    const int nx = 64;
    std::vector<double> xs(nx);
    xs[0] = 0.0;
    for (int i = 1; i < nx; ++i)
        xs[i] = g.r_min() *
                std::pow(3.0 * r_sup / g.r_min(), (i - 1) / static_cast<double>(nx - 2));

    auto sup_x = [&](double t) {
        double best = 0.0;
        int arg = 0;
        for (int i = 0; i < nx; ++i) {
            const double v = std::fabs(heat_convolution(u, N, t, xs[i]));
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        // local refinement around the discrete maximizer
        if (arg > 0 && arg + 1 < nx) {
            double xb;
            const double v = opt::golden_max(
                [&](double lx) { return std::fabs(heat_convolution(u, N, t, std::exp(lx))); },
                std::log(xs[arg - 1]), std::log(xs[arg + 1]), 16, &xb);
            best = std::max(best, v);
        }
        return best;
    };

    NormResult res;
    double t_lo = 1e-6, t_hi = 1e6;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const int nt = 128;
        std::vector<double> gv(nt);
        par::for_each(
            nt,
            [&](size_t j) {
                const double t =
                    t_lo * std::pow(t_hi / t_lo, j / static_cast<double>(nt - 1));
                gv[j] = std::pow(t, 0.5 * s) * sup_x(t);
            },
            exec);
        int jb = 0;
        for (int j = 1; j < nt; ++j)
            if (gv[j] > gv[jb]) jb = j;
        if (jb == 0 || jb == nt - 1) {
            if (attempt == 0) {
                t_lo *= 1e-6;  // one range doubling (in decades)
                t_hi *= 1e6;
                continue;
            }
            res.flags.push_back("t-grid supremum attained at boundary");
        }
        const double lt = std::log(t_lo), ht = std::log(t_hi);
        const double ljb = lt + (ht - lt) * jb / (nt - 1.0);
        const double dl = (ht - lt) / (nt - 1.0);
        double tb;
        const double refined = opt::golden_max(
            [&](double l) {
                const double t = std::exp(l);
                return std::pow(t, 0.5 * s) * sup_x(t);
            },
            ljb - dl, ljb + dl, 24, &tb);
        res.value = std::max(refined, gv[jb]);
        res.maximizer_a = std::exp(tb);
        break;
    }
    return res;
}

double embedding_ratio(const RadialProfile& u, int N, Embedding which, double alpha,
                       double p, par::Exec exec) {
    if (!(alpha > 0.0 && alpha < N)) throw domain_error("embedding_ratio: alpha in (0, N)");
    double src = 0.0, dst = 0.0;
    if (which == Embedding::morrey1_to_besov) {
        src = morrey_norm(u, N, 1.0, alpha, exec).value;
        dst = besov_norm(u, N, alpha, exec).value;
    } else {
        if (!(p > 1.0)) throw domain_error("embedding_ratio: p > 1");
        src = morrey_norm(u, N, p, alpha, exec).value;
        dst = morrey_norm(u, N, 1.0, alpha / p, exec).value;
    }
    if (src == 0.0 && dst == 0.0) return 0.0;
    return dst / src;
}

NormResult critical_sobolev_norm(const RadialProfile& u, int N, int m, Parity parity) {
    double denom;
    if (parity == Parity::even) {
        if (N <= 4 * m) throw domain_error("critical_sobolev_norm: N > 4m");
        denom = N - 4.0 * m;
    } else {
        if (N <= 4 * m + 2) throw domain_error("critical_sobolev_norm: N > 4m + 2");
        denom = N - 4.0 * m - 2.0;
    }
    const double q = 2.0 * N / denom;
    NormResult res;
    std::vector<double> integ(u.size());
    for (int i = 0; i < u.size(); ++i) integ[i] = std::pow(std::fabs(u.values[i]), q);
    auto I = weighted_integral_checked(RadialProfile(u.grid, std::move(integ)), N - 1.0);
    if (I.flagged) res.flags.push_back("divergent: critical-norm tail unresolved");
    res.value = std::pow(sphere_area(N) * std::max(I.value, 0.0), 1.0 / q);
    return res;
}

double lp_norm(const RadialProfile& u, int N, double p) {
    std::vector<double> integ(u.size());
    for (int i = 0; i < u.size(); ++i) integ[i] = std::pow(std::fabs(u.values[i]), p);
    const double I = weighted_integral(RadialProfile(u.grid, std::move(integ)), N - 1.0);
    return std::pow(sphere_area(N) * std::max(I, 0.0), 1.0 / p);
}

double pairing(const RadialProfile& u, const RadialProfile& g, int N) {
    if (u.grid != g.grid) throw domain_error("pairing: profiles must share a grid");
    std::vector<double> integ(u.size());
    for (int i = 0; i < u.size(); ++i) integ[i] = u.values[i] * g.values[i];
    return sphere_area(N) * weighted_integral(RadialProfile(u.grid, std::move(integ)), N - 1.0);
}

}
