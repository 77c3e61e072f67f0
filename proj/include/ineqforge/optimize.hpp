#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace ineq::opt {

/// Golden-section maximization of f on [a, b].
inline double golden_max(const std::function<double(double)>& f, double a, double b,
                         int iters, double* xbest = nullptr) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    if (xbest) *xbest = fc > fd ? c : d;
    return std::max(fc, fd);
}

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    int evals = 0;
    bool stagnated = false;
};

/// Standard Nelder-Mead minimization with reflection/expansion/contraction/
/// shrink coefficients (1, 2, 1/2, 1/2). Deterministic for a fixed start.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x0, double step, int max_evals,
                                    double ftol = 1e-10) {
    const int n = static_cast<int>(x0.size());
    std::vector<std::vector<double>> pts(n + 1, x0);
    for (int i = 0; i < n; ++i) pts[i + 1][i] += step;
    std::vector<double> fv(n + 1);
    int evals = 0;
    for (int i = 0; i <= n; ++i) fv[i] = (++evals, f(pts[i]));

    auto order = [&] {
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (fv[j] < fv[i]) {
                    std::swap(fv[i], fv[j]);
                    std::swap(pts[i], pts[j]);
                }
    };
    order();
    while (evals < max_evals) {
        if (std::fabs(fv[n] - fv[0]) <= ftol * (std::fabs(fv[0]) + ftol)) break;
        std::vector<double> cen(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cen[j] += pts[i][j] / n;
        auto point = [&](double coef) {
            std::vector<double> p(n);
            for (int j = 0; j < n; ++j) p[j] = cen[j] + coef * (pts[n][j] - cen[j]);
            return p;
        };
        auto xr = point(-1.0);
        double fr = (++evals, f(xr));
        if (fr < fv[0]) {
            auto xe = point(-2.0);
            double fe = (++evals, f(xe));
            if (fe < fr) {
                pts[n] = xe;
                fv[n] = fe;
            } else {
                pts[n] = xr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            pts[n] = xr;
            fv[n] = fr;
        } else {
            auto xc = point(fr < fv[n] ? -0.5 : 0.5);
            double fc = (++evals, f(xc));
            if (fc < std::min(fr, fv[n])) {
                pts[n] = xc;
                fv[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 0; j < n; ++j)
                        pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
                    fv[i] = (++evals, f(pts[i]));
                }
            }
        }
        order();
    }
    NelderMeadResult res;
    res.x = pts[0];
    res.f = fv[0];
    res.evals = evals;
    res.stagnated = evals >= max_evals;
    return res;
}

}
