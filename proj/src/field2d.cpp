#include "ineqforge/field2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ineqforge/errors.hpp"

namespace ineq::talenti {

namespace {
constexpr double pi = std::numbers::pi;
}

std::shared_ptr<const Grid2D> Grid2D::make(DomainShape shape, int n, double L) {
    if (n < 8) throw domain_error("Grid2D: n >= 8");
    auto g = std::make_shared<Grid2D>();
    g->L = L;
    g->n = n;
    g->h = L / n;
    g->mask.assign(static_cast<size_t>(n) * n, 0);
    const double c = 0.5 * L;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double x = g->cx(i), y = g->cx(j);
            bool in = false;
            switch (shape) {
                case DomainShape::square: in = true; break;
                case DomainShape::disk:
                    in = (x - c) * (x - c) + (y - c) * (y - c) <= 0.2025 * L * L;  // R = 0.45 L
                    break;
                case DomainShape::lshape:
                    in = !(x > c && y > c);
                    break;
            }
            g->mask[g->idx(i, j)] = in ? 1 : 0;
        }
    return g;
}

int Grid2D::interior_count() const {
    int c = 0;
    for (auto m : mask) c += m;
    return c;
}

Field2D::Field2D(Grid2DPtr g) : grid(std::move(g)) {
    values.assign(static_cast<size_t>(grid->n) * grid->n, 0.0);
}

Field2D Field2D::from_function(Grid2DPtr g, const std::function<double(double, double)>& f) {
    Field2D out(g);
    for (int i = 0; i < g->n; ++i)
        for (int j = 0; j < g->n; ++j)
            if (g->inside(i, j)) out.at(i, j) = f(g->cx(i), g->cx(j));
    return out;
}

Field2D solve_poisson(const Field2D& f) {
    const auto& g = *f.grid;
    const int n = g.n;
    const double ih2 = 1.0 / (g.h * g.h);

    auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int id = g.idx(i, j);
                if (!g.mask[id]) {
                    y[id] = 0.0;
                    continue;
                }
                const double c = x[id];
                double acc = 4.0 * c;
                acc -= g.inside(i - 1, j) ? x[g.idx(i - 1, j)] : 0.0;
                acc -= g.inside(i + 1, j) ? x[g.idx(i + 1, j)] : 0.0;
                acc -= g.inside(i, j - 1) ? x[g.idx(i, j - 1)] : 0.0;
                acc -= g.inside(i, j + 1) ? x[g.idx(i, j + 1)] : 0.0;
                y[id] = acc * ih2;
            }
    };

    const size_t m = f.values.size();
    std::vector<double> x(m, 0.0), r = f.values, z(m), p(m), ap(m);
    for (size_t i = 0; i < m; ++i)
        if (!g.mask[i]) r[i] = 0.0;

    double fnorm = 0.0;
    for (double v : r) fnorm += v * v;
    fnorm = std::sqrt(fnorm);
    if (fnorm == 0.0) return Field2D(f.grid);

    const double dinv = 1.0 / (4.0 * ih2);  // Jacobi preconditioner
    for (size_t i = 0; i < m; ++i) z[i] = g.mask[i] ? dinv * r[i] : 0.0;
    p = z;
    double rz = 0.0;
    for (size_t i = 0; i < m; ++i) rz += r[i] * z[i];

    std::vector<double> history;
    const int max_iter = 40 * n + 400;
    for (int it = 0; it < max_iter; ++it) {
        apply(p, ap);
        double pap = 0.0;
        for (size_t i = 0; i < m; ++i) pap += p[i] * ap[i];
        const double alpha = rz / pap;
        for (size_t i = 0; i < m; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        double rn = 0.0;
        for (double v : r) rn += v * v;
        rn = std::sqrt(rn);
        if (it % 16 == 0) history.push_back(rn / fnorm);
        if (rn <= 1e-10 * fnorm) {
            Field2D out(f.grid);
            out.values = std::move(x);
            return out;
        }
        double rz2 = 0.0;
        for (size_t i = 0; i < m; ++i) {
            z[i] = g.mask[i] ? dinv * r[i] : 0.0;
            rz2 += r[i] * z[i];
        }
        const double beta = rz2 / rz;
        rz = rz2;
        for (size_t i = 0; i < m; ++i) p[i] = z[i] + beta * p[i];
    }
    std::ostringstream oss;
    oss << "solve_poisson: CG did not reach 1e-10; residual history:";
    for (double v : history) oss << ' ' << v;
    throw accuracy_error(oss.str());
}

std::vector<Field2D> navier_cascade(const Field2D& f, int k) {
    if (k < 1 || k > 3) throw domain_error("navier_cascade: k in {1, 2, 3}");
    std::vector<Field2D> levels{f};
    for (int j = 0; j < k; ++j) levels.push_back(solve_poisson(levels.back()));
    return levels;
}

double StepProfile::operator()(double r) const {
    if (values.empty() || r >= radii.back()) return 0.0;
    auto it = std::upper_bound(radii.begin(), radii.end(), r);
    return values[static_cast<size_t>(it - radii.begin())];
}

StepProfile schwarz_2d(const Field2D& u) {
    const auto& g = *u.grid;
    std::vector<double> vals;
    vals.reserve(g.interior_count());
    for (size_t i = 0; i < u.values.size(); ++i)
        if (g.mask[i]) vals.push_back(std::fabs(u.values[i]));
    std::sort(vals.begin(), vals.end(), std::greater<>());
    StepProfile sp;
    sp.values = std::move(vals);
    sp.radii.resize(sp.values.size());
    for (size_t k = 0; k < sp.radii.size(); ++k)
        sp.radii[k] = std::sqrt((k + 1) * g.h * g.h / pi);
    return sp;
}

RadialSolution radial_navier_disk(const std::function<double(double)>& f, double R,
                                  int k, int N, int M) {
    if (k < 1 || k > 3) throw domain_error("radial_navier_disk: k in {1, 2, 3}");
    if (M % 2) ++M;
    RadialSolution sol;
    sol.R = R;
    sol.r.resize(M + 1);
    const double d = R / M;
    for (int i = 0; i <= M; ++i) sol.r[i] = i * d;

    std::vector<double> forcing(M + 1);
    for (int i = 0; i <= M; ++i) forcing[i] = f(sol.r[i]);

    for (int level = 0; level < k; ++level) {
        // g(s) = int_0^s f t^{N-1} dt, composite Simpson on pairs of cells
        std::vector<double> gcum(M + 1, 0.0);
        auto w = [&](int i) { return forcing[i] * std::pow(sol.r[i], N - 1.0); };
        for (int i = 2; i <= M; i += 2)
            gcum[i] = gcum[i - 2] + d / 3.0 * (w(i - 2) + 4.0 * w(i - 1) + w(i));
        for (int i = 1; i <= M; i += 2)  // odd nodes by a local 3-point rule
            gcum[i] = gcum[i - 1] + d / 12.0 * (5.0 * w(i - 1) + 8.0 * w(i) -
                                                w(std::min(i + 1, M)));
        // v(r) = int_r^R s^{1-N} g(s) ds, accumulated from the rim inwards
        std::vector<double> v(M + 1, 0.0);
        auto q = [&](int i) {
            return i == 0 ? 0.0 : gcum[i] * std::pow(sol.r[i], 1.0 - N);
        };  // g ~ r^N near 0, so q ~ r -> q(0) = 0
        for (int i = M - 2; i >= 0; i -= 2)
            v[i] = v[i + 2] + d / 3.0 * (q(i) + 4.0 * q(i + 1) + q(i + 2));
        for (int i = M - 1; i >= 0; i -= 2)
            v[i] = v[i + 1] + d / 12.0 * (5.0 * q(i + 1) + 8.0 * q(i) -
                                          q(std::max(i - 1, 0)));
        sol.levels.push_back(v);
        forcing = std::move(v);
    }
    return sol;
}

double RadialSolution::eval(int level, double radius) const {
    const auto& v = levels[level];
    if (radius <= 0.0) return v.front();
    if (radius >= R) return v.back();
    const double d = r[1] - r[0];
    const int i = std::min(static_cast<int>(radius / d), static_cast<int>(v.size()) - 2);
    const double t = (radius - r[i]) / d;
    return (1.0 - t) * v[i] + t * v[i + 1];
}

TalentiReport talenti_check(const Field2D& f, int k) {
    const auto& g = *f.grid;
    TalentiReport rep;
    rep.h = g.h;

    auto levels_u = navier_cascade(f, k);
    auto fstar = schwarz_2d(f);
    rep.abs_forcing = true;
    const double R = std::sqrt(g.area() / pi);
    auto sol = radial_navier_disk([&](double r) { return fstar(r); }, R, k, 2);

    double vinf = 0.0;
    for (double v : sol.levels.back()) vinf = std::max(vinf, v);
    rep.tol_grid = 5.0 * g.h * (vinf + 1.0);

    for (int j = 1; j <= k; ++j) {  // u level index: levels_u[j] solves (-Delta)^j . = f-ish
        auto ustar = schwarz_2d(levels_u[j]);
        double worst = -1e300;
        for (size_t idx = 0; idx < ustar.radii.size(); ++idx) {
            const double rho = idx == 0 ? 0.5 * ustar.radii[0]
                                        : 0.5 * (ustar.radii[idx - 1] + ustar.radii[idx]);
            worst = std::max(worst, ustar.values[idx] - sol.eval(j - 1, rho));
        }
        rep.level_violation.push_back(worst);
        rep.max_violation = std::max(rep.max_violation, worst);
        if (j == k) {
            rep.radii = ustar.radii;
            rep.u_star = ustar.values;
            rep.v.resize(ustar.radii.size());
            for (size_t idx = 0; idx < ustar.radii.size(); ++idx)
                rep.v[idx] = sol.eval(j - 1, ustar.radii[idx]);
        }
    }
    rep.pass = rep.max_violation <= rep.tol_grid;
    return rep;
}

}
