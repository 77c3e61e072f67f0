#include "ineqforge/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ineqforge/errors.hpp"
#include "ineqforge/quadrule.hpp"

namespace ineq {

namespace {

// Clenshaw-Curtis weights on [-1,1] for n+1 Chebyshev-Lobatto points,
// returned in the same descending-x order as theta = pi*j/n.
std::vector<double> clenshaw_curtis(int n) {
    std::vector<double> w(n + 1, 0.0);
    const double pi = std::numbers::pi;
    if (n % 2 == 0) {
        w[0] = w[n] = 1.0 / (n * n - 1.0);
        for (int j = 1; j < n; ++j) {
            double v = 1.0;
            for (int k = 1; k <= n / 2 - 1; ++k)
                v -= 2.0 * std::cos(2.0 * k * pi * j / n) / (4.0 * k * k - 1.0);
            v -= std::cos(pi * j) / (n * n - 1.0);
            w[j] = 2.0 * v / n;
        }
    } else {
        w[0] = w[n] = 1.0 / (n * n);
        for (int j = 1; j < n; ++j) {
            double v = 1.0;
            for (int k = 1; k <= (n - 1) / 2; ++k)
                v -= 2.0 * std::cos(2.0 * k * pi * j / n) / (4.0 * k * k - 1.0);
            w[j] = 2.0 * v / n;
        }
    }
    return w;
}

}  // namespace

std::shared_ptr<const RadialGrid> RadialGrid::make(GridKind kind, double r_min,
                                                   double r_max, int n) {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw domain_error("RadialGrid: require 0 < r_min < r_max");
    if (n < 16) throw domain_error("RadialGrid: require n >= 16");

    auto g = std::shared_ptr<RadialGrid>(new RadialGrid());
    g->kind_ = kind;
    g->r_min_ = r_min;
    g->r_max_ = r_max;
    g->r_.resize(n);
    g->s_.resize(n);
    g->wr_.resize(n);
    g->ws_.resize(n);
    const double s0 = std::log(r_min), s1 = std::log(r_max);

    if (kind == GridKind::log_uniform) {
        const double h = (s1 - s0) / (n - 1);
        g->hs_ = h;
        for (int i = 0; i < n; ++i) {
            g->s_[i] = s0 + i * h;
            g->r_[i] = std::exp(g->s_[i]);
        }
        const auto& b = quadrule::gregory_boundary(n >= 24 ? 10 : 8);
        const int m = static_cast<int>(b.size());
        for (int i = 0; i < n; ++i) {
            double w = 1.0;
            if (i < m) w = b[i];
            else if (i >= n - m) w = b[n - 1 - i];
            g->ws_[i] = w * h;
            g->wr_[i] = g->ws_[i] * g->r_[i];
        }
        // cache FD rows: order-8+ centered stencils, one-sided at the edges
        g->stencils_.resize(max_derivative_order + 1);
        for (int j = 1; j <= max_derivative_order; ++j) {
            auto& st = g->stencils_[j];
            const int radius = (j + 1) / 2 + 4;
            st.width = 2 * radius + 1;
            if (st.width > n) throw domain_error("RadialGrid: grid too small for FD stencils");
            std::vector<double> offs(st.width);
            for (int k = 0; k < st.width; ++k) offs[k] = k;
            const double scale = std::pow(h, -j);
            auto row = [&](double z) {
                auto wts = quadrule::fd_weights(z, offs, j);
                for (auto& x : wts) x *= scale;
                return wts;
            };
            st.interior = row(radius);
            st.left.resize(radius);
            st.right.resize(radius);
            for (int p = 0; p < radius; ++p) {
                st.left[p] = row(p);
                st.right[p] = row(st.width - 1 - p);
            }
        }
    } else {
        const double pi = std::numbers::pi;
        const int nc = n - 1;
        // ascending s: flip the usual descending cos ordering
        for (int i = 0; i < n; ++i) {
            const double theta = pi * (nc - i) / nc;
            const double x = std::cos(theta);
            g->s_[i] = 0.5 * (s0 + s1) + 0.5 * (s1 - s0) * x;
            g->r_[i] = std::exp(g->s_[i]);
        }
        auto cc = clenshaw_curtis(nc);
        for (int i = 0; i < n; ++i) {
            g->ws_[i] = cc[nc - i] * 0.5 * (s1 - s0);
            g->wr_[i] = g->ws_[i] * g->r_[i];
        }
        // barycentric weights and differentiation matrix on the s nodes
        g->bary_w_.resize(n);
        for (int i = 0; i < n; ++i) {
            double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            if ((nc - i) % 2 != 0) w = -w;
            g->bary_w_[i] = w;
        }
        g->cheb_d_.assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) {
            double diag = 0.0;
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const double d = (g->bary_w_[j] / g->bary_w_[i]) / (g->s_[i] - g->s_[j]);
                g->cheb_d_[static_cast<size_t>(i) * n + j] = d;
                diag -= d;
            }
            g->cheb_d_[static_cast<size_t>(i) * n + i] = diag;
        }
    }
    return g;
}

std::vector<double> RadialGrid::s_derivative(const std::vector<double>& v, int j) const {
    if (j == 0) return v;
    if (j < 0 || j > max_derivative_order)
        throw domain_error("s_derivative: unsupported derivative order");
    const int n = size();
    std::vector<double> out(n, 0.0);
    if (kind_ == GridKind::log_uniform) {
        const auto& st = stencils_[j];
        const int radius = (st.width - 1) / 2;
        for (int i = 0; i < n; ++i) {
            const std::vector<double>* row;
            int start;
            if (i < radius) {
                row = &st.left[i];
                start = 0;
            } else if (i >= n - radius) {
                row = &st.right[n - 1 - i];
                start = n - st.width;
            } else {
                row = &st.interior;
                start = i - radius;
            }
            double acc = 0.0;
            for (int k = 0; k < st.width; ++k) acc += (*row)[k] * v[start + k];
            out[i] = acc;
        }
        return out;
    }
    // chebyshev: repeated application of the first-derivative matrix
    std::vector<double> cur = v;
    for (int pass = 0; pass < j; ++pass) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            const double* row = &cheb_d_[static_cast<size_t>(i) * n];
            for (int k = 0; k < n; ++k) acc += row[k] * cur[k];
            out[i] = acc;
        }
        std::swap(cur, out);
    }
    return cur;
}

double RadialGrid::interp_s(const std::vector<double>& v, double s) const {
    const int n = size();
    if (s <= s_.front()) return v.front();
    if (s >= s_.back()) return v.back();
    if (kind_ == GridKind::log_uniform) {
        const int order = 8;  // 8-point local Lagrange
        int i0 = static_cast<int>(std::floor((s - s_.front()) / hs_)) - order / 2 + 1;
        i0 = std::clamp(i0, 0, n - order);
        double acc = 0.0;
        for (int k = 0; k < order; ++k) {
            double lk = 1.0;
            for (int m = 0; m < order; ++m) {
                if (m == k) continue;
                lk *= (s - s_[i0 + m]) / (s_[i0 + k] - s_[i0 + m]);
            }
            acc += lk * v[i0 + k];
        }
        return acc;
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = s - s_[i];
        if (d == 0.0) return v[i];
        const double t = bary_w_[i] / d;
        num += t * v[i];
        den += t;
    }
    return num / den;
}

GridPtr make_grid(GridKind kind, double r_min, double r_max, int n) {
    return RadialGrid::make(kind, r_min, r_max, n);
}

GridPtr default_grid() {
    static GridPtr g = make_grid(GridKind::log_uniform, 1e-4, 1e4, 2048);
    return g;
}

RadialProfile::RadialProfile(GridPtr g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (!grid || static_cast<int>(values.size()) != grid->size())
        throw domain_error("RadialProfile: size mismatch");
    for (double x : values)
        if (!std::isfinite(x)) throw numeric_error("RadialProfile: non-finite sample");
}

RadialProfile RadialProfile::from_function(GridPtr g, const std::function<double(double)>& f) {
    std::vector<double> v(g->size());
    for (int i = 0; i < g->size(); ++i) v[i] = f(g->nodes()[i]);
    return RadialProfile(std::move(g), std::move(v));
}

RadialProfile RadialProfile::from_file(const std::string& path, bool* resampled) {
    std::ifstream in(path);
    if (!in) throw domain_error("from_file: cannot open " + path);
    std::vector<double> r, v;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        double a, b;
        if (ls >> a >> b) {
            r.push_back(a);
            v.push_back(b);
        }
    }
    if (r.size() < 16) throw domain_error("from_file: need at least 16 rows");
    for (size_t i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1])) throw domain_error("from_file: radii must ascend");

    const int n = static_cast<int>(r.size());
    bool geometric = true;
    const double q0 = r[1] / r[0];
    for (int i = 1; i + 1 < n; ++i)
        if (std::fabs(r[i + 1] / r[i] / q0 - 1.0) > 1e-9) {
            geometric = false;
            break;
        }
    auto g = make_grid(GridKind::log_uniform, r.front(), r.back(), n);
    if (resampled) *resampled = !geometric;
    if (geometric) return RadialProfile(g, std::move(v));

    // resample by local Lagrange interpolation in s
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) s[i] = std::log(r[i]);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double sq = g->log_nodes()[i];
        auto it = std::lower_bound(s.begin(), s.end(), sq);
        int j = std::clamp(static_cast<int>(it - s.begin()) - 2, 0, n - 4);
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) {
            double lk = 1.0;
            for (int m = 0; m < 4; ++m)
                if (m != k) lk *= (sq - s[j + m]) / (s[j + k] - s[j + m]);
            acc += lk * v[j + k];
        }
        out[i] = acc;
    }
    return RadialProfile(g, std::move(out));
}

double RadialProfile::operator()(double r) const {
    return grid->interp_s(values, std::log(r));
}

}
