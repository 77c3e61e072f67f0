#include "ineqforge/quadrule.hpp"

#include <cmath>
#include <stdexcept>

namespace ineq::quadrule {

std::vector<double> fd_weights(double z, const std::vector<double>& x, int m) {
    // B. Fornberg, "Generation of finite difference formulas on arbitrarily
    // spaced grids", Math. Comp. 51 (1988). Returns the row for derivative m.
    const int n = static_cast<int>(x.size()) - 1;
    if (n < m) throw std::invalid_argument("fd_weights: too few nodes for derivative order");
    std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = c[i][m];
    return w;
}

const std::vector<double>& gregory_boundary(int order) {
    // Endpoint-corrected trapezoid weights matching the Euler-Maclaurin series
    // through the stated order; derived once in exact rational arithmetic.
    static const std::vector<double> w8 = {
        1070017.0 / 3628800.0, 5537111.0 / 3628800.0, 103613.0 / 403200.0,
        261115.0 / 145152.0,   298951.0 / 725760.0,   515677.0 / 403200.0,
        3349879.0 / 3628800.0, 3662753.0 / 3628800.0};
    static const std::vector<double> w10 = {
        26842253.0 / 95800320.0,   263465639.0 / 159667200.0,
        -4157443.0 / 19958400.0,   28050551.0 / 9979200.0,
        -79480853.0 / 79833600.0,  41129647.0 / 15966720.0,
        1318591.0 / 9979200.0,     26280973.0 / 19958400.0,
        148655719.0 / 159667200.0, 482252033.0 / 479001600.0};
    if (order == 8) return w8;
    if (order == 10) return w10;
    throw std::invalid_argument("gregory_boundary: unsupported order");
}

namespace {

// Symmetric tridiagonal eigensolver (implicit QL) accumulating first row of
// eigenvectors; d holds the diagonal, e the off-diagonal (e[0] unused).
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z0) {
    const int n = static_cast<int>(d.size());
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (++iter == 50) throw std::runtime_error("tridiag_ql: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z0[i + 1];
                    z0[i + 1] = s * z0[i] + c * f;
                    z0[i] = c * z0[i] - s * f;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    // sort ascending by node
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j)
            if (d[j] < d[k]) k = j;
        if (k != i) {
            std::swap(d[i], d[k]);
            std::swap(z0[i], z0[k]);
        }
    }
}

// Golub-Welsch from three-term recurrence coefficients: diagonal a_k,
// off-diagonal b_k (>0), zeroth moment mu0.
GaussRule golub_welsch(std::vector<double> a, std::vector<double> b, double mu0) {
    const int n = static_cast<int>(a.size());
    std::vector<double> e(n, 0.0), z0(n, 0.0);
    for (int i = 1; i < n; ++i) e[i] = b[i - 1];
    z0[0] = 1.0;
    tridiag_ql(a, e, z0);
    GaussRule rule;
    rule.nodes = a;
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) rule.weights[i] = mu0 * z0[i] * z0[i];
    return rule;
}

}  // namespace

GaussRule gauss_legendre(int n) {
    std::vector<double> a(n, 0.0), b(n - 1);
    for (int k = 1; k < n; ++k) b[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    return golub_welsch(a, b, 2.0);
}

GaussRule gauss_jacobi(int n, double alpha, double beta) {
    std::vector<double> a(n), b(n > 1 ? n - 1 : 0);
    const double ab = alpha + beta;
    a[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double q = 2.0 * k + ab;
        a[k] = (beta * beta - alpha * alpha) / (q * (q + 2.0));
        double b2;
        if (k == 1)
            // the (k+ab) numerator factor cancels the (q-1) denominator factor
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                 (q * q * (q + 1.0) * (q - 1.0));
        b[k - 1] = std::sqrt(b2);
    }
    const double mu0 = std::pow(2.0, ab + 1.0) *
                       std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                                std::lgamma(ab + 2.0));
    return golub_welsch(a, b, mu0);
}

GaussRule gauss_laguerre(int n, double alpha) {
    std::vector<double> a(n), b(n > 1 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) {
        a[k] = 2.0 * k + alpha + 1.0;
        if (k + 1 < n) b[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
    }
    return golub_welsch(a, b, std::exp(std::lgamma(alpha + 1.0)));
}

std::vector<std::vector<double>> stirling_first(int kmax) {
    std::vector<std::vector<double>> s(kmax + 1, std::vector<double>(kmax + 1, 0.0));
    s[0][0] = 1.0;
    for (int k = 0; k < kmax; ++k)
        for (int j = 0; j <= k; ++j) {
            if (j + 1 <= kmax) s[k + 1][j + 1] += s[k][j];
            s[k + 1][j] -= k * s[k][j];
        }
    return s;
}

}
