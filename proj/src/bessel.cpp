#include "ineqforge/bessel.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ineqforge/errors.hpp"
#include "ineqforge/quadrule.hpp"

namespace ineq::transforms {

namespace {

constexpr double pi = std::numbers::pi;

double series_j(double nu, double x) {
    const double q = 0.25 * x * x;
    double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
    double sum = term;
    for (int k = 0; k < 300; ++k) {
        term *= -q / ((k + 1.0) * (nu + k + 1.0));
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum) + 1e-300) break;
    }
    return sum;
}

// Hankel expansion J_nu ~ sqrt(2/(pi x)) (P cos(chi) - Q sin(chi)).
double asymptotic_j(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double c = 1.0, p = 1.0, q = 0.0, prev = 1e308;
    int sign_p = -1, sign_q = 1;
    for (int k = 1; k <= 30; ++k) {
        const double f = 2.0 * k - 1.0;
        c *= (mu - f * f) / (8.0 * x * k);
        if (std::fabs(c) > prev) break;  // divergence point of the series
        prev = std::fabs(c);
        if (k % 2 == 1) {
            q += sign_q * c;
            sign_q = -sign_q;
        } else {
            p += sign_p * c;
            sign_p = -sign_p;
        }
        if (std::fabs(c) < 1e-18) break;
    }
    const double chi = x - (0.5 * nu + 0.25) * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Backward recurrence with even-order sum normalization (integer order).
double miller_j(int n, double x) {
    int start = static_cast<int>(x + 14.0 * std::cbrt(x)) + n + 24;
    if (start % 2) ++start;
    double fp = 0.0, fc = 1e-290, norm = 0.0, target = 0.0;
    for (int k = start; k >= 1; --k) {
        const double fm = (2.0 * k / x) * fc - fp;
        fp = fc;
        fc = fm;
        if (k - 1 == n) target = fc;
        if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? fc : 2.0 * fc;
        if (std::fabs(fc) > 1e250) {
            fc *= 1e-250;
            fp *= 1e-250;
            norm *= 1e-250;
            target *= 1e-250;
        }
    }
    return target / norm;
}

// Spherical Bessel j_n; upward recurrence when x > n, Miller downward else.
double spherical_j(int n, double x) {
    const double j0 = std::sin(x) / x;
    if (n == 0) return j0;
    const double j1 = j0 / x - std::cos(x) / x;
    if (n == 1) return j1;
    if (x > n) {
        double jm = j0, jc = j1;
        for (int k = 1; k < n; ++k) {
            const double jn = (2.0 * k + 1.0) / x * jc - jm;
            jm = jc;
            jc = jn;
        }
        return jc;
    }
    int start = n + static_cast<int>(14.0 * std::cbrt(x)) + 24;
    double fp = 0.0, fc = 1e-290, target = 0.0;
    for (int k = start; k >= 1; --k) {
        const double fm = (2.0 * k + 1.0) / x * fc - fp;
        fp = fc;
        fc = fm;
        if (k - 1 == n) target = fc;
        if (std::fabs(fc) > 1e250) {
            fc *= 1e-250;
            fp *= 1e-250;
            target *= 1e-250;
        }
    }
    return target * (j0 / fc);
}

// J_nu(x) = (1/pi) int_0^pi cos(nu t - x sin t) dt
//         - sin(nu pi)/pi int_0^inf exp(-x sinh s - nu s) ds.
double integral_j(double nu, double x) {
    static const auto gl = quadrule::gauss_legendre(12);
    const int panels = std::max(24, static_cast<int>(x + nu));
    double osc = 0.0;
    const double hw = 0.5 * pi / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = (2 * p + 1) * hw;
        double acc = 0.0;
        for (size_t k = 0; k < gl.nodes.size(); ++k) {
            const double t = mid + hw * gl.nodes[k];
            acc += gl.weights[k] * std::cos(nu * t - x * std::sin(t));
        }
        osc += acc * hw;
    }
    double tailint = 0.0;
    const double s_max = std::asinh(720.0 / x);
    const double hs = s_max / 16.0;
    for (int p = 0; p < 16; ++p) {
        const double mid = (p + 0.5) * hs;
        double acc = 0.0;
        for (size_t k = 0; k < gl.nodes.size(); ++k) {
            const double s = mid + 0.5 * hs * gl.nodes[k];
            acc += gl.weights[k] * std::exp(-x * std::sinh(s) - nu * s);
        }
        tailint += acc * 0.5 * hs;
    }
    return (osc - std::sin(nu * pi) * tailint) / pi;
}

}  // namespace

double bessel_j(double nu, double x) {
    if (nu < 0.0 || nu > bessel_order_ceiling)
        throw domain_error("bessel_j: unsupported order (0 <= nu <= 25)");
    if (x < 0.0) throw domain_error("bessel_j: x >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= 12.0) return series_j(nu, x);
    if (x >= std::max(30.0, 1.6 * nu * nu)) return asymptotic_j(nu, x);

    const double nr = std::round(nu);
    if (std::fabs(nu - nr) < 1e-13) return miller_j(static_cast<int>(nr), x);
    const double hr = std::round(nu - 0.5);
    if (std::fabs(nu - 0.5 - hr) < 1e-13) {
        const int n = static_cast<int>(hr);
        return std::sqrt(2.0 * x / pi) * spherical_j(n, x);
    }
    return integral_j(nu, x);
}

}
