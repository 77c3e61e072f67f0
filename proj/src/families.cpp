#include "ineqforge/families.hpp"

#include <cmath>
#include <random>

#include "ineqforge/errors.hpp"

namespace ineq::verify {

namespace {

double bump_sigma(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// sum of log-space Gaussians evaluated at s = ln r
double log_bumps(double s, const std::vector<double>& p) {
    // p = [n, c1, mu1, sig1, c2, mu2, sig2, ...]
    const int nb = static_cast<int>(p[0]);
    double acc = 0.0;
    for (int j = 0; j < nb; ++j) {
        const double c = p[1 + 3 * j], mu = p[2 + 3 * j], sig = p[3 + 3 * j];
        const double t = (s - mu) / sig;
        acc += c * std::exp(-0.5 * t * t);
    }
    return acc;
}

}  // namespace

double smoothstep_cinf(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = bump_sigma(t), b = bump_sigma(1.0 - t);
    return a / (a + b);
}

Family gaussian_poly_family(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    Family fam;
    fam.name = "gaussians";
    for (int i = 0; i < count; ++i) {
        const double a0 = 0.5 + 1.5 * u01(rng);
        const double a2 = -1.0 + 2.0 * u01(rng);
        const double b = 0.5 + 1.5 * u01(rng);
        fam.params.push_back({a0, a2, b});
        fam.labels.push_back("gaussian_poly_" + std::to_string(i));
    }
    fam.make = [](const GridPtr& g, const std::vector<double>& p) {
        return RadialProfile::from_function(g, [&](double r) {
            return (p[0] + p[1] * r * r) * std::exp(-p[2] * r * r);
        });
    };
    return fam;
}

Family cauchy_family(int N, int m, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    Family fam;
    fam.name = "cauchy";
    const double a_min = 0.25 * N + 1.5;  // decay surrogate for the weighted forms
    (void)m;
    for (int i = 0; i < count; ++i) {
        const double a = a_min + 2.5 * u01(rng);
        const double s = 0.5 + 1.5 * u01(rng);
        fam.params.push_back({a, s});
        fam.labels.push_back("cauchy_" + std::to_string(i));
    }
    fam.make = [](const GridPtr& g, const std::vector<double>& p) {
        return RadialProfile::from_function(g, [&](double r) {
            const double q = r / p[1];
            return std::pow(1.0 + q * q, -p[0]);
        });
    };
    return fam;
}

Family cutoff_power_family(int N, int m, const std::vector<double>& eps_list,
                           double s_lo, double s_hi) {
    Family fam;
    fam.name = "cutoff";
    const double beta = 0.5 * (N - 4.0 * m);
    for (double eps : eps_list) {
        // plateau grows like 1/eps, capped by the admissible log-window
        const double span = s_hi - s_lo;
        const double want = std::min(2.2 / eps, span);
        const double w = std::min(0.3 * want, 0.25 * span);
        const double hi = s_hi;
        const double lo = s_hi - want;
        fam.params.push_back({eps, lo, hi, w, beta});
        fam.labels.push_back("cutoff_eps_" + std::to_string(eps));
    }
    fam.make = [](const GridPtr& g, const std::vector<double>& p) {
        const double eps = p[0], lo = p[1], hi = p[2], w = p[3], beta = p[4];
        return RadialProfile::from_function(g, [&](double r) {
            const double s = std::log(r);
            const double chi =
                smoothstep_cinf((s - lo) / w) * smoothstep_cinf((hi - s) / w);
            if (chi == 0.0) return 0.0;
            return std::exp((eps - beta) * (s - hi)) * chi;  // normalized at s_hi
        });
    };
    return fam;
}

Family bump_family(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    Family fam;
    fam.name = "bumps";
    for (int i = 0; i < count; ++i) {
        const int nb = 2 + static_cast<int>(u01(rng) * 3.0);
        std::vector<double> p{static_cast<double>(nb)};
        for (int j = 0; j < nb; ++j) {
            p.push_back(0.3 + 0.7 * u01(rng));   // amplitude
            p.push_back(-2.5 + 5.0 * u01(rng));  // center in s
            p.push_back(0.5 + 0.7 * u01(rng));   // width in s
        }
        fam.params.push_back(std::move(p));
        fam.labels.push_back("bumps_" + std::to_string(i));
    }
    fam.make = [](const GridPtr& g, const std::vector<double>& p) {
        return RadialProfile::from_function(
            g, [&](double r) { return log_bumps(std::log(r), p); });
    };
    return fam;
}

Family dilation_orbit(const std::vector<double>& lambdas) {
    Family fam;
    fam.name = "dilation";
    for (double l : lambdas) {
        fam.params.push_back({l});
        fam.labels.push_back("dilation_" + std::to_string(l));
    }
    fam.make = [](const GridPtr& g, const std::vector<double>& p) {
        return RadialProfile::from_function(g, [&](double r) {
            const double t = p[0] * r;
            return (1.0 + 0.25 * t * t) * std::exp(-t * t);
        });
    };
    return fam;
}

Family concentration_family(int N, int m, const std::vector<double>& widths, double s0) {
    Family fam;
    fam.name = "concentration";
    const double beta = 0.5 * (N - 4.0 * m);
    for (double T : widths) {
        fam.params.push_back({T, s0, beta});
        fam.labels.push_back("width_" + std::to_string(T));
    }
    fam.make = [](const GridPtr& g, const std::vector<double>& p) {
        const double T = p[0], s0 = p[1], beta = p[2];
        return RadialProfile::from_function(g, [&](double r) {
            const double s = std::log(r);
            const double t = (s - s0) / T;
            return std::exp(-beta * (s - s0)) * std::exp(-0.5 * t * t);
        });
    };
    return fam;
}

Family nonincreasing_family(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    Family fam;
    fam.name = "nonincreasing";
    for (int i = 0; i < count; ++i) {
        const double b = 0.4 + 2.0 * u01(rng);
        const double a = 2.5 + 2.0 * u01(rng);
        const double mix = u01(rng);
        fam.params.push_back({b, a, mix});
        fam.labels.push_back("noninc_" + std::to_string(i));
    }
    fam.make = [](const GridPtr& g, const std::vector<double>& p) {
        return RadialProfile::from_function(g, [&](double r) {
            return p[2] * std::exp(-p[0] * r * r) +
                   (1.0 - p[2]) * std::pow(1.0 + r * r, -p[1]);
        });
    };
    return fam;
}

Family builtin_family(const std::string& name, int N, int m, int count,
                      std::uint64_t seed) {
    if (name == "gaussians") return gaussian_poly_family(count, seed);
    if (name == "cauchy") return cauchy_family(N, m, count, seed);
    if (name == "bumps") return bump_family(count, seed);
    if (name == "nonincreasing") return nonincreasing_family(count, seed);
    if (name == "dilation") {
        std::vector<double> l;
        for (int i = 0; i < std::max(count, 2); ++i)
            l.push_back(std::pow(2.0, i - count / 2));
        return dilation_orbit(l);
    }
    if (name == "cutoff") {
        std::vector<double> eps{0.4, 0.2, 0.1, 0.05};
        return cutoff_power_family(N, m, eps, -8.0, 8.0);
    }
    throw domain_error("unknown family: " + name);
}

}
