#include "ineqforge/constants.hpp"

#include <cmath>

#include "ineqforge/calculus.hpp"
#include "ineqforge/errors.hpp"

namespace ineq::constants {

double c1(int N, int m) {
    Dimension{N, m}.require_even();
    double prod = 1.0;
    for (int i = 0; i < m; ++i)
        prod *= static_cast<double>(N + 4 * i) * (N - 4 - 4 * i) / 4.0;
    return prod * prod;
}

double c2(int N, int m) {
    Dimension{N, m}.require_odd();
    double prod = 1.0;
    for (int i = 0; i < m; ++i)
        prod *= static_cast<double>(N + 2 + 4 * i) * (N - 6 - 4 * i) / 4.0;
    const double head = 0.5 * (N - 2);
    return head * head * prod * prod;
}

double gradient_chain_even(int N, int m) {
    const double d = N - 4 * m;
    return 4.0 * c1(N, m) / (d * d);
}

double gradient_chain_odd(int N, int m) {
    const double d = N - 4 * m;
    return 4.0 * c2(N, m) / (d * d);
}

double second_order_rellich(int N) {
    if (N <= 4) throw domain_error("second_order_rellich: N > 4");
    const double a = static_cast<double>(N) * (N - 4);
    return a * a / 16.0;
}

double lorentz_hardy(int N, double p, double q) {
    if (!(1.0 <= q && q <= p && p < N))
        throw domain_error("lorentz_hardy: require 1 <= q <= p < N");
    return std::pow(ball_volume(N), q / p - 1.0) * std::pow((N - p) / p, q);
}

}
