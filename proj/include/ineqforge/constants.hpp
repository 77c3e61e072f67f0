#pragma once

namespace ineq::constants {

/// Sharp even-order Hardy-Rellich constant
///   C1(N, m) = ( prod_{i=0}^{m-1} (N+4i)(N-4-4i)/4 )^2,  N > 4m, m >= 1.
double c1(int N, int m);

/// Sharp odd-order constant
///   C2(N, m) = ((N-2)/2)^2 ( prod_{i=0}^{m-1} (N+2+4i)(N-6-4i)/4 )^2,
/// N > 4m + 2, m >= 0 (empty product is 1).
double c2(int N, int m);

/// Middle-link constants of the inequality chains: 4 C / (N-4m)^2.
double gradient_chain_even(int N, int m);
double gradient_chain_odd(int N, int m);

/// N^2 (N-4)^2 / 16; equals c1(N, 1).
double second_order_rellich(int N);

/// Sharp Lorentz-Hardy constant omega_N^{q/p-1} ((N-p)/p)^q with omega_N the
/// unit-ball volume. Requires 1 <= q <= p < N.
double lorentz_hardy(int N, double p, double q);

}
