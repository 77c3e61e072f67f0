#pragma once

namespace ineq::transforms {

/// Configured ceiling for the order; series/recurrence/asymptotic switching
/// is validated only up to here.
inline constexpr double bessel_order_ceiling = 25.0;

/// Bessel function of the first kind J_nu(x), nu in [0, 25], x in [0, 1e4].
///
/// Power series for x <= 12; Hankel asymptotic expansion for large x;
/// in between, Miller-normalized backward recurrence for integer orders,
/// the spherical-Bessel route for half-integer orders, and the Bessel
/// integral representation for generic real orders.
double bessel_j(double nu, double x);

}
