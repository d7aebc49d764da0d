#pragma once

namespace dtnlab {

/// Bessel functions of the first kind by the ascending power series.
/// Intended for the moderate arguments used in this project (x up to ~40,
/// m up to ~60); kept deliberately independent of the ODE solvers so it can
/// serve as a cross-check.
double bessel_j_series(int m, double x);

/// Derivative J_m'(x), term-by-term derivative of the same series.
double bessel_j_prime_series(int m, double x);

/// First positive zero of J_0, by Newton iteration on the series.
double first_bessel_j0_zero();

/// First Dirichlet eigenvalue of -Laplace on the unit disk, j_{0,1}^2.
double first_dirichlet_eigenvalue_disk();

/// Boundary derivative u'(1) of the regular solution of
/// u'' + u'/r - m^2/r^2 u + c u = 0 with u(1) = 1, i.e.
/// sqrt(c) J_m'(sqrt(c)) / J_m(sqrt(c)) for c > 0.
double constant_coefficient_dtn(int m, double c);

}  // namespace dtnlab
