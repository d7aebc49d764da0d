#include "dtnlab/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace dtnlab {

namespace {

// Leading coefficient (x/2)^m / m!, built incrementally to avoid overflow.
double leading_term(int m, double half_x) {
  double t = 1.0;
  for (int i = 1; i <= m; ++i) t *= half_x / double(i);
  return t;
}

}  // namespace

double bessel_j_series(int m, double x) {
  if (m < 0) throw std::invalid_argument("bessel_j_series: order must be >= 0");
  const double half_x = 0.5 * x;
  const double q = half_x * half_x;
  double term = leading_term(m, half_x);
  double sum = term;
  for (int k = 1; k <= 200; ++k) {
    term *= -q / (double(k) * double(k + m));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300) && k > m / 2 + 4) break;
  }
  return sum;
}

double bessel_j_prime_series(int m, double x) {
  if (m < 0) throw std::invalid_argument("bessel_j_prime_series: order must be >= 0");
  // d/dx sum_k (-1)^k (x/2)^{m+2k} / (k! (k+m)!)
  //      = sum_k (-1)^k (m+2k) (x/2)^{m+2k-1} / (2 k! (k+m)!)
  const double half_x = 0.5 * x;
  const double q = half_x * half_x;
  if (m == 0 && x == 0.0) return 0.0;
  double base = leading_term(m, half_x);  // (x/2)^m / m!
  double sum = 0.0;
  double coeff = base;
  for (int k = 0; k <= 200; ++k) {
    double term;
    if (m + 2 * k == 0) {
      term = 0.0;
    } else {
      term = coeff * double(m + 2 * k) / (2.0 * half_x);
    }
    sum += term;
    const double next = -coeff * q / (double(k + 1) * double(k + 1 + m));
    if (std::abs(next) < 1e-18 * (std::abs(sum) + 1e-300) && k > m / 2 + 4) break;
    coeff = next;
  }
  return sum;
}

double first_bessel_j0_zero() {
  double x = 2.4;
  for (int it = 0; it < 60; ++it) {
    const double f = bessel_j_series(0, x);
    const double fp = bessel_j_prime_series(0, x);
    const double step = f / fp;
    x -= step;
    if (std::abs(step) < 1e-15 * x) break;
  }
  return x;
}

double first_dirichlet_eigenvalue_disk() {
  const double z = first_bessel_j0_zero();
  return z * z;
}

double constant_coefficient_dtn(int m, double c) {
  if (c <= 0.0)
    throw std::invalid_argument("constant_coefficient_dtn: requires c > 0");
  const double k = std::sqrt(c);
  const double jm = bessel_j_series(m, k);
  if (jm == 0.0)
    throw std::runtime_error("constant_coefficient_dtn: J_m vanishes at sqrt(c)");
  return k * bessel_j_prime_series(m, k) / jm;
}

}  // namespace dtnlab
