#include "dtnlab/harmonics.hpp"

#include <cmath>

namespace dtnlab {

namespace {

// binom(n, k) with the convention binom(n, k) = 0 when n < k, exact in
// double up to the sizes used here (d <= ~10, m <= ~100).
double binom(long n, long k) {
  if (n < k || n < 0 || k < 0) return 0.0;
  double r = 1.0;
  for (long i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
  return r;
}

}  // namespace

long harmonic_count(int d, int m) {
  if (d < 2) throw std::invalid_argument("harmonic_count: dimension must be >= 2");
  if (m < 0) throw std::invalid_argument("harmonic_count: degree must be >= 0");
  if (m == 0) return 1;
  const double p = binom(m + d - 1, d - 1) - binom(m + d - 3, d - 1);
  return static_cast<long>(std::llround(p));
}

int basis_size(int M) {
  if (M < 0) throw std::invalid_argument("basis_size: M must be >= 0");
  return 2 * M + 1;
}

int flat_index(HarmonicIndex idx) {
  if (idx.m < 0 || idx.j < 1 || idx.j > harmonic_count(2, idx.m))
    throw std::invalid_argument("flat_index: index out of range");
  return idx.m == 0 ? 0 : 2 * idx.m - 2 + idx.j;
}

HarmonicIndex index_at(int flat) {
  if (flat < 0) throw std::invalid_argument("index_at: negative position");
  if (flat == 0) return {0, 1};
  return {(flat + 1) / 2, (flat + 1) % 2 + 1};
}

double eval_harmonic(HarmonicIndex idx, double phi) {
  static const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);
  static const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  if (idx.m < 0 || idx.j < 1 || idx.j > harmonic_count(2, idx.m))
    throw std::invalid_argument("eval_harmonic: index out of range");
  if (idx.m == 0) return inv_sqrt_2pi;
  return idx.j == 1 ? inv_sqrt_pi * std::cos(idx.m * phi)
                    : inv_sqrt_pi * std::sin(idx.m * phi);
}

double sobolev_norm(const CoeffVector& v, double s) {
  double sum = 0.0;
  for (int f = 0; f < v.a.size(); ++f) {
    const int m = index_at(f).m;
    sum += std::pow(1.0 + m, 2.0 * s) * std::norm(v.a(f));
  }
  return std::sqrt(sum);
}

double x_s_norm(const HarmonicMatrix& A, double s) {
  double sup = 0.0;
  for (int row = 0; row < A.a.rows(); ++row) {
    const int n = index_at(row).m;
    for (int col = 0; col < A.a.cols(); ++col) {
      const int m = index_at(col).m;
      const double w = std::pow(1.0 + std::max(m, n), 0.5 * A.d - s);
      sup = std::max(sup, w * std::abs(A.a(row, col)));
    }
  }
  return sup;
}

double op_norm_s_to_minus_s(const HarmonicMatrix& A, double s) {
  const int n = static_cast<int>(A.a.rows());
  Eigen::VectorXd w(n);
  for (int f = 0; f < n; ++f) w(f) = std::pow(1.0 + index_at(f).m, -s);
  const CMatrix B = w.asDiagonal() * A.a * w.asDiagonal();
  Eigen::JacobiSVD<CMatrix> svd(B);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("op_norm_s_to_minus_s: SVD failed");
  return n > 0 ? svd.singularValues()(0) : 0.0;
}

}  // namespace dtnlab
