#pragma once

#include <complex>
#include <stdexcept>
#include <Eigen/Dense>

namespace dtnlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Basis label (m, j): degree m >= 0, order j in [1, p_m].
struct HarmonicIndex {
  int m = 0;
  int j = 1;
  bool operator==(const HarmonicIndex&) const = default;
};

/// Number of independent harmonics of degree m on the (d-1)-sphere,
/// p_m = binom(m+d-1, d-1) - binom(m+d-3, d-1), with p_0 = 1.
/// Throws for d < 2.
long harmonic_count(int d, int m);

/// Dimension of the truncated basis {Y_mj : m <= M} for d = 2, i.e. 2M + 1.
int basis_size(int M);

/// Flat position of (m, j) in the d = 2 basis ordering
/// (0,1), (1,1), (1,2), (2,1), (2,2), ...
int flat_index(HarmonicIndex idx);

/// Inverse of flat_index.
HarmonicIndex index_at(int flat);

/// Real orthonormal circular harmonics on the unit circle:
///   Y_01 = (2*pi)^{-1/2},  Y_m1 = cos(m*phi)/sqrt(pi),  Y_m2 = sin(m*phi)/sqrt(pi).
double eval_harmonic(HarmonicIndex idx, double phi);

/// Coefficient vector a_mj over the truncated basis m <= M.
struct CoeffVector {
  int M = 0;
  CVector a;  // length basis_size(M)

  static CoeffVector zero(int M_) {
    return {M_, CVector::Zero(basis_size(M_))};
  }
};

/// Square matrix a_mjnk over the truncated basis, stored so that
/// a(row = flat(n,k), col = flat(m,j)) = <A Y_mj, Y_nk>.
struct HarmonicMatrix {
  int M = 0;
  int d = 2;
  CMatrix a;

  static HarmonicMatrix zero(int M_) {
    const int n = basis_size(M_);
    return {M_, 2, CMatrix::Zero(n, n)};
  }
};

/// Weighted l2 norm (sum over (m,j) of (1+m)^{2s} |a_mj|^2)^{1/2}.
double sobolev_norm(const CoeffVector& v, double s);

/// sup over stored 4-tuples of (1 + max{m,n})^{d/2 - s} |a_mjnk|.
double x_s_norm(const HarmonicMatrix& A, double s);

/// Exact operator norm of the truncated matrix from H^s to H^{-s}:
/// the largest singular value of D A D with D = diag((1+m)^{-s}).
double op_norm_s_to_minus_s(const HarmonicMatrix& A, double s);

/// 4*sqrt(2), the factor relating the X_s entry norm to the H^s -> H^{-s}
/// operator norm for s >= d/2.
inline constexpr double kXsOperatorFactor = 5.656854249492380195206754896838;

}  // namespace dtnlab
