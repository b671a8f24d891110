#pragma once

// Exact determinants of binomial matrices and related product formulas.

#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "hdp/numeric.hpp"

namespace hdp {

using RationalMatrix = Eigen::Matrix<BigRational, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

/// Fraction-free (Bareiss) determinant over an exact scalar type. Every
/// division in the recurrence is exact for integral domains.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = Scalar((m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev);
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return Scalar(sign * m(n - 1, n - 1));
}

BigRational det_exact(const RationalMatrix& m);

/// Ordinary binomial for integer arguments; 0 when k < 0 or 0 <= n < k.
BigInt binomial(const BigInt& n, long k);
/// prod_{i<k} (r - i) / k!.
BigRational rat_binomial(const BigRational& r, long k);
/// Rising factorial (x)_k = x (x+1) ... (x+k-1).
BigRational pochhammer(const BigRational& x, long k);

/// [C(n+h+1-i, n+1+j-2i)]_{i,j=1..n}.
IntegerMatrix det1_matrix(int n, int hat_c);
/// [C(n+h-i, n+j-2i) + 2 C(n+h-i, n+j-2i+1)].
IntegerMatrix det2_matrix(int n, int hat_c);
/// [C(n+h-i, n+j-2i) (n+2h-j+1)].
IntegerMatrix det3_matrix(int n, int hat_c);
/// [C(B L_i + A, L_i + j)] for rational A, B with integral B L_i + A.
RationalMatrix krattenthaler_matrix(const std::vector<long>& L, const BigRational& A, const BigRational& B);

/// 2^n det(det1_matrix).
BigInt det1(int n, int hat_c);
/// (det(det2_matrix), det(det3_matrix)).
std::pair<BigInt, BigInt> det2_det3(int n, int hat_c);

/// Closed-form product for det_{i,j} C(B L_i + A, L_i + j). Throws
/// std::domain_error when a factorial argument is not a non-negative integer.
BigRational krattenthaler_eval(const std::vector<long>& L, const BigRational& A, const BigRational& B);

/// The two parameterizations used for the QTCPP determinants.
struct KrattenthalerParams {
  std::vector<long> L;
  BigRational A;
  BigRational B;
};
KrattenthalerParams odd_height_params(int n, int hat_c);
KrattenthalerParams even_height_params(int n, int hat_c);

/// Symmetric plane partitions in the (n, n, c)-box by the product formula.
BigInt spp_product(int n, int c);

struct TcppSppReport {
  BigInt lhs;  // 2^{n-1} TCPP(n, n, 2c), by enumeration
  BigInt rhs;  // SPP(n-1, n-1, 2c+1), by the product formula
  bool holds() const { return lhs == rhs; }
};
TcppSppReport check_tcpp_spp_identity(int n, int c);

}  // namespace hdp
