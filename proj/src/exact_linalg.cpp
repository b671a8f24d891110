#include "hdp/exact_linalg.hpp"

#include <stdexcept>

#include "hdp/symmetry.hpp"

namespace hdp {

BigRational det_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return bareiss_determinant(m);
}

BigInt binomial(const BigInt& n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && n < k) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

BigRational rat_binomial(const BigRational& r, long k) {
  if (k < 0) throw std::invalid_argument("rat_binomial needs k >= 0");
  BigRational v = 1;
  for (long i = 0; i < k; ++i) v *= (r - i) / BigRational(i + 1);
  return v;
}

BigRational pochhammer(const BigRational& x, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer needs k >= 0");
  BigRational v = 1;
  for (long i = 0; i < k; ++i) v *= x + i;
  return v;
}

namespace {

template <class Entry>
IntegerMatrix build(int n, Entry entry) {
  if (n < 1) throw std::invalid_argument("matrix order must be positive");
  IntegerMatrix m(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = entry(i, j);
  return m;
}

void require_params(int n, int hat_c) {
  if (n < 1 || hat_c < 0) throw std::invalid_argument("need n >= 1 and hat_c >= 0");
}

BigInt factorial(const BigRational& x) {
  if (!is_integer(x) || x < 0) throw std::domain_error("factorial argument " + to_string(x) + " is not a non-negative integer");
  const BigInt n = numerator(x);
  BigInt v = 1;
  for (BigInt i = 2; i <= n; ++i) v *= i;
  return v;
}

}  // namespace

IntegerMatrix det1_matrix(int n, int hat_c) {
  require_params(n, hat_c);
  return build(n, [&](int i, int j) { return binomial(n + hat_c + 1 - i, n + 1 + j - 2 * i); });
}

IntegerMatrix det2_matrix(int n, int hat_c) {
  require_params(n, hat_c);
  return build(n, [&](int i, int j) {
    return BigInt(binomial(n + hat_c - i, n + j - 2 * i) + 2 * binomial(n + hat_c - i, n + j - 2 * i + 1));
  });
}

IntegerMatrix det3_matrix(int n, int hat_c) {
  require_params(n, hat_c);
  return build(n, [&](int i, int j) { return BigInt(binomial(n + hat_c - i, n + j - 2 * i) * (n + 2 * hat_c - j + 1)); });
}

RationalMatrix krattenthaler_matrix(const std::vector<long>& L, const BigRational& A, const BigRational& B) {
  const auto n = static_cast<Eigen::Index>(L.size());
  RationalMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const BigRational top = B * L[static_cast<std::size_t>(i)] + A;
    if (!is_integer(top)) throw std::domain_error("B L_i + A is not an integer");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = BigRational(binomial(numerator(top), L[static_cast<std::size_t>(i)] + j + 1));
  }
  return m;
}

BigInt det1(int n, int hat_c) { return (BigInt(1) << n) * bareiss_determinant(det1_matrix(n, hat_c)); }

std::pair<BigInt, BigInt> det2_det3(int n, int hat_c) {
  return {bareiss_determinant(det2_matrix(n, hat_c)), bareiss_determinant(det3_matrix(n, hat_c))};
}

BigRational krattenthaler_eval(const std::vector<long>& L, const BigRational& A, const BigRational& B) {
  const long n = static_cast<long>(L.size());
  BigRational v = 1;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) v *= L[static_cast<std::size_t>(i)] - L[static_cast<std::size_t>(j)];
  for (long i = 1; i <= n; ++i) {
    const long Li = L[static_cast<std::size_t>(i - 1)];
    v /= BigRational(factorial(BigRational(Li + n)));
    v *= BigRational(factorial(B * Li + A));
    v /= BigRational(factorial((B - 1) * Li + A - 1));
    v *= pochhammer(A - B * i + 1, i - 1);
  }
  return v;
}

KrattenthalerParams odd_height_params(int n, int hat_c) {
  require_params(n, hat_c);
  KrattenthalerParams p{{}, BigRational(hat_c) + BigRational(n + 1, 2), BigRational(1, 2)};
  for (int i = 1; i <= n; ++i) p.L.push_back(n + 1 - 2 * i);
  return p;
}

KrattenthalerParams even_height_params(int n, int hat_c) {
  require_params(n, hat_c);
  KrattenthalerParams p{{}, BigRational(hat_c) + BigRational(n, 2), BigRational(1, 2)};
  for (int i = 1; i <= n; ++i) p.L.push_back(n - 2 * i);
  return p;
}

BigInt spp_product(int n, int c) {
  if (n < 0 || c < 0) throw std::invalid_argument("spp_product needs n, c >= 0");
  BigRational v = 1;
  for (int i = 1; i <= n; ++i) v *= BigRational(2 * i + c - 1, 2 * i - 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v *= BigRational(i + j + c - 1, i + j - 1);
  if (!is_integer(v)) throw std::logic_error("symmetric plane partition product is not an integer");
  return numerator(v);
}

TcppSppReport check_tcpp_spp_identity(int n, int c) {
  if (n < 1 || c < 0) throw std::invalid_argument("need n >= 1 and c >= 0");
  return {(BigInt(1) << (n - 1)) * tcpp(n, 2 * c), spp_product(n - 1, 2 * c + 1)};
}

}  // namespace hdp
