#pragma once

// Truncated multivariate power series and q-polynomials with exact
// big-integer coefficients.

#include <map>
#include <vector>

#include <json.hpp>

#include "hdp/numeric.hpp"

namespace hdp {

/// Power series in `vars` variables, truncated at total degree `cap`.
/// Terms are kept in lexicographic exponent order; zero terms are dropped.
class TruncatedSeries {
 public:
  using Exponent = std::vector<int>;

  TruncatedSeries(std::size_t vars, int cap);

  static TruncatedSeries constant(std::size_t vars, int cap, const BigInt& c);
  static TruncatedSeries variable(std::size_t vars, int cap, std::size_t i);
  static TruncatedSeries monomial(std::size_t vars, int cap, Exponent exp, const BigInt& c = 1);

  std::size_t vars() const noexcept { return vars_; }
  int cap() const noexcept { return cap_; }
  const std::map<Exponent, BigInt>& terms() const noexcept { return terms_; }

  BigInt coeff(const Exponent& exp) const;
  // Adds c to the coefficient of exp; terms above the cap are discarded.
  void add_term(const Exponent& exp, const BigInt& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void check_compatible(const TruncatedSeries& o) const;

  std::size_t vars_;
  int cap_;
  std::map<Exponent, BigInt> terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// 1/a; throws std::invalid_argument unless the constant term is 1.
TruncatedSeries geometric_inverse(const TruncatedSeries& a);

nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// Generating function of |FCP(n)| over n in N^{d+1}, variables x_1..x_{d+1}.
TruncatedSeries expand_fcp_genfun(int d, int cap);

/// (x + y - 2x^2 - xy) / ((1 - x)(1 - 2x - y)); x counts a, y counts c.
TruncatedSeries expand_qs_genfun(int cap);

/// Polynomial in q with big-integer coefficients, no trailing zeros.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial one() { return QPolynomial({BigInt(1)}); }
  /// 1 - q^m.
  static QPolynomial one_minus_power(int m);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int k) const;
  BigInt at_one() const;

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// Exact division by 1 - q^m; throws std::logic_error on a remainder.
  QPolynomial divide_one_minus_power(int m) const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::string to_string(const QPolynomial& p);

/// Product over the box cells of (1 - q^{i+j+k-1}) / (1 - q^{i+j+k-2}).
QPolynomial macmahon_box_q(int a, int b, int c);

/// Sum of q^{|pi|} over all plane partitions in the (a,b,c)-box, by enumeration.
QPolynomial q_count_box(int a, int b, int c);

}  // namespace hdp
