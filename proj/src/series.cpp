#include "hdp/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hdp/lattice.hpp"

namespace hdp {

namespace {

int total_degree(const TruncatedSeries::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t vars, int cap) : vars_(vars), cap_(cap) {
  if (vars == 0) throw std::invalid_argument("series needs at least one variable");
  if (cap < 0) throw std::invalid_argument("series cap must be non-negative");
}

TruncatedSeries TruncatedSeries::constant(std::size_t vars, int cap, const BigInt& c) {
  return monomial(vars, cap, Exponent(vars, 0), c);
}

TruncatedSeries TruncatedSeries::variable(std::size_t vars, int cap, std::size_t i) {
  if (i >= vars) throw std::invalid_argument("variable index out of range");
  Exponent e(vars, 0);
  e[i] = 1;
  return monomial(vars, cap, std::move(e));
}

TruncatedSeries TruncatedSeries::monomial(std::size_t vars, int cap, Exponent exp, const BigInt& c) {
  TruncatedSeries s(vars, cap);
  s.add_term(exp, c);
  return s;
}

BigInt TruncatedSeries::coeff(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TruncatedSeries::add_term(const Exponent& exp, const BigInt& c) {
  if (exp.size() != vars_) throw std::invalid_argument("exponent length does not match variable count");
  for (int x : exp)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (total_degree(exp) > cap_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (vars_ != o.vars_ || cap_ != o.cap_) throw std::invalid_argument("series shapes differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(vars_, cap_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries r(a.vars_, a.cap_);
  TruncatedSeries::Exponent e(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > a.cap_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries geometric_inverse(const TruncatedSeries& a) {
  const TruncatedSeries::Exponent zero(a.vars(), 0);
  if (a.coeff(zero) != 1) throw std::invalid_argument("geometric_inverse needs constant term 1");
  const TruncatedSeries one = TruncatedSeries::constant(a.vars(), a.cap(), 1);
  const TruncatedSeries u = one - a;
  // 1/(1-u) = 1 + u(1 + u(1 + ...)), exact up to the cap since u has no constant term.
  TruncatedSeries r = one;
  for (int k = 0; k < a.cap(); ++k) r = one + u * r;
  return r;
}

nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e}, {"coeff", to_decimal(c)}});
  return {{"vars", s.vars()}, {"cap", s.cap()}, {"terms", terms}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  TruncatedSeries s(j.at("vars").get<std::size_t>(), j.at("cap").get<int>());
  for (const auto& t : j.at("terms"))
    s.add_term(t.at("exp").get<std::vector<int>>(), BigInt(t.at("coeff").get<std::string>()));
  return s;
}

TruncatedSeries expand_fcp_genfun(int d, int cap) {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  const std::size_t m = static_cast<std::size_t>(d) + 1;
  using Exponent = TruncatedSeries::Exponent;
  const Exponent all(m, 1);

  // prod x_i * (sum_i (1/x_i + d x_i) - sum_{i,j} x_i/x_j), expanded; the
  // diagonal i = j of the double sum contributes -(d+1) prod x_i.
  TruncatedSeries num(m, cap);
  for (std::size_t i = 0; i < m; ++i) {
    Exponent e = all;
    --e[i];
    num.add_term(e, 1);
    e = all;
    ++e[i];
    num.add_term(e, d);
  }
  num.add_term(all, -static_cast<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      Exponent e = all;
      ++e[i];
      --e[j];
      num.add_term(e, -1);
    }

  const TruncatedSeries one = TruncatedSeries::constant(m, cap, 1);
  TruncatedSeries lin = one;
  for (std::size_t i = 0; i < m; ++i) lin -= TruncatedSeries::variable(m, cap, i);
  TruncatedSeries result = num * geometric_inverse(lin);
  for (std::size_t i = 0; i < m; ++i)
    result = result * geometric_inverse(one - TruncatedSeries::variable(m, cap, i));
  return result;
}

TruncatedSeries expand_qs_genfun(int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  const auto x = TruncatedSeries::variable(2, cap, 0);
  const auto y = TruncatedSeries::variable(2, cap, 1);
  const auto one = TruncatedSeries::constant(2, cap, 1);
  const auto two = TruncatedSeries::constant(2, cap, 2);
  const TruncatedSeries num = x + y - two * x * x - x * y;
  return num * geometric_inverse(one - x) * geometric_inverse(one - two * x - y);
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::one_minus_power(int m) {
  if (m < 1) throw std::invalid_argument("1 - q^m needs m >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(m) + 1, 0);
  c[0] = 1;
  c[static_cast<std::size_t>(m)] = -1;
  return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(int k) const {
  return k < 0 || k > degree() ? BigInt(0) : coeffs_[static_cast<std::size_t>(k)];
}

BigInt QPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::divide_one_minus_power(int m) const {
  if (m < 1) throw std::invalid_argument("1 - q^m needs m >= 1");
  if (coeffs_.empty()) return {};
  if (degree() < m) throw std::logic_error("polynomial division by 1 - q^m leaves a remainder");
  const std::size_t mm = static_cast<std::size_t>(m);
  std::vector<BigInt> q(coeffs_.size() - mm, 0);
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = coeffs_[k] + (k >= mm ? q[k - mm] : BigInt(0));
  QPolynomial quotient(std::move(q));
  if (quotient * one_minus_power(m) != *this) throw std::logic_error("polynomial division by 1 - q^m leaves a remainder");
  return quotient;
}

std::string to_string(const QPolynomial& p) {
  if (p.coeffs().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const BigInt a = abs(c);
    if (k == 0 || a != 1) os << a;
    if (k > 0) os << "q";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

QPolynomial macmahon_box_q(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("box sides must be non-negative");
  // The product over k telescopes to prod_{i,j} (1 - q^{i+j+c-1}) / (1 - q^{i+j-1}).
  QPolynomial num = QPolynomial::one();
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      if (c > 0) num = num * QPolynomial::one_minus_power(i + j + c - 1);
  if (c == 0) return num;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) num = num.divide_one_minus_power(i + j - 1);
  return num;
}

QPolynomial q_count_box(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("box sides must be non-negative");
  if (a == 0 || b == 0 || c == 0) return QPolynomial::one();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(a) * b * c + 1, 0);
  for_each_partition(BoxDims{a, b, c}, [&](const PartitionArray& pi) { ++coeffs[static_cast<std::size_t>(pi.total())]; });
  return QPolynomial(std::move(coeffs));
}

}  // namespace hdp
