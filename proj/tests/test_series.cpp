#include <doctest.h>

#include "hdp/fcp.hpp"
#include "hdp/series.hpp"
#include "hdp/symmetry.hpp"
#include "oracles.hpp"

using namespace hdp;

TEST_CASE("series arithmetic") {
  const auto x = TruncatedSeries::variable(2, 4, 0);
  const auto y = TruncatedSeries::variable(2, 4, 1);
  const auto one = TruncatedSeries::constant(2, 4, 1);
  const auto inv = geometric_inverse(one - x - y);
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      BigInt expected = 1;
      for (int k = 1; k <= j; ++k) expected = expected * (i + k) / k;
      CHECK(inv.coeff({i, j}) == expected);
    }
  CHECK((inv * (one - x - y)) == one);
  CHECK((x * x).coeff({2, 0}) == 1);
  CHECK((x - x).terms().empty());
  CHECK(mul(x, y) == x * y);
  CHECK(add(x, y) == x + y);
  CHECK((-x).coeff({1, 0}) == -1);

  auto s = TruncatedSeries::monomial(2, 4, {4, 1});
  CHECK(s.terms().empty());
  s.add_term({1, 1}, 5);
  CHECK(s.coeff({1, 1}) == 5);
  CHECK(series_from_json(to_json(s)) == s);

  CHECK_THROWS_AS(geometric_inverse(x), std::invalid_argument);
  CHECK_THROWS_AS(x + TruncatedSeries::variable(3, 4, 0), std::invalid_argument);
}

TEST_CASE("FCP generating function against the recurrence") {
  CHECK(expand_fcp_genfun(1, 2).coeff({1, 1}) == 2);
  CHECK(expand_fcp_genfun(2, 3).coeff({1, 1, 1}) == 3);
  CHECK(expand_fcp_genfun(3, 4).coeff({1, 1, 1, 1}) == 4);
  for (int d = 1; d <= 3; ++d) {
    const int cap = 7 - d;
    const auto s = expand_fcp_genfun(d, cap);
    std::vector<int> n(static_cast<std::size_t>(d + 1), 0);
    for (const auto& cell : oracle::box_cells(std::vector<int>(static_cast<std::size_t>(d + 1), cap + 1))) {
      int sum = 0;
      for (std::size_t k = 0; k < cell.size(); ++k) {
        n[k] = cell[k] - 1;
        sum += n[k];
      }
      if (sum > cap) continue;
      CHECK(s.coeff(n) == count_fcp(n));
    }
  }
}

TEST_CASE("quasi-symmetric series") {
  const auto s = expand_qs_genfun(8);
  CHECK(s.coeff({1, 1}) == 3);
  CHECK(s.coeff({0, 0}) == 0);
  for (int a = 0; a <= 8; ++a)
    for (int c = 0; a + c <= 8; ++c) {
      if (a + c == 0) continue;
      CHECK(s.coeff({a, c}) == count_qs_qcpp(a, c, QsMode::recursion));
    }
  CHECK(s.coeff({3, 0}) == 1);
  CHECK(s.coeff({0, 3}) == 1);
}

TEST_CASE("MacMahon q-product") {
  CHECK(macmahon_box_q(1, 1, 1) == QPolynomial({1, 1}));
  CHECK(macmahon_box_q(1, 1, 2) == QPolynomial({1, 1, 1}));
  CHECK(macmahon_box_q(2, 2, 1).at_one() == 6);
  CHECK(macmahon_box_q(2, 2, 2).at_one() == 20);
  CHECK(macmahon_box_q(0, 3, 2) == QPolynomial::one());
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        const QPolynomial q = q_count_box(a, b, c);
        CHECK(macmahon_box_q(a, b, c) == q);
        std::uint64_t n = 0;
        oracle::for_each_plane_partition(a, b, c, [&](const oracle::Plane&) { ++n; });
        CHECK(q.at_one() == n);
        CHECK(q.degree() == a * b * c);
      }
}

TEST_CASE("q-polynomial helpers") {
  const QPolynomial p({1, 0, 0});
  CHECK(p.degree() == 0);
  CHECK(QPolynomial::one_minus_power(2) == QPolynomial({1, 0, -1}));
  const QPolynomial prod = QPolynomial({1, 1}) * QPolynomial::one_minus_power(3);
  CHECK(prod.divide_one_minus_power(3) == QPolynomial({1, 1}));
  CHECK_THROWS_AS(QPolynomial({1, 1}).divide_one_minus_power(2), std::logic_error);
  CHECK(QPolynomial({1, 2}).coeff(5) == 0);
  CHECK(to_string(QPolynomial({1, 1})).find('q') != std::string::npos);
}
