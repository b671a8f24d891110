#include <doctest.h>

#include "hdp/exact_linalg.hpp"
#include "hdp/fcp.hpp"
#include "hdp/series.hpp"
#include "hdp/symmetry.hpp"
#include "oracles.hpp"

using namespace hdp;
using oracle::Plane;

namespace {

PartitionArray to_array(const Plane& p, int c) { return PartitionArray::from_rows(p, c); }

bool self_complementary(const Plane& p, int c) {
  const int a = static_cast<int>(p.size());
  const int b = static_cast<int>(p[0].size());
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (p[i][j] + p[a - 1 - i][b - 1 - j] != c) return false;
  return true;
}

bool cyclically_symmetric(const Plane& p) {
  const int n = static_cast<int>(p.size());
  auto has = [&](int i, int j, int k) { return p[i][j] > k; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (has(i, j, k) != has(j, k, i)) return false;
  return true;
}

// Second-kind transpose complementarity with the centre cell of an odd base
// also held to the relation.
bool tc2_centre(const Plane& p, int c) {
  const int n = static_cast<int>(p.size());
  if (!oracle::transpose_complementary(p, c, false, true)) return false;
  return n % 2 == 0 || 2 * p[n / 2][n / 2] == c;
}

BigInt oracle_class(SymmetryTag tag, int n, int c) {
  return oracle::count_planes(n, c, [&](const Plane& p) {
    switch (tag) {
      case SymmetryTag::SYM: return oracle::symmetric(p);
      case SymmetryTag::QSYM: return oracle::quasi_symmetric(p);
      case SymmetryTag::SC: return self_complementary(p, c);
      case SymmetryTag::TC: return oracle::transpose_complementary(p, c, false, false);
      case SymmetryTag::QTC: return oracle::transpose_complementary(p, c, true, false);
      case SymmetryTag::QTC2: return oracle::transpose_complementary(p, c, false, true);
      case SymmetryTag::SQTC2: return oracle::symmetric(p) && oracle::transpose_complementary(p, c, false, true);
      case SymmetryTag::QTC2C: return tc2_centre(p, c);
      case SymmetryTag::SQTC2C: return oracle::symmetric(p) && tc2_centre(p, c);
      case SymmetryTag::CYC: return cyclically_symmetric(p);
      default: return false;
    }
  });
}

}  // namespace

TEST_CASE("tag names") {
  for (const char* name : {"SYM", "QSYM", "SC", "TC", "QTC", "QTC2", "SQTC2", "QTC2C", "SQTC2C", "CYC", "QS_QCPP",
                           "SC_QCPP", "QTC_QCPP"}) {
    const auto tag = parse_symmetry_tag(name);
    REQUIRE(tag.has_value());
    CHECK(to_string(*tag) == name);
  }
  CHECK_FALSE(parse_symmetry_tag("sym2").has_value());
  CHECK(is_qcpp_tag(SymmetryTag::QS_QCPP));
  CHECK_FALSE(is_qcpp_tag(SymmetryTag::QTC));
  CHECK_THROWS_AS(SymmetryClass(SymmetryTag::QS_QCPP, BoxDims{2, 2, 3}), std::invalid_argument);
  CHECK(SymmetryClass(SymmetryTag::QS_QCPP, BoxDims{4, 4, 2}).half() == BoxDims{2, 2, 1});
}

TEST_CASE("plane partition classes against the oracle") {
  const SymmetryTag tags[] = {SymmetryTag::SYM,   SymmetryTag::QSYM,  SymmetryTag::SC,     SymmetryTag::TC,
                              SymmetryTag::QTC,   SymmetryTag::QTC2,  SymmetryTag::SQTC2,  SymmetryTag::QTC2C,
                              SymmetryTag::SQTC2C};
  for (SymmetryTag tag : tags)
    for (int n = 1; n <= 3; ++n)
      for (int c = 0; c <= 4; ++c) {
        CAPTURE(to_string(tag));
        CAPTURE(n);
        CAPTURE(c);
        CHECK(count_class(SymmetryClass(tag, BoxDims{n, n, c})) == oracle_class(tag, n, c));
      }
  for (int n = 1; n <= 3; ++n) CHECK(count_class(SymmetryClass(SymmetryTag::CYC, BoxDims{n, n, n})) == oracle_class(SymmetryTag::CYC, n, n));
}

TEST_CASE("predicate matches the oracle pointwise") {
  const int n = 3;
  const int c = 2;
  oracle::for_each_plane_partition(n, n, c, [&](const Plane& p) {
    const PartitionArray pi = to_array(p, c);
    CHECK(predicate(SymmetryClass(SymmetryTag::SYM, BoxDims{n, n, c}), pi) == oracle::symmetric(p));
    CHECK(predicate(SymmetryClass(SymmetryTag::QSYM, BoxDims{n, n, c}), pi) == oracle::quasi_symmetric(p));
    CHECK(predicate(SymmetryClass(SymmetryTag::QTC, BoxDims{n, n, c}), pi) ==
          oracle::transpose_complementary(p, c, true, false));
  });
  CHECK_THROWS_AS(predicate(SymmetryClass(SymmetryTag::SYM, BoxDims{2, 2, 2}), PartitionArray::from_rows({{1}}, 1)),
                  std::invalid_argument);
}

TEST_CASE("QCPP classes") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 2; ++c) CHECK(count_sc_qcpp(a, b, c) == binomial(a + b, a));
  for (int a = 1; a <= 3; ++a)
    for (int c = 1; c <= 3; ++c) {
      CHECK(count_qtc_qcpp(a, c) == BigInt(1) << a);
      CHECK(qtc_qcpp_is_qs_and_sc(a, c));
    }
  for (int a = 0; a <= 3; ++a)
    for (int c = 0; c <= 3; ++c) {
      if (a + c == 0) continue;
      CHECK(count_qs_qcpp(a, c, QsMode::recursion) == count_qs_qcpp(a, c, QsMode::brute));
    }
  CHECK(count_qs_qcpp(1, 1, QsMode::recursion) == 3);
  CHECK(count_class(SymmetryClass(SymmetryTag::QS_QCPP, BoxDims{4, 4, 4})) == count_qs_qcpp(2, 2, QsMode::recursion));
  CHECK(count_class(SymmetryClass(SymmetryTag::SC_QCPP, BoxDims{4, 2, 2})) == 3);
  CHECK(count_class(SymmetryClass(SymmetryTag::QTC_QCPP, BoxDims{4, 4, 2})) == 4);
  for (int a = 1; a <= 3; ++a) {
    CHECK(count_cyc_qcpp(a) == 0);
    for (int c = 1; c <= 3; ++c) CHECK(count_sym_qcpp(a, c) == 1);
  }
}

TEST_CASE("hat map and weights") {
  const int c = 6;
  const Plane hat_rows{{6, 6, 6, 5, 4}, {6, 5, 3, 3, 1}, {6, 5, 3, 3, 0}, {6, 4, 1, 1, 0}, {5, 0, 0, 0, 0}};
  const PartitionArray hat = to_array(hat_rows, c);
  REQUIRE(oracle::transpose_complementary(hat_rows, c, true, false));
  CHECK(is_hat_image(hat, c));
  CHECK(omega(hat, c) == 8);
  CHECK(hat_map(hat, c) == hat);

  Plane lower = hat_rows;
  lower[0][4] = 2;
  CHECK(hat_map(to_array(lower, c), c) == hat);
  CHECK_FALSE(is_hat_image(to_array(lower, c), c));

  const auto paths = qtcpp_paths(hat, c);
  REQUIRE(paths.size() == 5);
  CHECK(paths[0] == NEPath{2, -1, "NNENEEEE"});
  CHECK(paths[1] == NEPath{4, -2, "NENEENE"});
  CHECK(paths[2] == NEPath{6, -3, "EENNNE"});
  CHECK(paths[3] == NEPath{8, -4, "ENNEN"});
  CHECK(paths[4] == NEPath{10, -5, "NENN"});
  for (int i = 1; i <= 5; ++i) CHECK(paths[i - 1].end() == std::pair<int, int>{5 + 1 + i, 3 - i});
  CHECK(paths_vertex_disjoint(paths));
  CHECK(hat_from_paths(paths, 5, c) == hat);
  CHECK(NEPath{0, 0, "NE"}.vertices() == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});

  for (int n = 1; n <= 3; ++n)
    for (int cc = 1; cc <= 4; ++cc) {
      BigInt weighted = 0;
      oracle::for_each_plane_partition(n, n, cc, [&](const Plane& p) {
        const PartitionArray pi = to_array(p, cc);
        if (!is_hat_image(pi, cc)) return;
        weighted += omega(pi, cc);
        CHECK(hat_from_paths(qtcpp_paths(pi, cc), n, cc) == pi);
      });
      const auto wc = hat_weighted_count(n, cc);
      CHECK(wc.value == weighted);
      CHECK(wc.value == oracle_class(SymmetryTag::QTC, n, cc));
    }
}

TEST_CASE("named counts") {
  for (int n = 1; n <= 3; ++n)
    for (int c = 0; c <= 4; ++c) {
      CHECK(spp(n, c) == oracle_class(SymmetryTag::SYM, n, c));
      CHECK(tcpp(n, c) == oracle_class(SymmetryTag::TC, n, c));
      CHECK(qtcpp(n, c) == oracle_class(SymmetryTag::QTC, n, c));
      CHECK(qspp(n, c) == oracle_class(SymmetryTag::QSYM, n, c));
      CHECK(qtcpp(n, c) == spp(n, c));
      CHECK(spp(n, c) == spp_product(n, c));
    }
  for (int a = 1; a <= 3; ++a)
    for (int c = 0; c <= 2; ++c) {
      CHECK(qtcpp2(a, c) == oracle_class(SymmetryTag::QTC2C, a, 2 * c));
      CHECK(qtcspp2(a, c) == oracle_class(SymmetryTag::SQTC2C, a, 2 * c));
    }
  CHECK(count_class(SymmetryClass(SymmetryTag::QTC2, BoxDims{2, 2, 3})) == 0);
  CHECK(qspp(2, 2) == 20);
  CHECK(count_class(SymmetryClass(SymmetryTag::QTC, BoxDims{2, 2, 2})) == 10);
}

TEST_CASE("search budget") {
  SearchOptions tiny;
  tiny.node_budget = 10;
  CHECK_THROWS_AS(count_class(SymmetryClass(SymmetryTag::QSYM, BoxDims{4, 4, 4}), tiny), BudgetExceeded);
  SearchOptions threaded;
  threaded.threads = 4;
  CHECK(count_class(SymmetryClass(SymmetryTag::QSYM, BoxDims{3, 3, 3}), threaded) ==
        count_class(SymmetryClass(SymmetryTag::QSYM, BoxDims{3, 3, 3})));
}
