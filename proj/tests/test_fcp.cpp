#include <doctest.h>

#include <set>
#include <sstream>

#include "hdp/complementation.hpp"
#include "hdp/fcp.hpp"
#include "oracles.hpp"

using namespace hdp;

namespace {

PartitionArray rows(std::vector<std::vector<int>> r, int cap) { return PartitionArray::from_rows(r, cap); }

const PartitionArray kPi = rows({{4, 2, 2, 0}, {3, 2, 2, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}, 4);

}  // namespace

TEST_CASE("phi images of a (4,4,4) FCP") {
  REQUIRE(is_fc_array(kPi, BoxDims{2, 2, 2}));
  CHECK(phi(0, BoxDims{3, 2, 2}, kPi) ==
        rows({{4, 2, 2, 0}, {3, 2, 2, 0}, {2, 2, 0, 0}, {2, 2, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}, 4));
  CHECK(phi(1, BoxDims{2, 3, 2}, kPi) ==
        rows({{4, 2, 2, 2, 2, 0}, {3, 2, 2, 2, 2, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}}, 4));
  CHECK(phi(2, BoxDims{2, 2, 3}, kPi) == rows({{6, 4, 2, 0}, {5, 4, 2, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}, 6));
  CHECK_THROWS_AS(phi(0, BoxDims{2, 2, 2}, kPi), std::invalid_argument);
  CHECK_THROWS_AS(phi(0, BoxDims{3, 2, 2}, rows({{4, 4, 2, 0}, {3, 2, 2, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}}, 4)),
                  std::invalid_argument);
}

TEST_CASE("the chain from the empty array to a (6,4,4) FCP") {
  const PartitionArray s1 = phi(2, BoxDims{1, 1, 1}, PartitionArray::empty_sentinel());
  CHECK(s1 == rows({{2, 0}, {0, 0}}, 2));
  const PartitionArray s2 = phi(0, BoxDims{2, 1, 1}, s1);
  CHECK(s2 == rows({{2, 0}, {1, 0}, {1, 0}, {0, 0}}, 2));
  const PartitionArray s3 = phi(2, BoxDims{2, 1, 2}, s2);
  CHECK(s3 == rows({{4, 0}, {3, 0}, {1, 0}, {0, 0}}, 4));
  const PartitionArray s4 = phi(1, BoxDims{2, 2, 2}, s3);
  CHECK(s4 == kPi);
  const PartitionArray s5 = phi(0, BoxDims{3, 2, 2}, s4);

  const LatticePath expected{{1, 1, 0}, {2, 0, 2, 1, 0}};
  CHECK(fcp_to_path(s5, BoxDims{3, 2, 2}) == expected);
  CHECK(path_to_fcp(expected) == s5);
  CHECK(expected.end() == std::vector<int>{3, 2, 2});
  CHECK(decompose(s5, BoxDims{3, 2, 2}) == FcpDecomposition{0, s4});
  CHECK(decompose(s1, BoxDims{1, 1, 1}) == FcpDecomposition{2, PartitionArray::empty_sentinel()});
  std::ostringstream os;
  os << expected;
  CHECK_FALSE(os.str().empty());
}

TEST_CASE("FCP counts and enumeration") {
  CHECK(count_fcp(BoxDims{1, 1, 1}) == 3);
  CHECK(count_fcp(BoxDims{1, 1}) == 2);
  CHECK(count_fcp(BoxDims{1, 1, 1, 1}) == 4);
  CHECK(count_fcp(BoxDims{0, 3, 2}) == 1);
  CHECK(count_fcp(std::vector<int>{0, 0, 2}) == 0);
  CHECK(count_fcp(std::vector<int>{-1, 2, 2}) == 0);

  const auto zero = enumerate_fcp(BoxDims{2, 0, 1});
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_sentinel());

  for (const std::vector<int>& n : {std::vector<int>{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 2, 1}, {3, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}}) {
    const BoxDims half(n);
    const auto all = enumerate_fcp(half);
    CHECK(BigInt(all.size()) == count_fcp(half));
    std::set<std::vector<int>> lib;
    for (const auto& pi : all) {
      CHECK(is_fc_array(pi, half));
      lib.insert(pi.entries());
    }
    CHECK(lib.size() == all.size());
    std::set<std::vector<int>> truth;
    const auto sides = half.doubled().sides();
    for (const auto& cells : oracle::order_ideals(sides))
      if (oracle::is_fully_complementary(cells, sides)) truth.insert(oracle::heights(cells, sides));
    CHECK(lib == truth);

    std::size_t streamed = 0;
    for_each_fcp(half, [&](const PartitionArray&) { ++streamed; });
    CHECK(streamed == all.size());
  }
}

TEST_CASE("full boxes") {
  CHECK(count_fc_box(BoxDims{2, 2, 2}) == 3);
  CHECK(count_fc_box(BoxDims{2, 2, 3}) == 3);
  CHECK(count_fc_box(BoxDims{3, 2, 2}) == 3);
  CHECK(count_fc_box(BoxDims{1, 1, 2}) == 0);
  CHECK(count_fc_box(BoxDims{1, 2}) == 1);
}

TEST_CASE("path invariants") {
  CHECK_NOTHROW(validate_path({{0, 1}, {0}}));
  CHECK_THROWS_AS(validate_path({{1, 1}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_path({{0, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_path({{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_path({{0, 1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_path({{0, 1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_path({{-1, 1}, {0}}), std::invalid_argument);
}

TEST_CASE("paths ending at n are the images of FCP(n)") {
  for (const std::vector<int>& n : {std::vector<int>{1, 1, 1}, {2, 2, 1}, {3, 2, 2}, {2, 1, 1, 1}}) {
    const BoxDims half(n);
    const auto paths = paths_ending_at(n);
    CHECK(BigInt(paths.size()) == count_fcp(half));
    std::set<std::vector<int>> seen;
    for (const auto& p : paths) {
      CHECK(p.end() == n);
      const PartitionArray pi = path_to_fcp(p);
      CHECK(is_fc_array(pi, half));
      CHECK(fcp_to_path(pi, half) == p);
      seen.insert(pi.entries());
    }
    CHECK(seen.size() == paths.size());
  }
}
