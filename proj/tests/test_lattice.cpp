#include <doctest.h>

#include <algorithm>

#include "hdp/lattice.hpp"
#include "oracles.hpp"

using namespace hdp;

namespace {

FerrersDiagram to_diagram(const oracle::CellSet& cells, const BoxDims& box) {
  std::vector<Point> pts(cells.begin(), cells.end());
  return FerrersDiagram::from_points(box, pts);
}

}  // namespace

TEST_CASE("box validation") {
  CHECK_THROWS_AS(BoxDims({2}), std::invalid_argument);
  CHECK_THROWS_AS(BoxDims({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(BoxDims({0, 0, 2}), std::invalid_argument);
  const BoxDims b{2, 3, 0};
  CHECK(b.has_zero_side());
  CHECK(b.dim() == 2);
  CHECK(b.cell_count() == 0);
  CHECK(BoxDims({1, 2, 3}).odd_side_count() == 2);
  CHECK(BoxDims({1, 2, 3}).doubled() == BoxDims({2, 4, 6}));
  CHECK(to_string(BoxDims{1, 2}) == "(1,2)");
}

TEST_CASE("row-major layout") {
  const std::vector<int> shape{2, 3, 4};
  CHECK(row_major_strides(shape) == std::vector<std::size_t>{12, 4, 1});
  CHECK(element_count(shape) == 24);
  std::vector<std::vector<int>> seen;
  for_each_index(std::vector<int>{2, 2}, [&](std::span<const int> idx) { seen.emplace_back(idx.begin(), idx.end()); });
  CHECK(seen == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("partition array invariants") {
  CHECK_THROWS_AS(PartitionArray::from_rows({{1, 2}, {0, 0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(PartitionArray::from_rows({{3, 0}, {0, 0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(PartitionArray::from_rows({{1, 0}, {0}}, 2), std::invalid_argument);
  const auto pi = PartitionArray::from_rows({{2, 1}, {1, 0}}, 2);
  CHECK(pi.at({0, 1}) == 1);
  CHECK(pi.total() == 4);
  CHECK_THROWS_AS(pi.at({2, 0}), std::out_of_range);
  CHECK(PartitionArray::empty_sentinel().is_sentinel());
  CHECK(is_weakly_decreasing(std::vector<int>{2, 2}, std::vector<int>{2, 1, 1, 0}));
  CHECK_FALSE(is_weakly_decreasing(std::vector<int>{2, 2}, std::vector<int>{1, 1, 2, 0}));
}

TEST_CASE("diagram and array conversions") {
  const BoxDims box{2, 2, 2};
  const std::vector<Point> cells{{1, 1, 1}, {1, 1, 2}, {2, 1, 1}};
  const auto lambda = FerrersDiagram::from_points(box, cells);
  const auto pi = array_from_diagram(lambda);
  CHECK(pi == PartitionArray::from_rows({{2, 0}, {1, 0}}, 2));
  CHECK(diagram_from_array(pi, box) == lambda);

  CHECK(array_from_diagram(FerrersDiagram(box)) == PartitionArray::from_rows({{0, 0}, {0, 0}}, 2));
  CHECK(array_from_diagram(FerrersDiagram::full(box)) == PartitionArray::from_rows({{2, 2}, {2, 2}}, 2));
  CHECK(diagram_from_array(PartitionArray::from_rows({{0, 0}, {0, 0}}, 2), box).size() == 0);

  const std::vector<Point> not_closed{{1, 1, 2}};
  CHECK_THROWS_AS(FerrersDiagram::from_points(box, not_closed), std::invalid_argument);
}

TEST_CASE("round trip over every order ideal of the (2,2,2)-box") {
  const BoxDims box{2, 2, 2};
  const auto ideals = oracle::order_ideals(box.sides());
  CHECK(ideals.size() == 20);
  for (const auto& cells : ideals) {
    const auto lambda = to_diagram(cells, box);
    CHECK(diagram_from_array(array_from_diagram(lambda), box) == lambda);
    CHECK(oracle::heights(cells, box.sides()) == array_from_diagram(lambda).entries());
  }
}

TEST_CASE("partition enumeration") {
  CHECK(count_partitions(BoxDims{1, 1, 1}) == 2);
  CHECK(count_partitions(BoxDims{2, 2, 2}) == 20);
  CHECK(count_partitions(BoxDims{4, 4, 4}) == 232848);
  CHECK(count_partitions(BoxDims{2, 2, 2, 2}) == 168);

  const auto zero = enumerate_partitions(BoxDims{2, 0, 3});
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_sentinel());

  for (const BoxDims& box : {BoxDims{2, 3, 2}, BoxDims{3, 2}, BoxDims{2, 2, 1, 2}}) {
    const auto all = enumerate_partitions(box);
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const PartitionArray& x, const PartitionArray& y) { return x.entries() < y.entries(); }));
    std::vector<std::vector<int>> from_oracle;
    for (const auto& cells : oracle::order_ideals(box.sides())) from_oracle.push_back(oracle::heights(cells, box.sides()));
    std::sort(from_oracle.begin(), from_oracle.end());
    std::vector<std::vector<int>> from_lib;
    for (const auto& pi : all) from_lib.push_back(pi.entries());
    CHECK(from_lib == from_oracle);
  }
}

TEST_CASE("prefix filter prunes subtrees") {
  PartitionFilter f;
  f.prefix = [](std::span<const int> e, std::size_t filled) { return filled == 0 || e[0] <= 1; };
  CHECK(count_partitions(BoxDims{2, 2, 2}, f) == 6);
  PartitionFilter g;
  g.accept = [](const PartitionArray& pi) { return pi.total() == 2; };
  CHECK(count_partitions(BoxDims{2, 2, 2}, g) == 3);
}
