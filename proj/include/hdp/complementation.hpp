#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hdp/lattice.hpp"

namespace hdp {

/// Subset of box axes, bit k standing for axis k (0-based).
class AxisSubset {
 public:
  constexpr AxisSubset() = default;
  constexpr explicit AxisSubset(std::uint32_t mask) : mask_(mask) {}

  // Axes are 1-based here, matching the usual I ⊆ [d+1] notation.
  static AxisSubset of(std::initializer_list<int> axes);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool contains(std::size_t axis) const noexcept { return (mask_ >> axis) & 1U; }
  int size() const noexcept;
  bool is_even() const noexcept { return size() % 2 == 0; }
  bool fits(std::size_t axes) const noexcept { return axes >= 32 || (mask_ >> axes) == 0; }

  friend constexpr AxisSubset operator^(AxisSubset a, AxisSubset b) { return AxisSubset(a.mask_ ^ b.mask_); }
  friend constexpr bool operator==(AxisSubset, AxisSubset) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Non-empty even-size subsets of `axes` axes, in reflected Gray-code order.
std::vector<AxisSubset> even_subsets_gray(std::size_t axes);

/// x_i -> s_i + 1 - x_i on the axes in I, for a box of side lengths `sides`.
Point reflect(AxisSubset I, std::span<const int> sides, const Point& p);

/// The reflection of the (2n_1, ..., 2n_{d+1})-box; `n` holds half-lengths.
Point rho(AxisSubset I, const BoxDims& n, const Point& p);

/// Index reflection of an array on the (2n_1, ..., 2n_d) grid. The result is
/// generally not monotone, hence a plain grid. I must not contain axis d+1.
IntGrid gamma(AxisSubset I, const BoxDims& n, const PartitionArray& pi);

/// Fully-complementary test straight from the tiling definition, inside the
/// diagram's own box (side lengths may be odd).
bool is_fc_diagram(const FerrersDiagram& lambda);
/// Same, additionally requiring the diagram to live in the 2n-box.
bool is_fc_diagram(const FerrersDiagram& lambda, const BoxDims& n);

/// Array-level test: pi * gamma_J(pi) = 0 for non-empty even J ⊆ [d], and
/// sum over I ⊆ [d] of gamma_I(pi) = 2 n_{d+1}, pointwise.
bool is_fc_array(const PartitionArray& pi, const BoxDims& n);

/// Deletes the middle layer along the single odd side `axis`.
FerrersDiagram reduce_odd_axis(const FerrersDiagram& lambda, std::size_t axis);
/// Point version; nullopt for points of the deleted middle layer.
std::optional<Point> reduce_odd_axis_point(std::span<const int> sides, std::size_t axis, const Point& p);

/// Prefix-pruning filter for enumerate_partitions over `box` whose accepted
/// set is exactly the fully complementary diagrams of `box`. The prefix test
/// rejects partial diagrams that already overlap one of their even
/// reflections, or leave a column uncovered once its reflection orbit is
/// complete.
PartitionFilter fc_prefix_filter(const BoxDims& box);

/// Number of fully complementary diagrams in `box`, by pruned exhaustion.
std::uint64_t count_fc_diagrams(const BoxDims& box);

/// True iff no order ideal of `box` is fully complementary. Requires at
/// least two odd sides.
bool scan_no_fc_two_odd(const BoxDims& box);

}  // namespace hdp
