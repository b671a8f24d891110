#pragma once

// Boxes, Ferrers diagrams and d-dimensional partitions.
//
// Conventions used throughout the library:
//  - a box has d+1 sides; the first d sides bound the array indices, the last
//    one bounds the entries;
//  - Points (cells of a Ferrers diagram) use 1-based coordinates;
//  - array indices (PartitionArray, IntGrid) are 0-based, row-major.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hdp {

using Point = std::vector<int>;

inline constexpr int kMaxSide = 1 << 16;

class BoxDims {
 public:
  explicit BoxDims(std::vector<int> sides);
  BoxDims(std::initializer_list<int> sides) : BoxDims(std::vector<int>(sides)) {}

  std::size_t axes() const noexcept { return sides_.size(); }
  std::size_t dim() const noexcept { return sides_.size() - 1; }
  int operator[](std::size_t axis) const { return sides_[axis]; }
  const std::vector<int>& sides() const noexcept { return sides_; }
  int height() const noexcept { return sides_.back(); }
  std::vector<int> base() const { return {sides_.begin(), sides_.end() - 1}; }

  bool has_zero_side() const noexcept;
  std::size_t odd_side_count() const noexcept;
  // Saturates at UINT64_MAX.
  std::uint64_t cell_count() const noexcept;
  BoxDims doubled() const;

  friend bool operator==(const BoxDims&, const BoxDims&) = default;
  friend auto operator<=>(const BoxDims&, const BoxDims&) = default;

 private:
  std::vector<int> sides_;
};

std::ostream& operator<<(std::ostream& os, const BoxDims& box);
std::string to_string(const BoxDims& box);

std::vector<std::size_t> row_major_strides(std::span<const int> shape);
std::size_t element_count(std::span<const int> shape);

// Calls f(idx) for every 0-based multi-index of `shape` in row-major order.
void for_each_index(std::span<const int> shape,
                    const std::function<void(std::span<const int>)>& f);

/// Plain dense integer array without any monotonicity requirement.
struct IntGrid {
  std::vector<int> shape;
  std::vector<int> values;

  int at(std::span<const int> idx) const;
  friend bool operator==(const IntGrid&, const IntGrid&) = default;
};

/// A d-dimensional partition restricted to a finite index grid, or the
/// distinguished "empty array" of a box with a zero side (default constructed).
class PartitionArray {
 public:
  PartitionArray() = default;
  PartitionArray(std::vector<int> shape, std::vector<int> entries, int height_cap);

  static PartitionArray empty_sentinel() { return {}; }
  static PartitionArray from_rows(const std::vector<std::vector<int>>& rows, int height_cap);
  static PartitionArray zeros(std::vector<int> shape, int height_cap);

  bool is_sentinel() const noexcept { return shape_.empty(); }
  std::size_t dim() const noexcept { return shape_.size(); }
  const std::vector<int>& shape() const noexcept { return shape_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int height_cap() const noexcept { return height_cap_; }

  int at(std::span<const int> idx) const { return entries_[flat_index(idx)]; }
  int at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  std::size_t flat_index(std::span<const int> idx) const;
  std::int64_t total() const noexcept;
  IntGrid grid() const { return {shape_, entries_}; }

  friend bool operator==(const PartitionArray&, const PartitionArray&) = default;
  friend auto operator<=>(const PartitionArray&, const PartitionArray&) = default;

 private:
  struct Unchecked {};
  PartitionArray(Unchecked, std::vector<int> shape, std::vector<int> entries, int height_cap)
      : shape_(std::move(shape)), entries_(std::move(entries)), height_cap_(height_cap) {}
  friend class PartitionBuilder;

  std::vector<int> shape_;
  std::vector<int> entries_;
  int height_cap_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PartitionArray& pi);

bool is_weakly_decreasing(std::span<const int> shape, std::span<const int> entries);

/// Downward-closed cell set of a box, stored as one bit per cell (row-major,
/// first coordinate most significant).
class FerrersDiagram {
 public:
  explicit FerrersDiagram(BoxDims box);
  FerrersDiagram(BoxDims box, std::vector<bool> cells);

  static FerrersDiagram from_points(BoxDims box, std::span<const Point> points);
  static FerrersDiagram full(BoxDims box);

  const BoxDims& box() const noexcept { return box_; }
  const std::vector<bool>& cells() const noexcept { return cells_; }
  bool test(std::size_t cell) const { return cells_[cell]; }
  bool contains(const Point& p) const;
  std::size_t size() const noexcept;
  std::size_t cell_index(const Point& p) const;
  Point cell_point(std::size_t cell) const;
  std::vector<Point> points() const;

  friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;

 private:
  BoxDims box_;
  std::vector<bool> cells_;
};

bool is_downward_closed(const BoxDims& box, const std::vector<bool>& cells);

PartitionArray array_from_diagram(const FerrersDiagram& lambda);
FerrersDiagram diagram_from_array(const PartitionArray& pi, const BoxDims& box);

/// Optional hooks for partition enumeration. `prefix` is called after each
/// cell assignment with the entries buffer and the number of filled cells; it
/// must be a necessary condition for `accept`, since a false return skips
/// the whole subtree.
struct PartitionFilter {
  std::function<bool(std::span<const int> entries, std::size_t filled)> prefix;
  std::function<bool(const PartitionArray&)> accept;
};

using PartitionVisitor = std::function<void(const PartitionArray&)>;

/// Every partition in `box` exactly once, lexicographic in the flattened
/// entries. A box with a zero side yields only the empty sentinel.
void for_each_partition(const BoxDims& box, const PartitionVisitor& visit,
                        const PartitionFilter& filter = {});
std::vector<PartitionArray> enumerate_partitions(const BoxDims& box,
                                                 const PartitionFilter& filter = {});
std::uint64_t count_partitions(const BoxDims& box, const PartitionFilter& filter = {});

}  // namespace hdp
