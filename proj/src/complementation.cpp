#include "hdp/complementation.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <stdexcept>

namespace hdp {

AxisSubset AxisSubset::of(std::initializer_list<int> axes) {
  std::uint32_t m = 0;
  for (int a : axes) {
    if (a < 1 || a > 32) throw std::invalid_argument("axis out of range");
    m |= 1U << (a - 1);
  }
  return AxisSubset(m);
}

int AxisSubset::size() const noexcept { return std::popcount(mask_); }

std::vector<AxisSubset> even_subsets_gray(std::size_t axes) {
  if (axes >= 31) throw std::invalid_argument("too many axes");
  std::vector<AxisSubset> out;
  for (std::uint32_t k = 0; k < (1U << axes); ++k) {
    const AxisSubset g(k ^ (k >> 1));
    if (g.mask() != 0 && g.is_even()) out.push_back(g);
  }
  return out;
}

Point reflect(AxisSubset I, std::span<const int> sides, const Point& p) {
  if (p.size() != sides.size()) throw std::invalid_argument("point rank mismatch");
  if (!I.fits(sides.size())) throw std::invalid_argument("axis subset exceeds box rank");
  Point q = p;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < 1 || p[k] > sides[k]) throw std::out_of_range("point outside box");
    if (I.contains(k)) q[k] = sides[k] + 1 - p[k];
  }
  return q;
}

Point rho(AxisSubset I, const BoxDims& n, const Point& p) {
  return reflect(I, n.doubled().sides(), p);
}

namespace {

// Per-cell coordinates of a row-major grid, one vector per axis.
struct GridCoords {
  std::vector<int> shape;
  std::vector<std::size_t> strides;
  std::vector<std::vector<int>> coord;  // coord[axis][cell]

  explicit GridCoords(std::vector<int> s) : shape(std::move(s)), strides(row_major_strides(shape)) {
    const std::size_t n = element_count(shape);
    coord.assign(shape.size(), std::vector<int>(n));
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t rest = c;
      for (std::size_t k = 0; k < shape.size(); ++k) {
        coord[k][c] = static_cast<int>(rest / strides[k]);
        rest %= strides[k];
      }
    }
  }

  std::size_t cells() const { return coord.empty() ? 1 : coord[0].size(); }

  // Index of the cell reflected on the axes of `mask` (only axes < shape.size()).
  std::size_t reflect(std::size_t cell, std::uint32_t mask) const {
    std::size_t r = cell;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      if (!((mask >> k) & 1U)) continue;
      const int x = coord[k][cell];
      const int y = shape[k] - 1 - x;
      r = r + static_cast<std::size_t>(y) * strides[k] - static_cast<std::size_t>(x) * strides[k];
    }
    return r;
  }
};

}  // namespace

IntGrid gamma(AxisSubset I, const BoxDims& n, const PartitionArray& pi) {
  const std::size_t d = n.dim();
  if (I.contains(d) || !I.fits(d)) throw std::invalid_argument("gamma acts on the first d axes only");
  if (pi.is_sentinel()) throw std::invalid_argument("gamma needs a non-empty array");
  std::vector<int> shape = n.doubled().base();
  if (pi.shape() != shape) throw std::invalid_argument("array shape does not match the 2n grid");
  const GridCoords g(shape);
  IntGrid out{shape, std::vector<int>(pi.entries().size())};
  for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] = pi.entries()[g.reflect(c, I.mask())];
  return out;
}

bool is_fc_diagram(const FerrersDiagram& lambda) {
  const BoxDims& box = lambda.box();
  if (box.has_zero_side()) return true;
  const GridCoords g(box.sides());
  const auto& cells = lambda.cells();
  const auto masks = even_subsets_gray(box.axes());
  for (const AxisSubset I : masks)
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c] && cells[g.reflect(c, I.mask())]) return false;
  // The even reflections are now pairwise disjoint, so they tile the box
  // exactly when the cardinalities add up.
  const std::uint64_t copies = 1ULL << box.dim();
  const bool covers = lambda.size() * copies == box.cell_count();
#if defined(HDP_CHECKED)
  std::vector<int> hits(cells.size(), 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!cells[c]) continue;
    ++hits[c];
    for (const AxisSubset I : masks) ++hits[g.reflect(c, I.mask())];
  }
  for (int h : hits)
    if (h > 1) throw std::logic_error("even reflections overlap after a passed disjointness test");
  const bool union_covers = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  if (union_covers != covers) throw std::logic_error("cardinality and union coverage disagree");
#endif
  return covers;
}

bool is_fc_diagram(const FerrersDiagram& lambda, const BoxDims& n) {
  return lambda.box() == n.doubled() && is_fc_diagram(lambda);
}

bool is_fc_array(const PartitionArray& pi, const BoxDims& n) {
  if (n.has_zero_side()) return pi.is_sentinel();
  if (pi.is_sentinel()) return false;
  const std::size_t d = n.dim();
  const BoxDims box = n.doubled();
  if (pi.shape() != box.base()) return false;
  const int target = box.height();
  const GridCoords g(box.base());
  const auto& e = pi.entries();
  const std::uint32_t subsets = 1U << d;
  for (std::size_t c = 0; c < e.size(); ++c) {
    int sum = 0;
    for (std::uint32_t I = 0; I < subsets; ++I) {
      const int v = e[g.reflect(c, I)];
      sum += v;
      if (I != 0 && std::popcount(I) % 2 == 0 && e[c] != 0 && v != 0) return false;
    }
    if (sum != target) return false;
  }
  return true;
}

std::optional<Point> reduce_odd_axis_point(std::span<const int> sides, std::size_t axis, const Point& p) {
  if (axis >= sides.size() || sides[axis] % 2 == 0) throw std::invalid_argument("axis is not odd");
  const int middle = (sides[axis] + 1) / 2;
  Point q = p;
  if (p[axis] == middle) return std::nullopt;
  if (p[axis] > middle) --q[axis];
  return q;
}

FerrersDiagram reduce_odd_axis(const FerrersDiagram& lambda, std::size_t axis) {
  const BoxDims& box = lambda.box();
  if (axis >= box.axes()) throw std::invalid_argument("axis out of range");
  if (box.odd_side_count() != 1 || box[axis] % 2 == 0)
    throw std::invalid_argument("reduce_odd_axis needs exactly one odd side, at the given axis");
  std::vector<int> sides = box.sides();
  --sides[axis];
  BoxDims reduced(sides);
  FerrersDiagram out(reduced);
  std::vector<bool> cells(static_cast<std::size_t>(reduced.cell_count()), false);
  for (const Point& p : lambda.points())
    if (auto q = reduce_odd_axis_point(box.sides(), axis, p)) cells[out.cell_index(*q)] = true;
  return FerrersDiagram(reduced, std::move(cells));
}

namespace {

struct FcPruneState {
  GridCoords grid;
  int height;
  std::size_t dim;
  std::vector<std::uint32_t> even_masks;  // non-empty even subsets of all d+1 axes
  std::vector<std::size_t> orbit_last;    // largest cell index in each column's reflection orbit

  explicit FcPruneState(const BoxDims& box)
      : grid(box.base()), height(box.height()), dim(box.dim()) {
    for (const AxisSubset I : even_subsets_gray(box.axes())) even_masks.push_back(I.mask());
    const std::size_t cols = grid.cells();
    orbit_last.assign(cols, 0);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::uint32_t T = 0; T < (1U << dim); ++T)
        orbit_last[c] = std::max(orbit_last[c], grid.reflect(c, T));
  }

  bool admissible(std::span<const int> e, std::size_t filled) const {
    const std::size_t c = filled - 1;
    const int v = e[c];
    const std::uint32_t last = 1U << dim;
    // Column c holds cells (c,1..v); column r holds (r,1..w). Reflecting with
    // the height axis maps k to h+1-k.
    if (v > 0) {
      for (std::uint32_t I : even_masks) {
        const std::size_t r = grid.reflect(c, I & (last - 1));
        if (r > c) continue;
        const int w = e[r];
        if ((I & last) ? v + w > height : w > 0) return false;
      }
    }
    if (orbit_last[c] == c) {
      // Every column of the orbit is known: column c must be covered. Even
      // T contribute a bottom segment [1, w], odd T (paired with the height
      // axis) a top segment [h+1-w, h].
      int bottom = 0, top = 0;
      for (std::uint32_t T = 0; T < last; ++T) {
        const int w = e[grid.reflect(c, T)];
        if (std::popcount(T) % 2 == 0) bottom = std::max(bottom, w);
        else top = std::max(top, w);
      }
      if (bottom + top < height) return false;
    }
    return true;
  }
};

}  // namespace

PartitionFilter fc_prefix_filter(const BoxDims& box) {
  if (box.has_zero_side()) return {{}, [](const PartitionArray& pi) { return pi.is_sentinel(); }};
  auto state = std::make_shared<const FcPruneState>(box);
  PartitionFilter f;
  f.prefix = [state](std::span<const int> e, std::size_t filled) { return state->admissible(e, filled); };
  f.accept = [box](const PartitionArray& pi) { return is_fc_diagram(diagram_from_array(pi, box)); };
  return f;
}

std::uint64_t count_fc_diagrams(const BoxDims& box) { return count_partitions(box, fc_prefix_filter(box)); }

bool scan_no_fc_two_odd(const BoxDims& box) {
  if (box.odd_side_count() < 2) throw std::invalid_argument("scan_no_fc_two_odd needs at least two odd sides");
  return count_fc_diagrams(box) == 0;
}

}  // namespace hdp
