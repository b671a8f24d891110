#include "hdp/lattice.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hdp {

BoxDims::BoxDims(std::vector<int> sides) : sides_(std::move(sides)) {
  if (sides_.size() < 2) throw std::invalid_argument("box needs at least two sides");
  int zeros = 0;
  for (int s : sides_) {
    if (s < 0) throw std::invalid_argument("box side must be non-negative");
    if (s > kMaxSide) throw std::invalid_argument("box side exceeds 65536");
    zeros += s == 0;
  }
  if (zeros > 1) throw std::invalid_argument("box may have at most one zero side");
}

bool BoxDims::has_zero_side() const noexcept {
  return std::find(sides_.begin(), sides_.end(), 0) != sides_.end();
}

std::size_t BoxDims::odd_side_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(sides_.begin(), sides_.end(), [](int s) { return s % 2 != 0; }));
}

std::uint64_t BoxDims::cell_count() const noexcept {
  std::uint64_t n = 1;
  for (int s : sides_) {
    if (s == 0) return 0;
    if (n > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(s))
      return std::numeric_limits<std::uint64_t>::max();
    n *= static_cast<std::uint64_t>(s);
  }
  return n;
}

BoxDims BoxDims::doubled() const {
  std::vector<int> s = sides_;
  for (int& x : s) x *= 2;
  return BoxDims(std::move(s));
}

std::ostream& operator<<(std::ostream& os, const BoxDims& box) {
  os << '(';
  for (std::size_t i = 0; i < box.axes(); ++i) os << (i ? "," : "") << box[i];
  return os << ')';
}

std::string to_string(const BoxDims& box) {
  std::ostringstream os;
  os << box;
  return os.str();
}

std::vector<std::size_t> row_major_strides(std::span<const int> shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t k = shape.size(); k-- > 1;)
    strides[k - 1] = strides[k] * static_cast<std::size_t>(shape[k]);
  return strides;
}

std::size_t element_count(std::span<const int> shape) {
  std::size_t n = 1;
  for (int s : shape) n *= static_cast<std::size_t>(s);
  return n;
}

void for_each_index(std::span<const int> shape,
                    const std::function<void(std::span<const int>)>& f) {
  if (element_count(shape) == 0) return;
  std::vector<int> idx(shape.size(), 0);
  while (true) {
    f(idx);
    std::size_t k = shape.size();
    while (k > 0) {
      --k;
      if (++idx[k] < shape[k]) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (shape.empty()) return;
  }
}

int IntGrid::at(std::span<const int> idx) const {
  const auto strides = row_major_strides(shape);
  std::size_t flat = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) flat += strides[k] * static_cast<std::size_t>(idx[k]);
  return values[flat];
}

bool is_weakly_decreasing(std::span<const int> shape, std::span<const int> entries) {
  const auto strides = row_major_strides(shape);
  bool ok = true;
  for_each_index(shape, [&](std::span<const int> idx) {
    if (!ok) return;
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) flat += strides[k] * static_cast<std::size_t>(idx[k]);
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] > 0 && entries[flat - strides[k]] < entries[flat]) ok = false;
  });
  return ok;
}

PartitionArray::PartitionArray(std::vector<int> shape, std::vector<int> entries, int height_cap)
    : shape_(std::move(shape)), entries_(std::move(entries)), height_cap_(height_cap) {
  if (shape_.empty()) throw std::invalid_argument("partition array needs at least one axis");
  for (int s : shape_)
    if (s < 0) throw std::invalid_argument("negative array extent");
  if (entries_.size() != element_count(shape_))
    throw std::invalid_argument("entry count does not match shape");
  if (height_cap_ < 0) throw std::invalid_argument("negative height cap");
  for (int v : entries_)
    if (v < 0 || v > height_cap_) throw std::invalid_argument("entry outside [0, height_cap]");
  if (!is_weakly_decreasing(shape_, entries_))
    throw std::invalid_argument("entries are not weakly decreasing");
}

PartitionArray PartitionArray::from_rows(const std::vector<std::vector<int>>& rows, int height_cap) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return {{static_cast<int>(rows.size()), cols}, std::move(flat), height_cap};
}

PartitionArray PartitionArray::zeros(std::vector<int> shape, int height_cap) {
  std::vector<int> e(element_count(shape), 0);
  return {std::move(shape), std::move(e), height_cap};
}

std::size_t PartitionArray::flat_index(std::span<const int> idx) const {
  if (idx.size() != shape_.size()) throw std::invalid_argument("index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= shape_[k]) throw std::out_of_range("array index out of range");
    flat = flat * static_cast<std::size_t>(shape_[k]) + static_cast<std::size_t>(idx[k]);
  }
  return flat;
}

std::int64_t PartitionArray::total() const noexcept {
  std::int64_t s = 0;
  for (int v : entries_) s += v;
  return s;
}

std::ostream& operator<<(std::ostream& os, const PartitionArray& pi) {
  if (pi.is_sentinel()) return os << "<empty>";
  const auto& shape = pi.shape();
  const std::size_t row = shape.back() == 0 ? 1 : static_cast<std::size_t>(shape.back());
  for (std::size_t i = 0; i < pi.entries().size(); ++i) {
    os << pi.entries()[i];
    os << ((i + 1) % row == 0 ? (i + 1 == pi.entries().size() ? "" : "\n") : " ");
  }
  return os;
}

class PartitionBuilder {
 public:
  static PartitionArray make(std::vector<int> shape, std::vector<int> entries, int cap) {
    return PartitionArray(PartitionArray::Unchecked{}, std::move(shape), std::move(entries), cap);
  }
};

FerrersDiagram::FerrersDiagram(BoxDims box)
    : box_(std::move(box)), cells_(static_cast<std::size_t>(box_.cell_count()), false) {}

FerrersDiagram::FerrersDiagram(BoxDims box, std::vector<bool> cells)
    : box_(std::move(box)), cells_(std::move(cells)) {
  if (cells_.size() != box_.cell_count()) throw std::invalid_argument("cell count mismatch");
  if (!is_downward_closed(box_, cells_)) throw std::invalid_argument("cell set is not downward closed");
}

FerrersDiagram FerrersDiagram::from_points(BoxDims box, std::span<const Point> points) {
  FerrersDiagram d(std::move(box));
  for (const auto& p : points) d.cells_[d.cell_index(p)] = true;
  if (!is_downward_closed(d.box_, d.cells_)) throw std::invalid_argument("cell set is not downward closed");
  return d;
}

FerrersDiagram FerrersDiagram::full(BoxDims box) {
  FerrersDiagram d(std::move(box));
  d.cells_.assign(d.cells_.size(), true);
  return d;
}

std::size_t FerrersDiagram::cell_index(const Point& p) const {
  if (p.size() != box_.axes()) throw std::invalid_argument("point rank mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] < 1 || p[k] > box_[k]) throw std::out_of_range("point outside box");
    flat = flat * static_cast<std::size_t>(box_[k]) + static_cast<std::size_t>(p[k] - 1);
  }
  return flat;
}

Point FerrersDiagram::cell_point(std::size_t cell) const {
  Point p(box_.axes());
  for (std::size_t k = box_.axes(); k-- > 0;) {
    p[k] = static_cast<int>(cell % static_cast<std::size_t>(box_[k])) + 1;
    cell /= static_cast<std::size_t>(box_[k]);
  }
  return p;
}

bool FerrersDiagram::contains(const Point& p) const {
  if (p.size() != box_.axes()) return false;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] < 1 || p[k] > box_[k]) return false;
  return cells_[cell_index(p)];
}

std::size_t FerrersDiagram::size() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), true));
}

std::vector<Point> FerrersDiagram::points() const {
  std::vector<Point> out;
  for (std::size_t c = 0; c < cells_.size(); ++c)
    if (cells_[c]) out.push_back(cell_point(c));
  return out;
}

bool is_downward_closed(const BoxDims& box, const std::vector<bool>& cells) {
  const auto strides = row_major_strides(box.sides());
  bool ok = true;
  for_each_index(box.sides(), [&](std::span<const int> idx) {
    if (!ok) return;
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) flat += strides[k] * static_cast<std::size_t>(idx[k]);
    if (!cells[flat]) return;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] > 0 && !cells[flat - strides[k]]) ok = false;
  });
  return ok;
}

PartitionArray array_from_diagram(const FerrersDiagram& lambda) {
  const BoxDims& box = lambda.box();
  if (box.has_zero_side()) return PartitionArray::empty_sentinel();
  const int h = box.height();
  std::vector<int> shape = box.base();
  std::vector<int> entries(element_count(shape), 0);
  for (std::size_t col = 0; col < entries.size(); ++col) {
    int k = 0;
    while (k < h && lambda.test(col * static_cast<std::size_t>(h) + static_cast<std::size_t>(k))) ++k;
    entries[col] = k;
  }
  return PartitionBuilder::make(std::move(shape), std::move(entries), h);
}

FerrersDiagram diagram_from_array(const PartitionArray& pi, const BoxDims& box) {
  if (pi.is_sentinel()) {
    if (!box.has_zero_side()) throw std::invalid_argument("empty sentinel needs a box with a zero side");
    return FerrersDiagram(box);
  }
  if (pi.shape() != box.base()) throw std::invalid_argument("array shape does not match box");
  const int h = box.height();
  std::vector<bool> cells(static_cast<std::size_t>(box.cell_count()), false);
  for (std::size_t col = 0; col < pi.entries().size(); ++col) {
    const int v = pi.entries()[col];
    if (v > h) throw std::invalid_argument("entry exceeds box height");
    for (int k = 0; k < v; ++k) cells[col * static_cast<std::size_t>(h) + static_cast<std::size_t>(k)] = true;
  }
  return FerrersDiagram(box, std::move(cells));
}

namespace {

class PartitionEnumerator {
 public:
  PartitionEnumerator(const BoxDims& box, const PartitionVisitor& visit, const PartitionFilter& filter)
      : shape_(box.base()), cap_(box.height()), visit_(visit), filter_(filter) {
    const std::size_t n = element_count(shape_);
    entries_.assign(n, 0);
    preds_.resize(n);
    const auto strides = row_major_strides(shape_);
    std::size_t flat = 0;
    for_each_index(shape_, [&](std::span<const int> idx) {
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (idx[k] > 0) preds_[flat].push_back(flat - strides[k]);
      ++flat;
    });
  }

  void run() { fill(0); }

 private:
  void fill(std::size_t cell) {
    if (cell == entries_.size()) {
      PartitionArray pi = PartitionBuilder::make(shape_, entries_, cap_);
#if defined(HDP_CHECKED)
      if (!is_weakly_decreasing(shape_, entries_)) throw std::logic_error("enumeration broke monotonicity");
#endif
      if (!filter_.accept || filter_.accept(pi)) visit_(pi);
      return;
    }
    int hi = cap_;
    for (std::size_t p : preds_[cell]) hi = std::min(hi, entries_[p]);
    for (int v = 0; v <= hi; ++v) {
      entries_[cell] = v;
      if (filter_.prefix && !filter_.prefix(entries_, cell + 1)) continue;
      fill(cell + 1);
    }
    entries_[cell] = 0;
  }

  std::vector<int> shape_;
  int cap_;
  const PartitionVisitor& visit_;
  const PartitionFilter& filter_;
  std::vector<int> entries_;
  std::vector<std::vector<std::size_t>> preds_;
};

}  // namespace

void for_each_partition(const BoxDims& box, const PartitionVisitor& visit, const PartitionFilter& filter) {
  if (box.has_zero_side()) {
    const PartitionArray sentinel;
    if (!filter.accept || filter.accept(sentinel)) visit(sentinel);
    return;
  }
  PartitionEnumerator(box, visit, filter).run();
}

std::vector<PartitionArray> enumerate_partitions(const BoxDims& box, const PartitionFilter& filter) {
  std::vector<PartitionArray> out;
  for_each_partition(box, [&](const PartitionArray& pi) { out.push_back(pi); }, filter);
  return out;
}

std::uint64_t count_partitions(const BoxDims& box, const PartitionFilter& filter) {
  std::uint64_t n = 0;
  for_each_partition(box, [&](const PartitionArray&) { ++n; }, filter);
  return n;
}

}  // namespace hdp
