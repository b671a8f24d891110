#include "hdp/fcp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "hdp/complementation.hpp"

namespace hdp {

namespace {

std::vector<int> doubled_base(std::span<const int> n) {
  std::vector<int> s(n.begin(), n.end() - 1);
  for (int& x : s) x *= 2;
  return s;
}

int zero_count(std::span<const int> n) { return static_cast<int>(std::count(n.begin(), n.end(), 0)); }

bool has_negative(std::span<const int> n) {
  return std::any_of(n.begin(), n.end(), [](int x) { return x < 0; });
}

// True iff every index component except `skip` lies in the corner block.
bool in_corner(std::span<const int> idx, std::span<const int> n, std::size_t skip) {
  for (std::size_t j = 0; j < idx.size(); ++j)
    if (j != skip && idx[j] >= n[j]) return false;
  return true;
}

PartitionArray phi_of_sentinel(std::size_t axis, const BoxDims& n) {
  const std::size_t d = n.dim();
  if (n[axis] != 1) throw std::invalid_argument("phi of the empty array needs n_k = 1 on the step axis");
  const std::vector<int> shape = doubled_base(n.sides());
  const int fill = axis == d ? 2 : n.height();
  std::vector<int> e(element_count(shape), 0);
  std::size_t flat = 0;
  for_each_index(shape, [&](std::span<const int> idx) {
    if (in_corner(idx, n.sides(), axis)) e[flat] = fill;
    ++flat;
  });
  return PartitionArray(shape, std::move(e), 2 * n.height());
}

}  // namespace

PartitionArray phi_unchecked(std::size_t axis, const BoxDims& n, const PartitionArray& parent) {
  const std::size_t d = n.dim();
  if (axis > d) throw std::invalid_argument("phi axis out of range");
  if (n.has_zero_side()) throw std::invalid_argument("phi target box must be positive");
  if (parent.is_sentinel()) return phi_of_sentinel(axis, n);

  std::vector<int> np = n.sides();
  --np[axis];
  const std::vector<int> shape = doubled_base(n.sides());
  if (parent.shape() != doubled_base(np)) throw std::invalid_argument("parent shape does not match n - e_k");
  std::vector<int> e(element_count(shape), 0);
  std::size_t flat = 0;
  if (axis == d) {
    for_each_index(shape, [&](std::span<const int> idx) {
      e[flat] = parent.entries()[flat] + (in_corner(idx, n.sides(), d) ? 2 : 0);
      ++flat;
    });
  } else {
    const int m = np[axis];
    std::vector<int> src(d);
    for_each_index(shape, [&](std::span<const int> idx) {
      const int ik = idx[axis];
      if (ik < m || ik >= m + 2) {
        std::copy(idx.begin(), idx.end(), src.begin());
        if (ik >= m + 2) src[axis] -= 2;
        e[flat] = parent.at(src);
      } else if (in_corner(idx, n.sides(), axis)) {
        e[flat] = n.height();
      }
      ++flat;
    });
  }
  return PartitionArray(shape, std::move(e), 2 * n.height());
}

PartitionArray phi(std::size_t axis, const BoxDims& n, const PartitionArray& parent) {
  if (axis > n.dim()) throw std::invalid_argument("phi axis out of range");
  std::vector<int> np = n.sides();
  if (np[axis] == 0) throw std::invalid_argument("phi target box must be positive");
  --np[axis];
  if (!is_fc_array(parent, BoxDims(np))) throw std::invalid_argument("phi parent is not in FCP(n - e_k)");
  return phi_unchecked(axis, n, parent);
}

FcpDecomposition decompose(const PartitionArray& pi, const BoxDims& n) {
  if (n.has_zero_side()) throw std::invalid_argument("decompose needs positive half-lengths");
  if (!is_fc_array(pi, n)) throw std::invalid_argument("decompose input is not fully complementary");
  const std::size_t d = n.dim();
  const int h = n.height();
  std::vector<int> corner(n.sides().begin(), n.sides().end() - 1);
  for (int& x : corner) --x;

  std::size_t axis = d;
  if (pi.at(corner) < h + 1) {
    axis = d + 1;
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<int> idx = corner;
      ++idx[k];
      if (pi.at(idx) == h) {
        axis = k;
        break;
      }
    }
    if (axis > d) throw std::logic_error("no decomposition axis found for a fully complementary array");
  }

  std::vector<int> np = n.sides();
  --np[axis];
  PartitionArray parent;
  if (np[axis] > 0) {
    const std::vector<int> pshape = doubled_base(np);
    std::vector<int> e(element_count(pshape));
    std::size_t flat = 0;
    std::vector<int> src(d);
    for_each_index(pshape, [&](std::span<const int> idx) {
      std::copy(idx.begin(), idx.end(), src.begin());
      if (axis == d) {
        e[flat] = pi.at(src) - (in_corner(idx, n.sides(), d) ? 2 : 0);
      } else {
        if (src[axis] >= np[axis]) src[axis] += 2;
        e[flat] = pi.at(src);
      }
      ++flat;
    });
    parent = PartitionArray(pshape, std::move(e), 2 * np[d]);
  }
  if (phi_unchecked(axis, n, parent) != pi) throw std::logic_error("decomposition does not invert phi");
#if defined(HDP_CHECKED)
  if (!is_fc_array(parent, BoxDims(np))) throw std::logic_error("decomposition parent is not fully complementary");
#endif
  return {axis, std::move(parent)};
}

namespace {

void fcp_rec(std::vector<int>& n, const FcpVisitor& visit) {
  if (has_negative(n)) return;
  const int zeros = zero_count(n);
  if (zeros == 1) {
    visit(PartitionArray::empty_sentinel());
    return;
  }
  if (zeros > 1) return;
  const BoxDims box(n);
  for (std::size_t k = 0; k < n.size(); ++k) {
    --n[k];
    fcp_rec(n, [&](const PartitionArray& sigma) { visit(phi_unchecked(k, box, sigma)); });
    ++n[k];
  }
}

class FcpCounter {
 public:
  BigInt count(const std::vector<int>& n) {
    if (has_negative(n)) return 0;
    const int zeros = zero_count(n);
    if (zeros > 0) return zeros == 1 ? 1 : 0;
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    }
    BigInt total = 0;
    std::vector<int> m = n;
    for (std::size_t k = 0; k < m.size(); ++k) {
      --m[k];
      total += count(m);
      ++m[k];
    }
    std::unique_lock lock(mutex_);
    memo_.emplace(n, total);
    return total;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::vector<int>, BigInt> memo_;
};

FcpCounter& counter() {
  static FcpCounter c;
  return c;
}

}  // namespace

void for_each_fcp(const BoxDims& n, const FcpVisitor& visit) {
  std::vector<int> v = n.sides();
  fcp_rec(v, visit);
}

std::vector<PartitionArray> enumerate_fcp(const BoxDims& n) {
  std::vector<PartitionArray> out;
  for_each_fcp(n, [&](const PartitionArray& pi) { out.push_back(pi); });
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_fcp(std::span<const int> n) {
  if (n.size() < 2) throw std::invalid_argument("count_fcp needs at least two half-lengths");
  return counter().count(std::vector<int>(n.begin(), n.end()));
}

BigInt count_fc_box(const BoxDims& sides) {
  const std::size_t odd = sides.odd_side_count();
  if (odd >= 2) return 0;
  std::vector<int> n = sides.sides();
  for (int& s : n) {
    if (s % 2 != 0) --s;
    s /= 2;
  }
  // A zero half-length leaves only the empty array; two of them leave nothing.
  return count_fcp(n);
}

std::vector<int> LatticePath::end() const {
  std::vector<int> p = start;
  for (std::size_t k : steps) {
    if (k >= p.size()) throw std::invalid_argument("path step axis out of range");
    ++p[k];
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const LatticePath& p) {
  os << '(';
  for (std::size_t i = 0; i < p.start.size(); ++i) os << (i ? "," : "") << p.start[i];
  os << ')';
  for (std::size_t k : p.steps) os << " e" << k + 1;
  return os;
}

void validate_path(const LatticePath& p) {
  if (p.start.size() < 2) throw std::invalid_argument("path start needs at least two coordinates");
  if (has_negative(p.start)) throw std::invalid_argument("path start has a negative coordinate");
  if (zero_count(p.start) != 1) throw std::invalid_argument("path start must have exactly one zero coordinate");
  if (p.steps.empty()) throw std::invalid_argument("path needs at least one step");
  for (std::size_t k : p.steps)
    if (k >= p.start.size()) throw std::invalid_argument("path step axis out of range");
  if (p.start[p.steps.front()] != 0)
    throw std::invalid_argument("first step must leave the boundary (coordinates not positive after it)");
}

LatticePath fcp_to_path(const PartitionArray& pi, const BoxDims& n) {
  if (n.has_zero_side()) throw std::invalid_argument("fcp_to_path needs positive half-lengths");
  std::vector<int> box = n.sides();
  PartitionArray cur = pi;
  std::vector<std::size_t> rev;
  while (!cur.is_sentinel()) {
    FcpDecomposition dec = decompose(cur, BoxDims(box));
    rev.push_back(dec.axis);
    --box[dec.axis];
    cur = std::move(dec.parent);
  }
  return {box, {rev.rbegin(), rev.rend()}};
}

PartitionArray path_to_fcp(const LatticePath& p) {
  validate_path(p);
  std::vector<int> box = p.start;
  PartitionArray cur;
  for (std::size_t k : p.steps) {
    ++box[k];
    cur = phi_unchecked(k, BoxDims(box), cur);
  }
  return cur;
}

namespace {

void paths_rec(std::vector<int>& n, std::vector<std::size_t>& rev, std::vector<LatticePath>& out) {
  for (std::size_t k = 0; k < n.size(); ++k) {
    --n[k];
    rev.push_back(k);
    const int zeros = zero_count(n);
    if (n[k] == 0 && zeros == 1) out.push_back({n, {rev.rbegin(), rev.rend()}});
    else if (zeros == 0) paths_rec(n, rev, out);
    rev.pop_back();
    ++n[k];
  }
}

}  // namespace

std::vector<LatticePath> paths_ending_at(std::span<const int> n) {
  std::vector<LatticePath> out;
  std::vector<int> v(n.begin(), n.end());
  if (v.size() < 2 || has_negative(v) || zero_count(v) != 0) return out;
  std::vector<std::size_t> rev;
  paths_rec(v, rev, out);
  std::sort(out.begin(), out.end(), [](const LatticePath& a, const LatticePath& b) {
    return std::tie(a.start, a.steps) < std::tie(b.start, b.steps);
  });
  return out;
}

}  // namespace hdp
