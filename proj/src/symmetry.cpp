#include "hdp/symmetry.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include "hdp/complementation.hpp"
#include "hdp/fcp.hpp"

namespace hdp {

namespace {

constexpr std::array<std::pair<SymmetryTag, std::string_view>, 13> kTagNames{{
    {SymmetryTag::SYM, "SYM"},
    {SymmetryTag::QSYM, "QSYM"},
    {SymmetryTag::SC, "SC"},
    {SymmetryTag::TC, "TC"},
    {SymmetryTag::QTC, "QTC"},
    {SymmetryTag::QTC2, "QTC2"},
    {SymmetryTag::SQTC2, "SQTC2"},
    {SymmetryTag::QTC2C, "QTC2C"},
    {SymmetryTag::SQTC2C, "SQTC2C"},
    {SymmetryTag::CYC, "CYC"},
    {SymmetryTag::QS_QCPP, "QS_QCPP"},
    {SymmetryTag::SC_QCPP, "SC_QCPP"},
    {SymmetryTag::QTC_QCPP, "QTC_QCPP"},
}};

}  // namespace

std::string_view to_string(SymmetryTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return name;
  return "?";
}

std::optional<SymmetryTag> parse_symmetry_tag(std::string_view name) {
  for (const auto& [t, n] : kTagNames)
    if (n == name) return t;
  return std::nullopt;
}

bool is_qcpp_tag(SymmetryTag tag) {
  return tag == SymmetryTag::QS_QCPP || tag == SymmetryTag::SC_QCPP || tag == SymmetryTag::QTC_QCPP;
}

SymmetryClass::SymmetryClass(SymmetryTag tag, BoxDims box) : tag_(tag), box_(std::move(box)) {
  if (box_.axes() != 3) throw std::invalid_argument("symmetry classes live in three-sided boxes");
  const bool square = tag_ != SymmetryTag::SC && tag_ != SymmetryTag::SC_QCPP;
  if (square && box_[0] != box_[1]) throw std::invalid_argument(std::string(to_string(tag_)) + " needs a square base");
  if (tag_ == SymmetryTag::CYC && box_[2] != box_[0]) throw std::invalid_argument("CYC needs an (a,a,a)-box");
  if (is_qcpp_tag(tag_))
    for (int s : box_.sides())
      if (s % 2 != 0) throw std::invalid_argument("QCPP classes need even sides");
}

BoxDims SymmetryClass::half() const {
  if (!is_qcpp_tag(tag_)) return box_;
  return BoxDims{box_[0] / 2, box_[1] / 2, box_[2] / 2};
}

std::ostream& operator<<(std::ostream& os, const SymmetryClass& cls) {
  return os << to_string(cls.tag()) << ' ' << cls.box();
}

namespace {

// A linking relation between two cells (row-major, 0-based): equal values,
// or values summing to the class's complement constant.
struct Relation {
  std::size_t p;
  std::size_t q;
  bool complement;
};

enum class RelKind { Sym, QSym, SelfComp, TransComp, QTransComp, QTransComp2, QTransComp2Centre };

std::vector<RelKind> kinds_of(SymmetryTag tag) {
  switch (tag) {
    case SymmetryTag::SYM: return {RelKind::Sym};
    case SymmetryTag::QSYM: return {RelKind::QSym};
    case SymmetryTag::SC: return {RelKind::SelfComp};
    case SymmetryTag::TC: return {RelKind::TransComp};
    case SymmetryTag::QTC: return {RelKind::QTransComp};
    case SymmetryTag::QTC2: return {RelKind::QTransComp2};
    case SymmetryTag::SQTC2: return {RelKind::Sym, RelKind::QTransComp2};
    case SymmetryTag::QTC2C: return {RelKind::QTransComp2Centre};
    case SymmetryTag::SQTC2C: return {RelKind::Sym, RelKind::QTransComp2Centre};
    case SymmetryTag::QS_QCPP: return {RelKind::QSym};
    case SymmetryTag::SC_QCPP: return {RelKind::SelfComp};
    case SymmetryTag::QTC_QCPP: return {RelKind::QTransComp};
    case SymmetryTag::CYC: return {};
  }
  return {};
}

std::vector<Relation> relations(const std::vector<RelKind>& kinds, int rows, int cols) {
  std::vector<Relation> out;
  auto cell = [cols](int i, int j) { return static_cast<std::size_t>(i * cols + j); };
  for (RelKind k : kinds)
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const bool anti = i + j == rows - 1;
        switch (k) {
          case RelKind::Sym:
            out.push_back({cell(i, j), cell(j, i), false});
            break;
          case RelKind::QSym:
            if (!anti) out.push_back({cell(i, j), cell(j, i), false});
            break;
          case RelKind::SelfComp:
            out.push_back({cell(i, j), cell(rows - 1 - i, cols - 1 - j), true});
            break;
          case RelKind::TransComp:
            out.push_back({cell(i, j), cell(rows - 1 - j, rows - 1 - i), true});
            break;
          case RelKind::QTransComp:
            if (!anti) out.push_back({cell(i, j), cell(rows - 1 - j, rows - 1 - i), true});
            break;
          case RelKind::QTransComp2:
            if (i != j) out.push_back({cell(i, j), cell(rows - 1 - j, rows - 1 - i), true});
            break;
          case RelKind::QTransComp2Centre:
            if (i != j || 2 * i == rows - 1) out.push_back({cell(i, j), cell(rows - 1 - j, rows - 1 - i), true});
            break;
        }
      }
  return out;
}

// The complement constant: the box height for plane partition classes, the
// half height for QCPP classes.
int complement_constant(const SymmetryClass& cls) {
  return is_qcpp_tag(cls.tag()) ? cls.box()[2] / 2 : cls.box()[2];
}

bool cyclically_symmetric(const PartitionArray& pi) {
  const int a = pi.shape()[0];
  if (pi.shape()[1] != a) return false;
  const auto& e = pi.entries();
  // (i,j,k) in the diagram iff k <= pi_ij; it must imply (j,k,i), i.e. i <= pi_jk.
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j)
      for (int k = 1; k <= e[static_cast<std::size_t>((i - 1) * a + j - 1)]; ++k) {
        if (k > a) return false;
        if (i > e[static_cast<std::size_t>((j - 1) * a + k - 1)]) return false;
      }
  return true;
}

bool relations_hold(const std::vector<Relation>& rels, const std::vector<int>& e, int c) {
  for (const Relation& r : rels)
    if (r.complement ? e[r.p] + e[r.q] != c : e[r.p] != e[r.q]) return false;
  return true;
}

}  // namespace

bool predicate(const SymmetryClass& cls, const PartitionArray& pi) {
  const BoxDims& box = cls.box();
  if (box.has_zero_side()) {
    if (!pi.is_sentinel()) throw std::invalid_argument("a box with a zero side only holds the empty array");
    return true;
  }
  if (pi.is_sentinel() || pi.shape() != box.base())
    throw std::invalid_argument("array shape does not match the class's box");
  for (int v : pi.entries())
    if (v > box.height()) throw std::invalid_argument("array entry exceeds the box height");
  if (cls.tag() == SymmetryTag::CYC) return cyclically_symmetric(pi);
  if (is_qcpp_tag(cls.tag()) && !is_fc_array(pi, cls.half())) return false;
  return relations_hold(relations(kinds_of(cls.tag()), box[0], box[1]), pi.entries(), complement_constant(cls));
}

namespace {

// Depth-first search over the orbits of the linking relations. Each orbit
// carries one free value v; a cell of odd parity holds c - v.
class OrbitSearch {
 public:
  OrbitSearch(int rows, int cols, int c, const std::vector<Relation>& rels) : rows_(rows), cols_(cols), c_(c) {
    const std::size_t n = static_cast<std::size_t>(rows) * cols;
    parent_.resize(n);
    parity_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    std::vector<bool> self_comp(n, false);
    for (const Relation& r : rels) {
      auto [rp, pp] = find(r.p);
      auto [rq, pq] = find(r.q);
      const int want = r.complement ? 1 : 0;
      if (rp == rq) {
        if ((pp ^ pq) != want) self_comp[rp] = true;
        continue;
      }
      parent_[rq] = rp;
      parity_[rq] = pp ^ pq ^ want;
    }
    // Orbits ordered by their smallest cell.
    std::vector<std::size_t> orbit_of_root(n, n);
    cell_orbit_.resize(n);
    cell_parity_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto [r, p] = find(i);
      if (orbit_of_root[r] == n) {
        orbit_of_root[r] = orbits_.size();
        orbits_.push_back({});
      }
      Orbit& o = orbits_[orbit_of_root[r]];
      o.cells.push_back(i);
      cell_orbit_[i] = orbit_of_root[r];
      cell_parity_[i] = p;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (self_comp[i]) orbits_[orbit_of_root[find(i).first]].forced = true;
    for (Orbit& o : orbits_) prepare(o);
  }

  std::size_t orbit_count() const { return orbits_.size(); }

  // Range of the first orbit's free value, for splitting work.
  std::pair<int, int> first_range() const { return {orbits_[0].lo, orbits_[0].hi}; }

  template <class Leaf>
  void run(int v_first_mod, int v_first_step, std::atomic<std::uint64_t>& nodes, std::uint64_t budget, Leaf&& leaf) {
    values_.assign(orbits_.size(), 0);
    if (orbits_.empty()) {
      leaf(values_);
      return;
    }
    search(0, v_first_mod, v_first_step, nodes, budget, leaf);
  }

  std::vector<int> entries(const std::vector<int>& orbit_values) const {
    std::vector<int> e(cell_orbit_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int v = orbit_values[cell_orbit_[i]];
      e[i] = cell_parity_[i] ? c_ - v : v;
    }
    return e;
  }

 private:
  struct Edge {
    int parity;          // parity of the orbit's own cell
    std::size_t other;   // neighbouring cell in an earlier orbit
    bool other_is_above; // the neighbour must hold the larger value
  };
  struct Orbit {
    std::vector<std::size_t> cells;
    bool forced = false;
    int lo = 0;
    int hi = 0;
    std::vector<Edge> edges;
  };

  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }

  void prepare(Orbit& o) {
    const std::size_t self = cell_orbit_[o.cells.front()];
    o.lo = 0;
    o.hi = c_;
    if (o.forced) {
      if (c_ % 2 != 0) {
        o.lo = 1;
        o.hi = 0;
        return;
      }
      o.lo = o.hi = c_ / 2;
    }
    for (std::size_t x : o.cells) {
      const int i = static_cast<int>(x) / cols_;
      const int j = static_cast<int>(x) % cols_;
      const std::array<std::pair<int, int>, 4> nb{{{i - 1, j}, {i, j - 1}, {i + 1, j}, {i, j + 1}}};
      for (std::size_t t = 0; t < nb.size(); ++t) {
        const auto [ni, nj] = nb[t];
        if (ni < 0 || nj < 0 || ni >= rows_ || nj >= cols_) continue;
        const std::size_t y = static_cast<std::size_t>(ni * cols_ + nj);
        const bool above = t < 2;
        if (cell_orbit_[y] == self) {
          // Same orbit: only a parity flip constrains v, and only once per pair.
          if (above && cell_parity_[x] != cell_parity_[y]) {
            // value(y) >= value(x)
            if (cell_parity_[y] == 0) o.lo = std::max(o.lo, (c_ + 1) / 2);
            else o.hi = std::min(o.hi, c_ / 2);
          }
        } else if (cell_orbit_[y] < self) {
          o.edges.push_back({cell_parity_[x], y, above});
        }
      }
    }
  }

  int cell_value(std::size_t y) const {
    const int v = values_[cell_orbit_[y]];
    return cell_parity_[y] ? c_ - v : v;
  }

  template <class Leaf>
  void search(std::size_t k, int mod, int step, std::atomic<std::uint64_t>& nodes, std::uint64_t budget, Leaf& leaf) {
    if (k == orbits_.size()) {
      leaf(values_);
      return;
    }
    const Orbit& o = orbits_[k];
    int lo = o.lo;
    int hi = o.hi;
    for (const Edge& e : o.edges) {
      const int w = cell_value(e.other);
      // Own value u = v (parity 0) or c - v (parity 1); need u <= w when the
      // neighbour is above, u >= w otherwise.
      if (e.other_is_above) {
        if (e.parity == 0) hi = std::min(hi, w);
        else lo = std::max(lo, c_ - w);
      } else {
        if (e.parity == 0) lo = std::max(lo, w);
        else hi = std::min(hi, c_ - w);
      }
    }
    for (int v = lo; v <= hi; ++v) {
      if (k == 0 && step > 1 && ((v - lo) % step) != mod) continue;
      if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget)
        throw BudgetExceeded("search node budget exhausted");
      values_[k] = v;
      search(k + 1, mod, step, nodes, budget, leaf);
    }
  }

  int rows_;
  int cols_;
  int c_;
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<std::size_t> cell_orbit_;
  std::vector<int> cell_parity_;
  std::vector<Orbit> orbits_;
  std::vector<int> values_;
};

std::uint64_t count_pp_class(const SymmetryClass& cls, const SearchOptions& opts) {
  const BoxDims& box = cls.box();
  const auto rels = relations(kinds_of(cls.tag()), box[0], box[1]);
  const OrbitSearch proto(box[0], box[1], box[2], rels);
  std::atomic<std::uint64_t> nodes{0};
  const unsigned threads = std::max(1U, opts.threads);
  if (threads == 1 || proto.orbit_count() == 0) {
    OrbitSearch s = proto;
    std::uint64_t count = 0;
    s.run(0, 1, nodes, opts.node_budget, [&](const std::vector<int>&) { ++count; });
    return count;
  }
  std::vector<std::uint64_t> counts(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        OrbitSearch s = proto;
        s.run(static_cast<int>(t), static_cast<int>(threads), nodes, opts.node_budget,
              [&](const std::vector<int>&) { ++counts[t]; });
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace

void for_each_in_class(const SymmetryClass& cls, const std::function<void(const PartitionArray&)>& visit,
                       const SearchOptions& opts) {
  const BoxDims& box = cls.box();
  if (box.has_zero_side()) {
    visit(PartitionArray::empty_sentinel());
    return;
  }
  std::uint64_t nodes = 0;
  auto spend = [&] {
    if (++nodes > opts.node_budget) throw BudgetExceeded("search node budget exhausted");
  };
  if (is_qcpp_tag(cls.tag())) {
    for_each_fcp(cls.half(), [&](const PartitionArray& pi) {
      spend();
      if (predicate(cls, pi)) visit(pi);
    });
    return;
  }
  if (cls.tag() == SymmetryTag::CYC) {
    for_each_partition(box, [&](const PartitionArray& pi) {
      spend();
      if (cyclically_symmetric(pi)) visit(pi);
    });
    return;
  }
  const auto rels = relations(kinds_of(cls.tag()), box[0], box[1]);
  OrbitSearch s(box[0], box[1], box[2], rels);
  std::atomic<std::uint64_t> counter{0};
  s.run(0, 1, counter, opts.node_budget, [&](const std::vector<int>& values) {
    visit(PartitionArray(box.base(), s.entries(values), box.height()));
  });
}

BigInt count_class(const SymmetryClass& cls, const SearchOptions& opts) {
  if (cls.box().has_zero_side()) return 1;
  if (is_qcpp_tag(cls.tag()) || cls.tag() == SymmetryTag::CYC) {
    BigInt n = 0;
    for_each_in_class(cls, [&](const PartitionArray&) { ++n; }, opts);
    return n;
  }
  return count_pp_class(cls, opts);
}

namespace {

BigInt qs_recursion(int a, int c, std::map<std::pair<int, int>, BigInt>& memo) {
  if (a < 0 || c < 0) return 0;
  if (a == 0 || c == 0) return (a == 0) != (c == 0) ? 1 : 0;
  if (auto it = memo.find({a, c}); it != memo.end()) return it->second;
  BigInt v = 2 * qs_recursion(a - 1, c, memo) + qs_recursion(a, c - 1, memo);
  memo.emplace(std::make_pair(a, c), v);
  return v;
}

BigInt count_fcp_filtered(const BoxDims& half, const std::function<bool(const PartitionArray&)>& keep) {
  BigInt n = 0;
  for_each_fcp(half, [&](const PartitionArray& pi) {
    if (keep(pi)) ++n;
  });
  return n;
}

void require_non_negative(std::initializer_list<int> xs) {
  for (int x : xs)
    if (x < 0) throw std::invalid_argument("parameters must be non-negative");
}

}  // namespace

BigInt count_qs_qcpp(int a, int c, QsMode mode) {
  require_non_negative({a, c});
  if (mode == QsMode::recursion) {
    std::map<std::pair<int, int>, BigInt> memo;
    return qs_recursion(a, c, memo);
  }
  // A zero parameter leaves only the empty array, except at the origin.
  if (a == 0 || c == 0) return (a == 0) != (c == 0) ? 1 : 0;
  return count_class(SymmetryClass(SymmetryTag::QS_QCPP, BoxDims{2 * a, 2 * a, 2 * c}));
}

BigInt count_sc_qcpp(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("count_sc_qcpp needs positive parameters");
  return count_class(SymmetryClass(SymmetryTag::SC_QCPP, BoxDims{2 * a, 2 * b, 2 * c}));
}

BigInt count_qtc_qcpp(int a, int c) {
  if (a < 1 || c < 1) throw std::invalid_argument("count_qtc_qcpp needs positive parameters");
  return count_class(SymmetryClass(SymmetryTag::QTC_QCPP, BoxDims{2 * a, 2 * a, 2 * c}));
}

bool qtc_qcpp_is_qs_and_sc(int a, int c) {
  if (a < 1 || c < 1) throw std::invalid_argument("qtc_qcpp_is_qs_and_sc needs positive parameters");
  const BoxDims full{2 * a, 2 * a, 2 * c};
  const SymmetryClass qtc(SymmetryTag::QTC_QCPP, full);
  const SymmetryClass qs(SymmetryTag::QS_QCPP, full);
  const SymmetryClass sc(SymmetryTag::SC_QCPP, full);
  bool same = true;
  for_each_fcp(BoxDims{a, a, c}, [&](const PartitionArray& pi) {
    if (predicate(qtc, pi) != (predicate(qs, pi) && predicate(sc, pi))) same = false;
  });
  return same;
}

BigInt count_sym_qcpp(int a, int c) {
  if (a < 1 || c < 1) throw std::invalid_argument("count_sym_qcpp needs positive parameters");
  const SymmetryClass sym(SymmetryTag::SYM, BoxDims{2 * a, 2 * a, 2 * c});
  return count_fcp_filtered(BoxDims{a, a, c}, [&](const PartitionArray& pi) { return predicate(sym, pi); });
}

BigInt count_cyc_qcpp(int a) {
  if (a < 1) throw std::invalid_argument("count_cyc_qcpp needs a positive parameter");
  const SymmetryClass cyc(SymmetryTag::CYC, BoxDims{2 * a, 2 * a, 2 * a});
  return count_fcp_filtered(BoxDims{a, a, a}, [&](const PartitionArray& pi) { return predicate(cyc, pi); });
}

namespace {

void require_qtcpp(const PartitionArray& pi, int c) {
  if (pi.is_sentinel() || pi.dim() != 2 || pi.shape()[0] != pi.shape()[1])
    throw std::invalid_argument("expected a square plane partition");
  const int n = pi.shape()[0];
  if (c < 0 || !predicate(SymmetryClass(SymmetryTag::QTC, BoxDims{n, n, c}), pi))
    throw std::invalid_argument("not a quasi transpose-complementary plane partition");
}

}  // namespace

PartitionArray hat_map(const PartitionArray& pi, int c) {
  require_qtcpp(pi, c);
  const int n = pi.shape()[0];
  std::vector<int> e = pi.entries();
  for (int j = 0; j < n; ++j) {
    int& x = e[static_cast<std::size_t>((n - 1 - j) * n + j)];
    x = std::max(x, c - x);
  }
  return PartitionArray(pi.shape(), std::move(e), c);
}

bool is_hat_image(const PartitionArray& pi, int c) {
  if (pi.is_sentinel() || pi.dim() != 2 || pi.shape()[0] != pi.shape()[1] || c < 0) return false;
  const int n = pi.shape()[0];
  for (int v : pi.entries())
    if (v > c) return false;
  if (!predicate(SymmetryClass(SymmetryTag::QTC, BoxDims{n, n, c}), pi)) return false;
  for (int j = 0; j < n; ++j)
    if (2 * pi.entries()[static_cast<std::size_t>((n - 1 - j) * n + j)] < c) return false;
  return true;
}

BigInt omega(const PartitionArray& hat, int c) {
  if (!is_hat_image(hat, c)) throw std::invalid_argument("omega needs a hat image");
  const int n = hat.shape()[0];
  int exponent = n;
  if (c % 2 == 0)
    for (int j = 0; j < n; ++j)
      if (hat.entries()[static_cast<std::size_t>((n - 1 - j) * n + j)] == c / 2) --exponent;
  return BigInt(1) << exponent;
}

WeightedCount hat_weighted_count(int n, int c, const SearchOptions& opts) {
  if (n < 1 || c < 0) throw std::invalid_argument("hat_weighted_count needs n >= 1, c >= 0");
  WeightedCount w{0, 0};
  if (c == 0) {
    // The zero box holds only the empty array, its own hat image.
    w.value = 1;
    w.images = 1;
    return w;
  }
  for_each_in_class(SymmetryClass(SymmetryTag::QTC, BoxDims{n, n, c}), [&](const PartitionArray& pi) {
    if (!is_hat_image(pi, c)) return;
    w.value += omega(pi, c);
    ++w.images;
  }, opts);
  return w;
}

std::pair<int, int> NEPath::end() const {
  int x = x0, y = y0;
  for (char s : steps) (s == 'N' ? y : x) += 1;
  return {x, y};
}

std::vector<std::pair<int, int>> NEPath::vertices() const {
  std::vector<std::pair<int, int>> v{{x0, y0}};
  int x = x0, y = y0;
  for (char s : steps) {
    if (s == 'N') ++y;
    else if (s == 'E') ++x;
    else throw std::invalid_argument("path steps must be N or E");
    v.emplace_back(x, y);
  }
  return v;
}

std::vector<NEPath> qtcpp_paths(const PartitionArray& hat, int c) {
  if (!is_hat_image(hat, c)) throw std::invalid_argument("qtcpp_paths needs a hat image");
  const int n = hat.shape()[0];
  const int ch = c / 2;
  const int base = c - ch;
  std::vector<NEPath> out;
  for (int i = 1; i <= n; ++i) {
    NEPath p{2 * i, -i, {}};
    int y = -i;
    // Column i of the upper-left triangle, read from the anti-diagonal upwards.
    for (int row = n + 1 - i; row >= 1; --row) {
      const int target = -i + hat.entries()[static_cast<std::size_t>((row - 1) * n + i - 1)] - base;
      p.steps.append(static_cast<std::size_t>(target - y), 'N');
      y = target;
      p.steps.push_back('E');
    }
    p.steps.append(static_cast<std::size_t>(ch - i - y), 'N');
    out.push_back(std::move(p));
  }
#if defined(HDP_CHECKED)
  if (!paths_vertex_disjoint(out)) throw std::logic_error("hat image paths intersect");
#endif
  return out;
}

PartitionArray hat_from_paths(const std::vector<NEPath>& paths, int n, int c) {
  if (n < 1 || static_cast<int>(paths.size()) != n) throw std::invalid_argument("expected one path per column");
  const int ch = c / 2;
  const int base = c - ch;
  std::vector<int> e(static_cast<std::size_t>(n) * n, -1);
  for (int i = 1; i <= n; ++i) {
    const NEPath& p = paths[static_cast<std::size_t>(i - 1)];
    if (p.x0 != 2 * i || p.y0 != -i || p.end() != std::make_pair(n + 1 + i, ch - i))
      throw std::invalid_argument("path endpoints do not match the hat-image family");
    int y = p.y0;
    int row = n + 1 - i;
    for (char s : p.steps) {
      if (s == 'N') {
        ++y;
      } else if (s == 'E') {
        e[static_cast<std::size_t>((row - 1) * n + i - 1)] = y + i + base;
        --row;
      } else {
        throw std::invalid_argument("path steps must be N or E");
      }
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j > n + 1)
        e[static_cast<std::size_t>((i - 1) * n + j - 1)] = c - e[static_cast<std::size_t>((n - j) * n + n - i)];
  for (int v : e)
    if (v < 0 || v > c) throw std::invalid_argument("paths do not describe a hat image");
  if (!is_weakly_decreasing(std::vector<int>{n, n}, e)) throw std::invalid_argument("paths do not describe a hat image");
  PartitionArray hat({n, n}, std::move(e), c);
  if (!is_hat_image(hat, c)) throw std::invalid_argument("paths do not describe a hat image");
  return hat;
}

bool paths_vertex_disjoint(const std::vector<NEPath>& paths) {
  std::set<std::pair<int, int>> seen;
  for (const NEPath& p : paths)
    for (const auto& v : p.vertices())
      if (!seen.insert(v).second) return false;
  return true;
}

namespace {

BigInt square_class(SymmetryTag tag, int n, int c, const SearchOptions& opts) {
  if (n < 0 || c < 0) throw std::invalid_argument("parameters must be non-negative");
  if (n == 0) return 1;
  return count_class(SymmetryClass(tag, BoxDims{n, n, c}), opts);
}

}  // namespace

BigInt spp(int n, int c, const SearchOptions& opts) { return square_class(SymmetryTag::SYM, n, c, opts); }
BigInt tcpp(int n, int c, const SearchOptions& opts) { return square_class(SymmetryTag::TC, n, c, opts); }
BigInt qtcpp(int n, int c, const SearchOptions& opts) { return square_class(SymmetryTag::QTC, n, c, opts); }
BigInt qspp(int a, int c, const SearchOptions& opts) { return square_class(SymmetryTag::QSYM, a, c, opts); }
BigInt qtcpp2(int a, int c, const SearchOptions& opts) { return square_class(SymmetryTag::QTC2C, a, 2 * c, opts); }
BigInt qtcspp2(int a, int c, const SearchOptions& opts) { return square_class(SymmetryTag::SQTC2C, a, 2 * c, opts); }

}  // namespace hdp
