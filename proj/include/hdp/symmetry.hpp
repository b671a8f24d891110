#pragma once

// Symmetry classes of plane partitions and of quarter complementary plane
// partitions (QCPPs, the d = 2 fully complementary partitions).

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdp/lattice.hpp"
#include "hdp/numeric.hpp"

namespace hdp {

// QTC2C and SQTC2C are QTC2 and SQTC2 with the relation also imposed on the
// centre cell of an odd-sized base.
enum class SymmetryTag { SYM, QSYM, SC, TC, QTC, QTC2, SQTC2, QTC2C, SQTC2C, CYC, QS_QCPP, SC_QCPP, QTC_QCPP };

std::string_view to_string(SymmetryTag tag);
std::optional<SymmetryTag> parse_symmetry_tag(std::string_view name);
bool is_qcpp_tag(SymmetryTag tag);

/// A class together with the box it lives in. Plane partition classes take
/// the raw (a, b, c) box; QCPP classes take the full (2a, 2b, 2c) box.
class SymmetryClass {
 public:
  SymmetryClass(SymmetryTag tag, BoxDims box);

  SymmetryTag tag() const noexcept { return tag_; }
  const BoxDims& box() const noexcept { return box_; }
  /// (a, b, c) for QCPP classes, the box itself otherwise.
  BoxDims half() const;

 private:
  SymmetryTag tag_;
  BoxDims box_;
};

std::ostream& operator<<(std::ostream& os, const SymmetryClass& cls);

/// Exact truth of the class's defining relations. Throws
/// std::invalid_argument when the array does not fit the class's box.
bool predicate(const SymmetryClass& cls, const PartitionArray& pi);

struct SearchOptions {
  std::uint64_t node_budget = 50'000'000;
  unsigned threads = 1;
};

/// Visits every member of the class, in a deterministic order.
void for_each_in_class(const SymmetryClass& cls, const std::function<void(const PartitionArray&)>& visit,
                       const SearchOptions& opts = {});
/// Number of members. Throws BudgetExceeded once the node budget is spent.
BigInt count_class(const SymmetryClass& cls, const SearchOptions& opts = {});

enum class QsMode { recursion, brute };

/// Quasi-symmetric QCPPs in the (2a, 2a, 2c)-box.
BigInt count_qs_qcpp(int a, int c, QsMode mode);
/// Self-complementary QCPPs in the (2a, 2b, 2c)-box.
BigInt count_sc_qcpp(int a, int b, int c);
/// Quasi transpose-complementary QCPPs in the (2a, 2a, 2c)-box.
BigInt count_qtc_qcpp(int a, int c);
/// True iff the quasi transpose-complementary QCPPs are exactly the
/// quasi-symmetric self-complementary ones.
bool qtc_qcpp_is_qs_and_sc(int a, int c);
/// Symmetric QCPPs in the (2a, 2a, 2c)-box.
BigInt count_sym_qcpp(int a, int c);
/// Cyclically symmetric QCPPs in the (2a, 2a, 2a)-box.
BigInt count_cyc_qcpp(int a);

// Quasi transpose-complementary plane partitions in the (n, n, c)-box.

/// Anti-diagonal entries x are replaced by max(x, c - x).
PartitionArray hat_map(const PartitionArray& pi, int c);
/// QTCPP whose anti-diagonal entries are all at least c / 2.
bool is_hat_image(const PartitionArray& pi, int c);
/// Number of QTCPPs sent to `hat` by hat_map.
BigInt omega(const PartitionArray& hat, int c);

struct WeightedCount {
  BigInt value;   // sum of omega over the hat images
  BigInt images;  // number of hat images
};

WeightedCount hat_weighted_count(int n, int c, const SearchOptions& opts = {});

/// North/east lattice path; 'N' is (0, 1), 'E' is (1, 0).
struct NEPath {
  int x0 = 0;
  int y0 = 0;
  std::string steps;

  std::pair<int, int> end() const;
  std::vector<std::pair<int, int>> vertices() const;
  friend bool operator==(const NEPath&, const NEPath&) = default;
};

/// The n non-intersecting paths of a hat image, path i running from
/// (2i, -i) to (n+1+i, floor(c/2) - i).
std::vector<NEPath> qtcpp_paths(const PartitionArray& hat, int c);
/// Inverse of qtcpp_paths.
PartitionArray hat_from_paths(const std::vector<NEPath>& paths, int n, int c);
bool paths_vertex_disjoint(const std::vector<NEPath>& paths);

BigInt spp(int n, int c, const SearchOptions& opts = {});
BigInt tcpp(int n, int c, const SearchOptions& opts = {});
BigInt qtcpp(int n, int c, const SearchOptions& opts = {});
BigInt qspp(int a, int c, const SearchOptions& opts = {});
// The second-kind counts follow the reference tables: QTC2C and SQTC2C
// members of the (a,a,2c)-box. The literal classes of the (a,a,c)-box are
// count_class(QTC2) and count_class(SQTC2), which vanish for odd c once a >= 2.
BigInt qtcpp2(int a, int c, const SearchOptions& opts = {});
BigInt qtcspp2(int a, int c, const SearchOptions& opts = {});

}  // namespace hdp
