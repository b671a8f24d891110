#pragma once

// Self-verification suites: each one recomputes a family of identities by
// independent routes and records every disagreement.

#include <string>
#include <vector>

#include <json.hpp>

#include "hdp/symmetry.hpp"

namespace hdp {

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool budget_exceeded = false;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return failures.empty() && !budget_exceeded; }
  /// Records one check; `what` is kept only when it fails.
  void check(bool ok, const std::string& what);
};

nlohmann::json to_json(const SuiteReport& r);

/// Four FCPs for half-lengths (1,1,1,1), and the same four diagrams among
/// all order ideals of the (2,2,2,2)-box.
SuiteReport verify_fcp_baseline();

/// Generating-function coefficients against the recurrence for d = 1..3 and
/// total degree <= cap, and against pruned exhaustion of the doubled box
/// whenever that box has at most max_cells cells.
SuiteReport verify_genfun(int cap = 8, std::uint64_t max_cells = 4096);

/// Path bijection round trips for d <= 3, sum of half-lengths <= sum_max.
SuiteReport verify_paths(int sum_max = 6);

/// No fully complementary diagram in a box with two or more odd sides (up to
/// max_cells cells), and middle-layer deletion between the (2,2,3)- and
/// (2,2,2)-boxes.
SuiteReport verify_parity(std::uint64_t max_cells = 64);

/// Quasi-symmetric recursion against enumeration and the series, the
/// self-complementary, quasi transpose-complementary, symmetric and
/// cyclically symmetric QCPP counts.
SuiteReport verify_qcpp_classes(int qs_sum_max = 6, int side_max = 3);

/// QTC(n,n,c) = SYM(n,n,c) = product formula for n <= n_max, c <= c_max.
SuiteReport verify_qtc_equals_spp(int n_max, int c_max, const SearchOptions& opts = {});

/// Hat-image weighted sums, the three determinant evaluations, and the
/// Krattenthaler product against exact determinants.
SuiteReport verify_determinants(int hat_n_max = 4, int hat_c_max = 5, int det_n_max = 4, int det_c_max = 2,
                                int kratt_n_max = 6, int kratt_c_max = 4, const SearchOptions& opts = {});

/// 2^{n-1} TCPP(n,n,2c) = SPP(n-1,n-1,2c+1).
SuiteReport verify_tcpp_spp(int n_min = 2, int n_max = 3, int c_min = 1, int c_max = 2);

/// Enumerated counts against the reference tables over the desk-scale cells,
/// and every conjectured formula against every populated table cell.
SuiteReport verify_conjectures(const SearchOptions& opts = {});

/// MacMahon's q-product against q-enumeration for a, b, c <= side_max.
SuiteReport verify_macmahon(int side_max = 3);

std::vector<SuiteReport> verify_all(const SearchOptions& opts = {});

}  // namespace hdp
