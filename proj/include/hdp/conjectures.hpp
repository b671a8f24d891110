#pragma once

// Conjectured closed formulas for qspp, qtcpp2 and qtcspp2, the reference
// count tables, and exact even-polynomial fitting.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hdp/numeric.hpp"
#include "hdp/symmetry.hpp"

namespace hdp {

enum class ConjectureClass { QSPP, QTCPP2, QTCSPP2 };

std::string_view to_string(ConjectureClass cls);
std::optional<ConjectureClass> parse_conjecture_class(std::string_view name);

/// Counts the class by enumeration: qspp, qtcpp2 or qtcspp2 at (a, c).
BigInt count_conjecture_class(ConjectureClass cls, int a, int c, const SearchOptions& opts = {});

/// Prefactor (c if c_factor) * C(c + binom_offset, binom_k).
struct Prefactor {
  bool c_factor = false;
  BigRational binom_offset = 0;
  long binom_k = 0;

  BigRational eval(const BigRational& c) const;
};

/// count(a, m) = F(m + shift), F(c) = prefactor(c) * p(c), p even.
struct ConjectureFormula {
  ConjectureClass cls = ConjectureClass::QSPP;
  int a = 1;
  BigRational printed_shift = 0;  // the argument reads count(a, c - printed_shift)
  BigRational shift = 0;          // the shift actually used
  bool calibrated = false;        // shift pinned against reference cells
  Prefactor prefactor;
  std::vector<BigRational> p;     // coefficient of c^k at index k

  BigRational p_at(const BigRational& c) const;
  bool p_is_even() const;
  /// Common denominator of the coefficients of p.
  BigInt p_denominator() const;
};

std::string to_string(const ConjectureFormula& f);

/// F(c) at the formula's own argument.
BigRational eval_conjecture(const ConjectureFormula& f, const BigRational& c);
/// F(m + shift), the predicted count at column m. Throws std::domain_error
/// when the value is not a non-negative integer.
BigInt conjectured_count(const ConjectureFormula& f, int m);

/// The embedded formulas as printed, before calibration; a = 1..6.
std::vector<ConjectureFormula> printed_formulas(ConjectureClass cls);
/// Shift implied by the general conjecture statement (a, or a/2).
BigRational generic_shift(ConjectureClass cls, int a);

struct TableRow {
  ConjectureClass cls;
  int a;
  int c;
  BigInt value;
  std::string provenance;
};

/// Reference table; absent cells are simply missing.
class CountTable {
 public:
  static CountTable parse_csv(std::string_view text);
  static const CountTable& appendix();

  const std::vector<TableRow>& rows() const noexcept { return rows_; }
  std::optional<BigInt> lookup(ConjectureClass cls, int a, int c) const;
  std::vector<TableRow> cells(ConjectureClass cls, int a) const;
  std::string to_csv() const;

 private:
  std::vector<TableRow> rows_;
};

/// Raw text of the embedded reference table.
std::string_view appendix_csv();

/// Picks, among the printed shift and the generic shift, the first one that
/// reproduces every reference cell of its (class, a). At least three cells
/// are required; without a match the formula keeps its printed shift and
/// stays uncalibrated.
ConjectureFormula calibrate_shift(ConjectureFormula f, const CountTable& table);
std::vector<ConjectureFormula> calibrated_formulas(ConjectureClass cls);

struct ReportRow {
  ConjectureClass cls;
  int a;
  int c;
  std::optional<BigInt> computed;
  std::optional<BigRational> formula;
  std::optional<BigInt> table;
  std::string status;  // "match", "mismatch", "budget", "unchecked"
};

nlohmann::json to_json(const std::vector<ReportRow>& rows);

/// Enumerated counts against formula and table for a <= a_max, c <= c_max.
/// With several threads the cells are spread over workers; rows keep the
/// cell order.
std::vector<ReportRow> verify_conjecture(ConjectureClass cls, int a_max, int c_max, const SearchOptions& opts = {});
/// Same for an explicit list of (a, c) cells.
std::vector<ReportRow> verify_cells(ConjectureClass cls, const std::vector<std::pair<int, int>>& cells,
                                    const SearchOptions& opts = {});
/// Formula against every populated reference cell (no enumeration).
std::vector<ReportRow> formula_vs_table(ConjectureClass cls);

struct Sample {
  BigRational c;  // the formula's own argument
  BigRational value;
};

/// Divides out the prefactor, interpolates exactly through the quotients
/// with a polynomial of degree <= max_degree, and checks the remaining
/// samples and evenness. Throws std::domain_error on failure.
std::vector<BigRational> fit_even_polynomial(const std::vector<Sample>& samples, const Prefactor& prefactor,
                                             int max_degree);

}  // namespace hdp
