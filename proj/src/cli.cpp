#include "hdp/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdp/conjectures.hpp"
#include "hdp/fcp.hpp"
#include "hdp/series.hpp"
#include "hdp/symmetry.hpp"
#include "hdp/verify.hpp"

namespace hdp::cli {

namespace {

struct Params {
  std::vector<int> box;
  std::string cls;
  std::string format = "text";
  std::uint64_t budget = SearchOptions{}.node_budget;
  unsigned threads = 1;
  int dim = 2;
  int cap = 6;
  std::vector<int> start;
  std::vector<int> steps;
  int n_max = -1;
  int c_max = -1;
  int a_max = -1;
  std::string source = "computed";
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SearchOptions search_options(const Params& p) {
  SearchOptions o;
  o.node_budget = p.budget;
  o.threads = std::max(1U, p.threads);
  return o;
}

BoxDims box_arg(const Params& p, std::size_t min_axes) {
  if (p.box.size() < min_axes) throw UsageError("--box needs at least " + std::to_string(min_axes) + " values");
  for (int v : p.box)
    if (v < 0) throw UsageError("--box values must be non-negative");
  return BoxDims(p.box);
}

nlohmann::json array_json(const PartitionArray& pi) {
  if (pi.is_sentinel()) return nullptr;
  return {{"shape", pi.shape()}, {"entries", pi.entries()}};
}

void print_array(std::ostream& out, const PartitionArray& pi) { out << pi << "\n\n"; }

int cmd_count_fcp(const Params& p, std::ostream& out) {
  out << count_fcp(box_arg(p, 2)) << '\n';
  return ok;
}

int cmd_count_class(const Params& p, std::ostream& out) {
  const auto tag = parse_symmetry_tag(p.cls);
  if (!tag) throw UsageError("unknown class '" + p.cls + "'");
  const BoxDims box = box_arg(p, 3);
  out << count_class(SymmetryClass(*tag, box), search_options(p)) << '\n';
  return ok;
}

int cmd_enumerate_fcp(const Params& p, std::ostream& out) {
  const BoxDims n = box_arg(p, 2);
  const auto all = enumerate_fcp(n);
  if (p.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& pi : all) j.push_back(array_json(pi));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& pi : all) print_array(out, pi);
  }
  return ok;
}

int cmd_path_to(const Params& p, std::ostream& out) {
  const BoxDims n = box_arg(p, 2);
  for (const auto& pi : enumerate_fcp(n)) {
    out << fcp_to_path(pi, n) << '\n';
    print_array(out, pi);
  }
  return ok;
}

int cmd_path_from(const Params& p, std::ostream& out) {
  LatticePath path{p.start, {}};
  for (int s : p.steps) {
    if (s < 1) throw UsageError("--steps are 1-based axis numbers");
    path.steps.push_back(static_cast<std::size_t>(s - 1));
  }
  try {
    validate_path(path);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const PartitionArray pi = path_to_fcp(path);
  if (p.format == "json") {
    out << array_json(pi).dump(2) << '\n';
  } else {
    print_array(out, pi);
  }
  return ok;
}

void print_series(std::ostream& out, const TruncatedSeries& s, const std::string& format) {
  if (format == "json") {
    out << to_json(s).dump(2) << '\n';
    return;
  }
  for (const auto& [exp, c] : s.terms()) {
    for (std::size_t i = 0; i < exp.size(); ++i) out << (i ? "," : "") << exp[i];
    out << ' ' << c << '\n';
  }
}

int cmd_series_fcp(const Params& p, std::ostream& out) {
  if (p.dim < 1 || p.cap < 0) throw UsageError("--dim must be positive and --cap non-negative");
  print_series(out, expand_fcp_genfun(p.dim, p.cap), p.format);
  return ok;
}

int cmd_series_qs(const Params& p, std::ostream& out) {
  if (p.cap < 0) throw UsageError("--cap must be non-negative");
  print_series(out, expand_qs_genfun(p.cap), p.format);
  return ok;
}

int cmd_series_macmahon(const Params& p, std::ostream& out) {
  const BoxDims box = box_arg(p, 3);
  if (box.axes() != 3) throw UsageError("--box takes three sides");
  const QPolynomial q = macmahon_box_q(box[0], box[1], box[2]);
  if (p.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : q.coeffs()) j.push_back(to_decimal(c));
    out << j.dump() << '\n';
  } else {
    out << to_string(q) << '\n';
  }
  return ok;
}

int report(const std::vector<SuiteReport>& reports, const std::string& format, std::ostream& out) {
  bool budget = false;
  bool failed = false;
  for (const auto& r : reports) {
    budget = budget || r.budget_exceeded;
    failed = failed || !r.failures.empty();
  }
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks << " checks";
      if (r.budget_exceeded) out << ", budget exceeded";
      out << ")\n";
      for (const auto& f : r.failures) out << "  " << f << '\n';
    }
  }
  if (failed) return verification_failed;
  return budget ? budget_exceeded : ok;
}

int or_default(int v, int fallback) { return v < 0 ? fallback : v; }

int cmd_verify(const std::string& suite, const Params& p, std::ostream& out) {
  const SearchOptions opts = search_options(p);
  if (suite == "all") return report(verify_all(opts), p.format, out);
  if (suite == "thm1.5") return report({verify_qtc_equals_spp(or_default(p.n_max, 4), or_default(p.c_max, 5), opts)}, p.format, out);
  if (suite == "eq1.6") return report({verify_tcpp_spp(2, or_default(p.n_max, 3), 1, or_default(p.c_max, 2))}, p.format, out);
  if (suite == "dets") {
    const int n = or_default(p.n_max, 4);
    const int c = or_default(p.c_max, 2);
    return report({verify_determinants(n, 2 * c + 1, n, c, std::max(n, 6), std::max(c, 4), opts)}, p.format, out);
  }
  if (suite == "conjectures") {
    if (p.cls.empty()) return report({verify_conjectures(opts)}, p.format, out);
    const auto cls = parse_conjecture_class(p.cls);
    if (!cls) throw UsageError("unknown class '" + p.cls + "'");
    const auto rows = verify_conjecture(*cls, or_default(p.a_max, 3), or_default(p.c_max, 4), opts);
    if (p.format == "json") {
      out << to_json(rows).dump(2) << '\n';
    } else {
      for (const auto& r : rows)
        out << to_string(r.cls) << ',' << r.a << ',' << r.c << ',' << (r.computed ? to_decimal(*r.computed) : "")
            << ',' << (r.formula ? to_string(*r.formula) : "") << ',' << (r.table ? to_decimal(*r.table) : "") << ','
            << r.status << '\n';
    }
    bool budget = false;
    for (const auto& r : rows) {
      if (r.status == "mismatch") return verification_failed;
      budget = budget || r.status == "budget";
    }
    return budget ? budget_exceeded : ok;
  }
  throw UsageError("unknown verification suite '" + suite + "'");
}

int cmd_table(ConjectureClass cls, const Params& p, std::ostream& out) {
  const int a_max = or_default(p.a_max, 3);
  const int c_max = or_default(p.c_max, 4);
  struct Cell {
    int a;
    int c;
    std::optional<BigInt> value;
  };
  std::vector<Cell> cells;
  bool budget = false;
  if (p.source == "computed") {
    std::vector<std::pair<int, int>> coords;
    for (int a = 1; a <= a_max; ++a)
      for (int c = 0; c <= c_max; ++c) coords.emplace_back(a, c);
    for (const auto& row : verify_cells(cls, coords, search_options(p))) {
      budget = budget || row.status == "budget";
      cells.push_back({row.a, row.c, row.computed});
    }
  } else if (p.source == "table") {
    for (int a = 1; a <= a_max; ++a)
      for (int c = 0; c <= c_max; ++c) cells.push_back({a, c, CountTable::appendix().lookup(cls, a, c)});
  } else if (p.source == "formula") {
    const auto formulas = calibrated_formulas(cls);
    for (int a = 1; a <= a_max; ++a)
      for (int c = 0; c <= c_max; ++c) {
        std::optional<BigInt> v;
        for (const auto& f : formulas)
          if (f.a == a) v = conjectured_count(f, c);
        cells.push_back({a, c, v});
      }
  } else {
    throw UsageError("--source must be computed, table or formula");
  }

  if (p.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& cell : cells)
      j.push_back({{"a", cell.a}, {"c", cell.c}, {"value", cell.value ? nlohmann::json(to_decimal(*cell.value)) : nlohmann::json(nullptr)}});
    out << j.dump(2) << '\n';
  } else {
    out << "a,c,value\n";
    for (const auto& cell : cells)
      if (cell.value) out << cell.a << ',' << cell.c << ',' << *cell.value << '\n';
  }
  return budget ? budget_exceeded : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fully complementary partitions and plane partition symmetry classes"};
  app.name("hdp");
  app.require_subcommand(1);
  Params p;

  auto add_format = [&](CLI::App* cmd, std::vector<std::string> choices) {
    cmd->add_option("--format", p.format, "Output format")->check(CLI::IsMember(choices));
  };
  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--budget", p.budget, "Node budget per exhaustive search");
    cmd->add_option("--threads", p.threads, "Worker threads");
  };
  auto add_box = [&](CLI::App* cmd, const std::string& help) {
    cmd->add_option("--box", p.box, help)->delimiter(',')->required();
  };

  auto* count = app.add_subcommand("count", "Count fully complementary partitions or a symmetry class");
  count->require_subcommand(1);
  auto* count_fcp_cmd = count->add_subcommand("fcp", "Count FCP(n)");
  add_box(count_fcp_cmd, "Half-lengths n_1,...,n_{d+1}; the box is twice as large");
  auto* count_class_cmd = count->add_subcommand("class", "Count a symmetry class by exhaustive search");
  count_class_cmd->add_option("--class", p.cls, "SYM, QSYM, SC, TC, QTC, QTC2, SQTC2, QTC2C, SQTC2C, CYC, QS_QCPP, SC_QCPP, QTC_QCPP")
      ->required();
  add_box(count_class_cmd, "Raw side lengths a,b,c (QCPP classes: the full, even box)");
  add_search(count_class_cmd);

  auto* enumerate = app.add_subcommand("enumerate", "List fully complementary partitions");
  enumerate->require_subcommand(1);
  auto* enumerate_fcp_cmd = enumerate->add_subcommand("fcp", "List FCP(n)");
  add_box(enumerate_fcp_cmd, "Half-lengths n_1,...,n_{d+1}");
  add_format(enumerate_fcp_cmd, {"text", "json"});

  auto* path = app.add_subcommand("path", "Lattice path bijection");
  path->require_subcommand(1);
  auto* path_to = path->add_subcommand("to", "Path of every FCP(n)");
  add_box(path_to, "Half-lengths n_1,...,n_{d+1}");
  auto* path_from = path->add_subcommand("from", "FCP of a lattice path");
  path_from->add_option("--start", p.start, "Start point with exactly one zero coordinate")->delimiter(',')->required();
  path_from->add_option("--steps", p.steps, "Unit steps as 1-based axis numbers")->delimiter(',')->required();
  add_format(path_from, {"text", "json"});

  auto* series = app.add_subcommand("series", "Generating function expansions");
  series->require_subcommand(1);
  auto* series_fcp = series->add_subcommand("fcp", "Coefficients of the FCP generating function");
  series_fcp->add_option("--dim", p.dim, "Dimension d (d+1 variables)");
  series_fcp->add_option("--cap", p.cap, "Total degree cap");
  add_format(series_fcp, {"text", "json"});
  auto* series_qs = series->add_subcommand("qs", "Coefficients of the quasi-symmetric QCPP generating function");
  series_qs->add_option("--cap", p.cap, "Total degree cap");
  add_format(series_qs, {"text", "json"});
  auto* series_macmahon = series->add_subcommand("macmahon", "q-enumeration of plane partitions in a box");
  add_box(series_macmahon, "Raw side lengths a,b,c");
  add_format(series_macmahon, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite;
  verify->add_option("suite", suite, "all, thm1.5, eq1.6, dets or conjectures")
      ->required()
      ->check(CLI::IsMember({"all", "thm1.5", "eq1.6", "dets", "conjectures"}));
  verify->add_option("--n-max", p.n_max, "Largest n");
  verify->add_option("--c-max", p.c_max, "Largest c");
  verify->add_option("--a-max", p.a_max, "Largest a (conjectures with --class)");
  verify->add_option("--class", p.cls, "qspp, qtcpp2 or qtcspp2 (conjectures)");
  add_format(verify, {"text", "json"});
  add_search(verify);

  auto* table = app.add_subcommand("table", "Count tables for qspp, qtcpp2 or qtcspp2");
  std::string table_class;
  table->add_option("class", table_class, "qspp, qtcpp2 or qtcspp2")
      ->required()
      ->check(CLI::IsMember({"qspp", "qtcpp2", "qtcspp2"}));
  table->add_option("--a-max", p.a_max, "Largest a");
  table->add_option("--c-max", p.c_max, "Largest c");
  table->add_option("--source", p.source, "computed, table or formula");
  add_format(table, {"csv", "json"});
  add_search(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (*count_fcp_cmd) return cmd_count_fcp(p, out);
    if (*count_class_cmd) return cmd_count_class(p, out);
    if (*enumerate_fcp_cmd) return cmd_enumerate_fcp(p, out);
    if (*path_to) return cmd_path_to(p, out);
    if (*path_from) return cmd_path_from(p, out);
    if (*series_fcp) return cmd_series_fcp(p, out);
    if (*series_qs) return cmd_series_qs(p, out);
    if (*series_macmahon) return cmd_series_macmahon(p, out);
    if (*verify) return cmd_verify(suite, p, out);
    if (*table) {
      if (p.format == "text") p.format = "csv";
      return cmd_table(*parse_conjecture_class(table_class), p, out);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return budget_exceeded;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return verification_failed;
  }
  err << "error: no command\n";
  return usage;
}

}  // namespace hdp::cli
