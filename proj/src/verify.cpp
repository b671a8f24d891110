#include "hdp/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "hdp/complementation.hpp"
#include "hdp/conjectures.hpp"
#include "hdp/exact_linalg.hpp"
#include "hdp/fcp.hpp"
#include "hdp/series.hpp"

namespace hdp {

void SuiteReport::check(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

nlohmann::json to_json(const SuiteReport& r) {
  return {{"suite", r.name},
          {"passed", r.passed()},
          {"checks", r.checks},
          {"budget_exceeded", r.budget_exceeded},
          {"failures", r.failures},
          {"details", r.details}};
}

namespace {

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::string vec_string(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Every vector of `len` non-negative integers with sum <= cap, in lexicographic order.
void for_each_exponent(std::size_t len, int cap, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> e(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == len) {
      f(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
    e[i] = 0;
  };
  rec(0, cap);
}

// Every vector of `len` positive integers with product <= max_product.
void for_each_positive_box(std::size_t len, std::uint64_t max_product,
                           const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> e(len, 1);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t prod) {
    if (i == len) {
      f(e);
      return;
    }
    for (int v = 1; prod * static_cast<std::uint64_t>(v) <= max_product; ++v) {
      e[i] = v;
      rec(i + 1, prod * static_cast<std::uint64_t>(v));
    }
    e[i] = 1;
  };
  rec(0, 1);
}

bool all_positive(const std::vector<int>& v) {
  for (int x : v)
    if (x <= 0) return false;
  return true;
}

std::vector<PartitionArray> fc_arrays_in(const BoxDims& box) {
  return enumerate_partitions(box, fc_prefix_filter(box));
}

}  // namespace

SuiteReport verify_fcp_baseline() {
  SuiteReport r;
  r.name = "fcp-baseline";
  const BoxDims n{1, 1, 1, 1};
  const BigInt count = count_fcp(n);
  r.check(count == 4, cat("count_fcp(1,1,1,1) = ", count, ", expected 4"));
  const auto fcps = enumerate_fcp(n);
  r.check(fcps.size() == 4, cat("enumerate_fcp(1,1,1,1) gives ", fcps.size(), " arrays"));

  const BoxDims box = n.doubled();
  std::size_t ideals = 0;
  std::vector<PartitionArray> found;
  for_each_partition(box, [&](const PartitionArray& pi) {
    ++ideals;
    if (is_fc_diagram(diagram_from_array(pi, box))) found.push_back(pi);
  });
  r.check(ideals == 168, cat("the (2,2,2,2)-box has ", ideals, " order ideals, expected 168"));
  r.check(found == fcps, "order-ideal filter and FCP enumeration disagree");
  r.details = {{"count", to_decimal(count)}, {"order_ideals", ideals}, {"fc_ideals", found.size()}};
  return r;
}

SuiteReport verify_genfun(int cap, std::uint64_t max_cells) {
  SuiteReport r;
  r.name = "genfun";
  std::size_t exhaustive = 0;
  for (int d = 1; d <= 3; ++d) {
    const TruncatedSeries s = expand_fcp_genfun(d, cap);
    for_each_exponent(static_cast<std::size_t>(d) + 1, cap, [&](const std::vector<int>& e) {
      const BigInt coeff = s.coeff(e);
      const BigInt rec = count_fcp(std::span<const int>(e));
      r.check(coeff == rec, cat("d=", d, " n=(", vec_string(e), "): series ", coeff, ", recurrence ", rec));
      if (!all_positive(e)) return;
      const BoxDims box = BoxDims(e).doubled();
      if (box.cell_count() > max_cells) return;
      const std::uint64_t brute = count_fc_diagrams(box);
      ++exhaustive;
      r.check(coeff == brute, cat("d=", d, " n=(", vec_string(e), "): series ", coeff, ", exhaustion ", brute));
    });
  }
  r.details = {{"cap", cap}, {"exhaustive_boxes", exhaustive}};
  return r;
}

SuiteReport verify_paths(int sum_max) {
  SuiteReport r;
  r.name = "paths";
  std::size_t total = 0;
  for (std::size_t axes = 2; axes <= 4; ++axes) {
    for_each_exponent(axes, sum_max, [&](const std::vector<int>& e) {
      if (!all_positive(e)) return;
      const BoxDims n(e);
      std::vector<LatticePath> paths;
      for_each_fcp(n, [&](const PartitionArray& pi) {
        ++total;
        const LatticePath p = fcp_to_path(pi, n);
        bool valid = true;
        try {
          validate_path(p);
        } catch (const std::invalid_argument&) {
          valid = false;
        }
        r.check(valid && p.end() == e, cat("n=(", vec_string(e), "): invalid path ", p));
        r.check(path_to_fcp(p) == pi, cat("n=(", vec_string(e), "): round trip fails for ", p));
        paths.push_back(p);
      });
      std::sort(paths.begin(), paths.end(), [](const LatticePath& x, const LatticePath& y) {
        return std::tie(x.start, x.steps) < std::tie(y.start, y.steps);
      });
      r.check(paths == paths_ending_at(e), cat("n=(", vec_string(e), "): path images differ from paths_ending_at"));
    });
  }

  // Half-lengths (3,2,2), built by the chain e3, e1, e3, e2, e1 from (1,1,0).
  PartitionArray pi;
  std::vector<int> at{1, 1, 0};
  for (std::size_t axis : {2, 0, 2, 1, 0}) {
    ++at[axis];
    pi = phi(axis, BoxDims(at), pi);
  }
  const LatticePath expected{{1, 1, 0}, {2, 0, 2, 1, 0}};
  const LatticePath got = fcp_to_path(pi, BoxDims{3, 2, 2});
  r.check(got == expected, cat("worked example gives ", got));
  r.check(path_to_fcp(expected) == pi, "worked example path does not rebuild its FCP");
  std::ostringstream os;
  os << got;
  r.details = {{"sum_max", sum_max}, {"fcps", total}, {"worked_example", os.str()}};
  return r;
}

SuiteReport verify_parity(std::uint64_t max_cells) {
  SuiteReport r;
  r.name = "parity";
  std::size_t boxes = 0;
  for (std::size_t axes = 2; axes <= 4; ++axes) {
    for_each_positive_box(axes, max_cells, [&](const std::vector<int>& sides) {
      const BoxDims box(sides);
      if (box.odd_side_count() < 2) return;
      ++boxes;
      r.check(scan_no_fc_two_odd(box), cat("box (", vec_string(sides), ") has a fully complementary diagram"));
      r.check(count_fc_box(box) == 0, cat("count_fc_box(", vec_string(sides), ") is not zero"));
    });
  }

  const BoxDims odd{2, 2, 3};
  const BoxDims even{2, 2, 2};
  std::set<PartitionArray> images;
  const auto odd_set = fc_arrays_in(odd);
  for (const auto& pi : odd_set) {
    const FerrersDiagram reduced = reduce_odd_axis(diagram_from_array(pi, odd), 2);
    r.check(is_fc_diagram(reduced), "middle-layer deletion leaves the fully complementary set");
    images.insert(array_from_diagram(reduced));
  }
  const auto even_set = fc_arrays_in(even);
  r.check(images.size() == odd_set.size(), "middle-layer deletion is not injective");
  r.check(std::vector<PartitionArray>(images.begin(), images.end()) == even_set,
          "middle-layer deletion is not onto the (2,2,2) set");
  r.details = {{"two_odd_boxes", boxes}, {"odd_box_fc", odd_set.size()}, {"even_box_fc", even_set.size()}};
  return r;
}

SuiteReport verify_qcpp_classes(int qs_sum_max, int side_max) {
  SuiteReport r;
  r.name = "qcpp-classes";
  const TruncatedSeries qs = expand_qs_genfun(qs_sum_max);
  for (int a = 0; a <= qs_sum_max; ++a)
    for (int c = 0; a + c <= qs_sum_max; ++c) {
      const BigInt rec = count_qs_qcpp(a, c, QsMode::recursion);
      const BigInt brute = count_qs_qcpp(a, c, QsMode::brute);
      const BigInt series = qs.coeff({a, c});
      r.check(rec == brute && rec == series,
              cat("QS(", a, ",", c, "): recursion ", rec, ", enumeration ", brute, ", series ", series));
    }
  for (int a = 1; a <= side_max; ++a) {
    for (int b = 1; b <= side_max; ++b)
      for (int c = 1; c <= side_max; ++c) {
        const BigInt sc = count_sc_qcpp(a, b, c);
        r.check(sc == binomial(a + b, a), cat("SC(", a, ",", b, ",", c, ") = ", sc));
      }
    for (int c = 1; c <= side_max; ++c) {
      const BigInt qtc = count_qtc_qcpp(a, c);
      r.check(qtc == (BigInt(1) << a), cat("QTC(", a, ",", c, ") = ", qtc));
      r.check(qtc_qcpp_is_qs_and_sc(a, c), cat("QTC(", a, ",", c, ") is not QS and SC"));
      const BigInt sym = count_sym_qcpp(a, c);
      r.check(sym == 1, cat("SYM(", a, ",", c, ") = ", sym));
    }
    const BigInt cyc = count_cyc_qcpp(a);
    r.check(cyc == 0, cat("CYC(", a, ") = ", cyc));
  }
  r.details = {{"qs_sum_max", qs_sum_max}, {"side_max", side_max}};
  return r;
}

SuiteReport verify_qtc_equals_spp(int n_max, int c_max, const SearchOptions& opts) {
  SuiteReport r;
  r.name = "qtc-spp";
  nlohmann::json rows = nlohmann::json::array();
  try {
    for (int n = 1; n <= n_max; ++n)
      for (int c = 0; c <= c_max; ++c) {
        const BigInt qtc = count_class(SymmetryClass(SymmetryTag::QTC, BoxDims{n, n, c}), opts);
        const BigInt sym = count_class(SymmetryClass(SymmetryTag::SYM, BoxDims{n, n, c}), opts);
        const BigInt prod = spp_product(n, c);
        r.check(qtc == sym && sym == prod,
                cat("(", n, ",", n, ",", c, "): QTC ", qtc, ", SYM ", sym, ", product ", prod));
        rows.push_back({{"n", n}, {"c", c}, {"qtc", to_decimal(qtc)}, {"sym", to_decimal(sym)}, {"product", to_decimal(prod)}});
      }
  } catch (const BudgetExceeded&) {
    r.budget_exceeded = true;
  }
  r.details = {{"rows", rows}};
  return r;
}

SuiteReport verify_determinants(int hat_n_max, int hat_c_max, int det_n_max, int det_c_max, int kratt_n_max,
                                int kratt_c_max, const SearchOptions& opts) {
  SuiteReport r;
  r.name = "determinants";
  nlohmann::json dets = nlohmann::json::array();
  try {
    for (int n = 1; n <= hat_n_max; ++n)
      for (int c = 0; c <= hat_c_max; ++c) {
        const WeightedCount w = hat_weighted_count(n, c, opts);
        const BigInt q = qtcpp(n, c, opts);
        r.check(w.value == q, cat("hat sum (", n, ",", c, ") = ", w.value, ", QTCPP ", q));
      }
    for (int n = 1; n <= det_n_max; ++n)
      for (int h = 0; h <= det_c_max; ++h) {
        const BigInt d1 = det1(n, h);
        const auto [d2, d3] = det2_det3(n, h);
        const BigInt odd = qtcpp(n, 2 * h + 1, opts);
        const BigInt even = qtcpp(n, 2 * h, opts);
        r.check(d1 == odd, cat("det1(", n, ",", h, ") = ", d1, ", QTCPP(", n, ",", n, ",", 2 * h + 1, ") = ", odd));
        r.check(d2 == even, cat("det2(", n, ",", h, ") = ", d2, ", QTCPP(", n, ",", n, ",", 2 * h, ") = ", even));
        r.check(d3 == even, cat("det3(", n, ",", h, ") = ", d3, ", QTCPP(", n, ",", n, ",", 2 * h, ") = ", even));
        dets.push_back({{"n", n},
                        {"hat_c", h},
                        {"det1", to_decimal(d1)},
                        {"det2", to_decimal(d2)},
                        {"det3", to_decimal(d3)},
                        {"qtcpp_odd", to_decimal(odd)},
                        {"qtcpp_even", to_decimal(even)}});
      }
  } catch (const BudgetExceeded&) {
    r.budget_exceeded = true;
  }
  for (int n = 1; n <= kratt_n_max; ++n)
    for (int h = 0; h <= kratt_c_max; ++h)
      for (const auto& p : {odd_height_params(n, h), even_height_params(n, h)}) {
        const BigRational exact = det_exact(krattenthaler_matrix(p.L, p.A, p.B));
        const BigRational product = krattenthaler_eval(p.L, p.A, p.B);
        r.check(exact == product, cat("Krattenthaler n=", n, " hat_c=", h, " A=", to_string(p.A), ": det ",
                                      to_string(exact), ", product ", to_string(product)));
      }
  r.details = {{"determinants", dets}};
  return r;
}

SuiteReport verify_tcpp_spp(int n_min, int n_max, int c_min, int c_max) {
  SuiteReport r;
  r.name = "tcpp-spp";
  nlohmann::json rows = nlohmann::json::array();
  try {
    for (int n = n_min; n <= n_max; ++n)
      for (int c = c_min; c <= c_max; ++c) {
        const TcppSppReport t = check_tcpp_spp_identity(n, c);
        r.check(t.holds(), cat("n=", n, " c=", c, ": ", t.lhs, " vs ", t.rhs));
        rows.push_back({{"n", n}, {"c", c}, {"lhs", to_decimal(t.lhs)}, {"rhs", to_decimal(t.rhs)}});
      }
  } catch (const BudgetExceeded&) {
    r.budget_exceeded = true;
  }
  r.details = {{"rows", rows}};
  return r;
}

SuiteReport verify_conjectures(const SearchOptions& opts) {
  SuiteReport r;
  r.name = "conjectures";
  struct Range {
    ConjectureClass cls;
    std::vector<std::pair<int, int>> cells;
  };
  auto rect = [](int a_lo, int a_hi, int c_max) {
    std::vector<std::pair<int, int>> cells;
    for (int a = a_lo; a <= a_hi; ++a)
      for (int c = 0; c <= c_max; ++c) cells.emplace_back(a, c);
    return cells;
  };
  std::vector<Range> ranges{{ConjectureClass::QSPP, rect(1, 4, 6)},
                            {ConjectureClass::QTCPP2, rect(1, 4, 5)},
                            {ConjectureClass::QTCSPP2, rect(1, 5, 6)}};
  for (auto cell : rect(5, 5, 4)) ranges[0].cells.push_back(cell);

  nlohmann::json enumerated = nlohmann::json::array();
  for (const auto& range : ranges) {
    const auto rows = verify_cells(range.cls, range.cells, opts);
    for (const auto& row : rows) {
      if (row.status == "budget") {
        r.budget_exceeded = true;
        continue;
      }
      r.check(row.table.has_value() && row.computed == row.table,
              cat(to_string(row.cls), "(", row.a, ",", row.c, "): computed ", *row.computed, ", table ",
                  row.table ? to_decimal(*row.table) : std::string("absent")));
    }
    enumerated.push_back({{"class", to_string(range.cls)}, {"rows", to_json(rows)}});
  }

  nlohmann::json formulas = nlohmann::json::array();
  for (ConjectureClass cls : {ConjectureClass::QSPP, ConjectureClass::QTCPP2, ConjectureClass::QTCSPP2}) {
    for (const auto& f : calibrated_formulas(cls)) {
      r.check(f.p_is_even(), cat(to_string(f), " is not even"));
      r.check(f.calibrated, cat(to_string(f), " matches the table under neither shift"));
      formulas.push_back({{"formula", to_string(f)},
                          {"printed_shift", to_string(f.printed_shift)},
                          {"shift", to_string(f.shift)},
                          {"calibrated", f.calibrated},
                          {"denominator", to_decimal(f.p_denominator())}});
    }
    for (const auto& row : formula_vs_table(cls))
      r.check(row.status == "match", cat(to_string(cls), "(", row.a, ",", row.c, "): formula ",
                                         row.formula ? to_string(*row.formula) : std::string("absent"), ", table ",
                                         to_decimal(*row.table)));
  }
  r.details = {{"enumerated", enumerated}, {"formulas", formulas}};
  return r;
}

SuiteReport verify_macmahon(int side_max) {
  SuiteReport r;
  r.name = "macmahon";
  for (int a = 0; a <= side_max; ++a)
    for (int b = 0; b <= side_max; ++b)
      for (int c = 0; c <= side_max; ++c) {
        const QPolynomial product = macmahon_box_q(a, b, c);
        const QPolynomial counted = q_count_box(a, b, c);
        r.check(product == counted,
                cat("(", a, ",", b, ",", c, "): ", to_string(product), " vs ", to_string(counted)));
      }
  r.details = {{"side_max", side_max}};
  return r;
}

std::vector<SuiteReport> verify_all(const SearchOptions& opts) {
  return {verify_fcp_baseline(),
          verify_genfun(),
          verify_paths(),
          verify_parity(),
          verify_qcpp_classes(),
          verify_qtc_equals_spp(4, 5, opts),
          verify_determinants(4, 5, 4, 2, 6, 4, opts),
          verify_tcpp_spp(2, 3, 1, 2),
          verify_conjectures(opts),
          verify_macmahon()};
}

}  // namespace hdp
