#include "hdp/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/integer/common_factor_rt.hpp>

#include "hdp/exact_linalg.hpp"

namespace hdp {

std::string_view to_string(ConjectureClass cls) {
  switch (cls) {
    case ConjectureClass::QSPP: return "qspp";
    case ConjectureClass::QTCPP2: return "qtcpp2";
    case ConjectureClass::QTCSPP2: return "qtcspp2";
  }
  return "?";
}

std::optional<ConjectureClass> parse_conjecture_class(std::string_view name) {
  for (ConjectureClass c : {ConjectureClass::QSPP, ConjectureClass::QTCPP2, ConjectureClass::QTCSPP2})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

BigInt count_conjecture_class(ConjectureClass cls, int a, int c, const SearchOptions& opts) {
  switch (cls) {
    case ConjectureClass::QSPP: return qspp(a, c, opts);
    case ConjectureClass::QTCPP2: return qtcpp2(a, c, opts);
    case ConjectureClass::QTCSPP2: return qtcspp2(a, c, opts);
  }
  throw std::invalid_argument("unknown class");
}

BigRational Prefactor::eval(const BigRational& c) const {
  BigRational v = rat_binomial(c + binom_offset, binom_k);
  return c_factor ? BigRational(c * v) : v;
}

BigRational ConjectureFormula::p_at(const BigRational& c) const {
  BigRational v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * c + p[k];
  return v;
}

bool ConjectureFormula::p_is_even() const {
  for (std::size_t k = 1; k < p.size(); k += 2)
    if (p[k] != 0) return false;
  return true;
}

BigInt ConjectureFormula::p_denominator() const {
  BigInt l = 1;
  for (const auto& x : p) l = boost::integer::lcm(l, BigInt(denominator(x)));
  return l;
}

namespace {

std::string poly_string(const std::vector<BigRational>& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] == 0) continue;
    const BigRational a = abs(p[k]);
    os << (first ? (p[k] < 0 ? "-" : "") : (p[k] < 0 ? " - " : " + "));
    if (k == 0 || a != 1) os << to_string(a);
    if (k > 0) os << (k == 0 || a != 1 ? "*" : "") << "c";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string to_string(const ConjectureFormula& f) {
  std::ostringstream os;
  os << to_string(f.cls) << '(' << f.a << ", c - " << to_string(f.shift) << ") = ";
  if (f.prefactor.c_factor) os << "c * ";
  os << "C(c + " << to_string(f.prefactor.binom_offset) << ", " << f.prefactor.binom_k << ") * (" << poly_string(f.p)
     << ')';
  return os.str();
}

BigRational eval_conjecture(const ConjectureFormula& f, const BigRational& c) {
  return f.prefactor.eval(c) * f.p_at(c);
}

BigInt conjectured_count(const ConjectureFormula& f, int m) {
  const BigRational v = eval_conjecture(f, f.shift + m);
  if (!is_integer(v) || v < 0)
    throw std::domain_error(std::string(to_string(f.cls)) + " formula gives " + to_string(v) + " at a=" +
                            std::to_string(f.a) + ", c=" + std::to_string(m));
  return numerator(v);
}

BigRational generic_shift(ConjectureClass cls, int a) {
  return cls == ConjectureClass::QSPP ? BigRational(a) : BigRational(a, 2);
}

namespace {

using Q = BigRational;

// Coefficients listed from c^0 upwards over a common denominator.
std::vector<Q> poly(std::initializer_list<long long> coeffs, long long den) {
  std::vector<Q> p;
  for (long long x : coeffs) p.emplace_back(BigInt(x), BigInt(den));
  return p;
}

std::vector<Q> poly_big(std::initializer_list<const char*> coeffs, const char* den) {
  std::vector<Q> p;
  for (const char* x : coeffs) p.emplace_back(BigInt(x), BigInt(den));
  return p;
}

ConjectureFormula make(ConjectureClass cls, int a, Q shift, bool c_factor, Q offset, long k, std::vector<Q> p) {
  ConjectureFormula f;
  f.cls = cls;
  f.a = a;
  f.printed_shift = shift;
  f.shift = shift;
  f.prefactor = {c_factor, offset, k};
  f.p = std::move(p);
  return f;
}

}  // namespace

std::vector<ConjectureFormula> printed_formulas(ConjectureClass cls) {
  const Q half(1, 2);
  switch (cls) {
    case ConjectureClass::QSPP:
      return {
          make(cls, 1, 1, false, 0, 1, poly({1}, 1)),
          make(cls, 2, 2, true, 1, 3, poly({1}, 1)),
          make(cls, 3, 3, false, 2, 5, poly({-2, 0, 1}, 7)),
          make(cls, 4, 4, true, 3, 7, poly({-892, 0, -229, 0, 41}, 23760)),
          make(cls, 5, 5, false, 4, 9, poly({756000, 0, -310644, 0, -14473, 0, -8206, 0, 683}, 122522400)),
          make(cls, 6, 6, true, 5, 11,
               poly_big({"194655992832", "0", "20697349128", "0", "-1859025278", "0", "-28759181", "0", "11282865", "0",
                         "-1850347", "0", "56381"},
                        "161911881331200")),
      };
    case ConjectureClass::QTCPP2:
      return {
          make(cls, 1, half, false, half, 1, poly({1}, 1)),
          make(cls, 2, 1, true, 0, 1, poly({1}, 1)),
          make(cls, 3, half, false, half, 2, poly({3, 0, 4}, 12)),
          make(cls, 4, 2, true, 1, 3, poly({-16, 0, 19, 0, 5}, 280)),
          make(cls, 5, half, false, Q(3, 2), 4, poly({883575, 0, 80480, 0, -1322016, 0, 522240, 0, 54016}, 159667200)),
          make(cls, 6, 3, true, 2, 5,
               poly_big({"395435520", "0", "-876526848", "0", "201378740", "0", "29029591", "0", "-12312285", "0",
                         "1648357", "0", "73325"},
                        "256505356800")),
      };
    case ConjectureClass::QTCSPP2:
      return {
          make(cls, 1, 0, false, 1, 1, poly({1}, 1)),
          make(cls, 2, 1, true, 0, 1, poly({1}, 1)),
          make(cls, 3, Q(3, 2), true, half, 2, poly({2}, 3)),
          make(cls, 4, 2, true, 1, 3, poly({1, 0, 1}, 10)),
          make(cls, 5, Q(5, 2), false, Q(3, 2), 4, poly({-455, 0, 248, 0, 144}, 6720)),
          make(cls, 6, 3, true, 2, 5, poly({200, 0, -58, 0, 15, 0, 3}, 9240)),
      };
  }
  return {};
}

CountTable CountTable::parse_csv(std::string_view text) {
  CountTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      if (line != "class,a,c,value,provenance") throw std::invalid_argument("unexpected table header: " + line);
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 5) throw std::invalid_argument("table line " + std::to_string(line_no) + " needs five fields");
    auto cls = parse_conjecture_class(f[0]);
    if (!cls) throw std::invalid_argument("unknown class in table line " + std::to_string(line_no));
    TableRow row{*cls, std::stoi(f[1]), std::stoi(f[2]), BigInt(f[3]), f[4]};
    if (row.value < 0) throw std::invalid_argument("negative table value");
    t.rows_.push_back(std::move(row));
  }
  return t;
}

const CountTable& CountTable::appendix() {
  static const CountTable t = parse_csv(appendix_csv());
  return t;
}

std::optional<BigInt> CountTable::lookup(ConjectureClass cls, int a, int c) const {
  for (const auto& r : rows_)
    if (r.cls == cls && r.a == a && r.c == c) return r.value;
  return std::nullopt;
}

std::vector<TableRow> CountTable::cells(ConjectureClass cls, int a) const {
  std::vector<TableRow> out;
  for (const auto& r : rows_)
    if (r.cls == cls && r.a == a) out.push_back(r);
  return out;
}

std::string CountTable::to_csv() const {
  std::ostringstream os;
  os << "class,a,c,value,provenance\n";
  for (const auto& r : rows_) os << to_string(r.cls) << ',' << r.a << ',' << r.c << ',' << r.value << ',' << r.provenance << '\n';
  return os.str();
}

ConjectureFormula calibrate_shift(ConjectureFormula f, const CountTable& table) {
  const auto cells = table.cells(f.cls, f.a);
  f.shift = f.printed_shift;
  f.calibrated = false;
  if (cells.size() < 3) return f;
  for (const Q& candidate : {f.printed_shift, generic_shift(f.cls, f.a)}) {
    const bool all = std::all_of(cells.begin(), cells.end(), [&](const TableRow& r) {
      return eval_conjecture(f, candidate + r.c) == Q(r.value);
    });
    if (all) {
      f.shift = candidate;
      f.calibrated = true;
      return f;
    }
  }
  return f;
}

std::vector<ConjectureFormula> calibrated_formulas(ConjectureClass cls) {
  std::vector<ConjectureFormula> out;
  for (auto& f : printed_formulas(cls)) out.push_back(calibrate_shift(std::move(f), CountTable::appendix()));
  return out;
}

nlohmann::json to_json(const std::vector<ReportRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"class", to_string(r.cls)}, {"a", r.a}, {"c", r.c}, {"status", r.status}};
    j["computed"] = r.computed ? nlohmann::json(to_decimal(*r.computed)) : nlohmann::json(nullptr);
    j["formula"] = r.formula ? nlohmann::json(to_string(*r.formula)) : nlohmann::json(nullptr);
    j["table"] = r.table ? nlohmann::json(to_decimal(*r.table)) : nlohmann::json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

std::optional<BigRational> formula_value(const std::vector<ConjectureFormula>& fs, int a, int c) {
  for (const auto& f : fs)
    if (f.a == a) return eval_conjecture(f, f.shift + c);
  return std::nullopt;
}

}  // namespace

std::vector<ReportRow> verify_cells(ConjectureClass cls, const std::vector<std::pair<int, int>>& cells,
                                    const SearchOptions& opts) {
  const auto formulas = calibrated_formulas(cls);
  const CountTable& table = CountTable::appendix();
  std::vector<ReportRow> out;
  for (const auto& [a, c] : cells)
    out.push_back({cls, a, c, std::nullopt, formula_value(formulas, a, c), table.lookup(cls, a, c), "unchecked"});

  SearchOptions cell_opts = opts;
  cell_opts.threads = 1;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < out.size(); k = next++) {
      ReportRow& row = out[k];
      try {
        row.computed = count_conjecture_class(cls, row.a, row.c, cell_opts);
      } catch (const BudgetExceeded&) {
        row.status = "budget";
        continue;
      }
      bool ok = true;
      if (row.table) ok = ok && *row.table == *row.computed;
      if (row.formula) ok = ok && *row.formula == BigRational(*row.computed);
      row.status = ok ? "match" : "mismatch";
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(out.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<ReportRow> verify_conjecture(ConjectureClass cls, int a_max, int c_max, const SearchOptions& opts) {
  std::vector<std::pair<int, int>> cells;
  for (int a = 1; a <= a_max; ++a)
    for (int c = 0; c <= c_max; ++c) cells.emplace_back(a, c);
  return verify_cells(cls, cells, opts);
}

std::vector<ReportRow> formula_vs_table(ConjectureClass cls) {
  const auto formulas = calibrated_formulas(cls);
  std::vector<ReportRow> out;
  for (const auto& r : CountTable::appendix().rows()) {
    if (r.cls != cls) continue;
    ReportRow row{cls, r.a, r.c, std::nullopt, formula_value(formulas, r.a, r.c), r.value, "unchecked"};
    if (row.formula) row.status = *row.formula == BigRational(r.value) ? "match" : "mismatch";
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<BigRational> fit_even_polynomial(const std::vector<Sample>& samples, const Prefactor& prefactor,
                                             int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("degree bound must be non-negative");
  std::vector<std::pair<Q, Q>> pts;
  for (const auto& s : samples) {
    const Q pre = prefactor.eval(s.c);
    if (pre == 0) {
      if (s.value != 0) throw std::domain_error("sample is non-zero where the prefactor vanishes");
      continue;
    }
    pts.emplace_back(s.c, s.value / pre);
  }
  const std::size_t need = static_cast<std::size_t>(max_degree) + 1;
  if (pts.size() < need) throw std::domain_error("not enough samples for the requested degree bound");

  // Lagrange interpolation through the first `need` points, expanded into
  // monomial coefficients.
  std::vector<Q> coeffs(need, 0);
  for (std::size_t i = 0; i < need; ++i) {
    std::vector<Q> basis{Q(1)};
    Q denom = 1;
    for (std::size_t j = 0; j < need; ++j) {
      if (j == i) continue;
      std::vector<Q> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * pts[j].first;
      }
      basis = std::move(next);
      denom *= pts[i].first - pts[j].first;
    }
    if (denom == 0) throw std::domain_error("duplicate sample abscissa");
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * pts[i].second / denom;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();

  auto eval = [&](const Q& x) {
    Q v = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
    return v;
  };
  for (std::size_t i = need; i < pts.size(); ++i)
    if (eval(pts[i].first) != pts[i].second)
      throw std::domain_error("quotients are not a polynomial of the requested degree");
  for (std::size_t k = 1; k < coeffs.size(); k += 2)
    if (coeffs[k] != 0) throw std::domain_error("fitted polynomial is not even");
  return coeffs;
}

}  // namespace hdp
