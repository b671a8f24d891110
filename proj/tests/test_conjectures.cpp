#include <doctest.h>

#include "hdp/conjectures.hpp"
#include "hdp/symmetry.hpp"
#include "oracles.hpp"

using namespace hdp;

namespace {

ConjectureFormula formula_for(const std::vector<ConjectureFormula>& fs, int a) {
  for (const auto& f : fs)
    if (f.a == a) return f;
  throw std::logic_error("no formula");
}

}  // namespace

TEST_CASE("class names") {
  for (const char* name : {"qspp", "qtcpp2", "qtcspp2"}) {
    const auto cls = parse_conjecture_class(name);
    REQUIRE(cls.has_value());
    CHECK(to_string(*cls) == name);
  }
  CHECK_FALSE(parse_conjecture_class("QSPP").has_value());
}

TEST_CASE("printed formulas") {
  for (ConjectureClass cls : {ConjectureClass::QSPP, ConjectureClass::QTCPP2, ConjectureClass::QTCSPP2}) {
    const auto fs = printed_formulas(cls);
    CHECK(fs.size() == 6);
    for (const auto& f : fs) {
      CHECK(f.cls == cls);
      CHECK(f.p_is_even());
      CHECK(f.p_denominator() >= 1);
      CHECK_FALSE(to_string(f).empty());
    }
  }
  const auto q3 = formula_for(printed_formulas(ConjectureClass::QSPP), 3);
  CHECK(q3.p_at(3) == 1);
  CHECK(q3.p_denominator() == 7);
  CHECK(q3.prefactor.eval(3) == 1);
  CHECK(eval_conjecture(q3, 3) == 1);
  CHECK(generic_shift(ConjectureClass::QSPP, 3) == 3);
  CHECK(generic_shift(ConjectureClass::QTCPP2, 3) == BigRational(3, 2));
}

TEST_CASE("formulas reproduce enumerated counts") {
  for (int m = 0; m <= 4; ++m) {
    CHECK(conjectured_count(formula_for(calibrated_formulas(ConjectureClass::QSPP), 3), m) == qspp(3, m));
    CHECK(conjectured_count(formula_for(calibrated_formulas(ConjectureClass::QTCSPP2), 4), m) == qtcspp2(4, m));
    CHECK(conjectured_count(formula_for(calibrated_formulas(ConjectureClass::QTCPP2), 3), m) == qtcpp2(3, m));
  }
}

TEST_CASE("conjectured counts must be integers") {
  ConjectureFormula f;
  f.p = {BigRational(1, 2)};
  CHECK_THROWS_AS(conjectured_count(f, 0), std::domain_error);
  f.p = {BigRational(-1)};
  CHECK_THROWS_AS(conjectured_count(f, 0), std::domain_error);
}

TEST_CASE("calibration") {
  const auto qtc = calibrated_formulas(ConjectureClass::QTCPP2);
  for (int a : {3, 5}) {
    const auto f = formula_for(qtc, a);
    CHECK(f.calibrated);
    CHECK(f.shift == generic_shift(ConjectureClass::QTCPP2, a));
  }
  const auto q2 = formula_for(calibrated_formulas(ConjectureClass::QSPP), 2);
  CHECK_FALSE(q2.calibrated);
  CHECK(q2.shift == q2.printed_shift);

  CountTable empty = CountTable::parse_csv("class,a,c,value,provenance\n");
  const auto f = calibrate_shift(formula_for(printed_formulas(ConjectureClass::QSPP), 3), empty);
  CHECK_FALSE(f.calibrated);
}

TEST_CASE("exact even-polynomial fitting") {
  SUBCASE("qspp, a = 3") {
    const auto f = formula_for(printed_formulas(ConjectureClass::QSPP), 3);
    std::vector<Sample> samples;
    for (int m = 0; m <= 4; ++m) samples.push_back({f.shift + m, BigRational(qspp(3, m))});
    const auto p = fit_even_polynomial(samples, f.prefactor, 2);
    CHECK(p == std::vector<BigRational>{BigRational(-2, 7), 0, BigRational(1, 7)});
  }
  SUBCASE("qtcspp2, a = 4") {
    const auto f = formula_for(printed_formulas(ConjectureClass::QTCSPP2), 4);
    std::vector<Sample> samples;
    for (int m = 0; m <= 3; ++m) samples.push_back({f.shift + m, BigRational(qtcspp2(4, m))});
    const auto p = fit_even_polynomial(samples, f.prefactor, 2);
    CHECK(p == std::vector<BigRational>{BigRational(1, 10), 0, BigRational(1, 10)});
  }
  SUBCASE("rejections") {
    Prefactor one;
    const std::vector<Sample> odd{{1, 1}, {2, 2}, {3, 3}, {4, 4}};
    CHECK_THROWS_AS(fit_even_polynomial(odd, one, 2), std::domain_error);
    const std::vector<Sample> cubic{{0, 0}, {1, 1}, {2, 8}, {3, 27}, {4, 64}};
    CHECK_THROWS_AS(fit_even_polynomial(cubic, one, 2), std::domain_error);
    CHECK_THROWS_AS(fit_even_polynomial({{1, 1}}, one, 2), std::domain_error);
  }
}

TEST_CASE("verification rows") {
  const auto rows = verify_conjecture(ConjectureClass::QTCSPP2, 3, 3);
  CHECK(rows.size() == 12);
  for (const auto& r : rows) {
    REQUIRE(r.computed.has_value());
    if (r.a >= 2) CHECK(r.status == "match");
  }
  SearchOptions threaded;
  threaded.threads = 3;
  const auto again = verify_cells(ConjectureClass::QTCSPP2, {{3, 3}, {2, 1}}, threaded);
  REQUIRE(again.size() == 2);
  CHECK(again[0].a == 3);
  CHECK(again[1].c == 1);
  CHECK(to_json(rows).size() == rows.size());

  SearchOptions tiny;
  tiny.node_budget = 5;
  const auto budget = verify_cells(ConjectureClass::QSPP, {{4, 4}}, tiny);
  CHECK(budget[0].status == "budget");
  CHECK_FALSE(budget[0].computed.has_value());
}
