#include <doctest.h>

#include "hdp/conjectures.hpp"

using namespace hdp;

TEST_CASE("embedded reference table") {
  const CountTable& t = CountTable::appendix();
  CHECK(t.rows().size() == 194);
  CHECK(t.lookup(ConjectureClass::QSPP, 2, 2) == BigInt(20));
  CHECK(t.lookup(ConjectureClass::QSPP, 3, 3) == BigInt(272));
  CHECK(t.lookup(ConjectureClass::QSPP, 4, 4) == BigInt(16932));
  CHECK(t.lookup(ConjectureClass::QSPP, 6, 10) == BigInt("483901238656"));
  CHECK(t.lookup(ConjectureClass::QTCPP2, 3, 4) == BigInt(155));
  CHECK(t.lookup(ConjectureClass::QTCPP2, 4, 4) == BigInt(5361));
  CHECK(t.lookup(ConjectureClass::QTCSPP2, 4, 3) == BigInt(260));
  CHECK(t.lookup(ConjectureClass::QTCSPP2, 5, 5) == BigInt(8796));
  for (int c = 9; c <= 12; ++c) {
    CHECK_FALSE(t.lookup(ConjectureClass::QTCPP2, 6, c).has_value());
    CHECK_FALSE(t.lookup(ConjectureClass::QTCSPP2, 6, c).has_value());
  }
  for (const auto& r : t.cells(ConjectureClass::QSPP, 1)) CHECK(r.value == r.c + 1);
}

TEST_CASE("table CSV round trip") {
  const CountTable& t = CountTable::appendix();
  const CountTable again = CountTable::parse_csv(t.to_csv());
  REQUIRE(again.rows().size() == t.rows().size());
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    CHECK(again.rows()[i].value == t.rows()[i].value);
    CHECK(again.rows()[i].provenance == t.rows()[i].provenance);
  }
  CHECK(CountTable::parse_csv(appendix_csv()).rows().size() == t.rows().size());
}

TEST_CASE("malformed tables") {
  CHECK_THROWS_AS(CountTable::parse_csv("a,c,value\n"), std::invalid_argument);
  CHECK_THROWS_AS(CountTable::parse_csv("class,a,c,value,provenance\nqspp,1,0\n"), std::invalid_argument);
  CHECK_THROWS_AS(CountTable::parse_csv("class,a,c,value,provenance\nfoo,1,0,1,paper\n"), std::invalid_argument);
  CHECK_THROWS_AS(CountTable::parse_csv("class,a,c,value,provenance\nqspp,1,0,-1,paper\n"), std::invalid_argument);
  CHECK(CountTable::parse_csv("class,a,c,value,provenance\r\nqspp,1,0,1,paper\r\n").rows().size() == 1);
}

TEST_CASE("formulas against the table") {
  for (const auto& r : formula_vs_table(ConjectureClass::QTCSPP2)) {
    CAPTURE(r.a);
    CAPTURE(r.c);
    CHECK(r.status == "match");
  }
  for (const auto& r : formula_vs_table(ConjectureClass::QSPP)) {
    CAPTURE(r.a);
    CAPTURE(r.c);
    if (r.a != 2) CHECK(r.status == "match");
  }
}
