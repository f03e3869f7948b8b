#include <doctest.h>

#include "trump/rational.hpp"

using namespace trump;

TEST_CASE("parse_rat handles fractions, integers and decimals") {
  CHECK(parse_rat("2/9") == Rat(2, 9));
  CHECK(parse_rat("0.4") == Rat(2, 5));
  CHECK(parse_rat("-1.25") == Rat(-5, 4));
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat(" 7/21 ") == Rat(1, 3));
  CHECK(parse_rat("0.0001") == Rat(1, 10000));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.2/3"), std::invalid_argument);
}

TEST_CASE("rat_str is canonical") {
  CHECK(rat_str(Rat(4, 2)) == "2");
  CHECK(rat_str(Rat(2, 4)) == "1/2");
  CHECK(rat_str(Rat(-3, 9)) == "-1/3");
  CHECK(rat_str(parse_rat("0.4")) == "2/5");
}

TEST_CASE("pow_rat") {
  CHECK(pow_rat(Rat(2), 10) == Rat(1024));
  CHECK(pow_rat(Rat(3, 2), 0) == Rat(1));
  CHECK(pow_rat(Rat(2), -3) == Rat(1, 8));
  CHECK_THROWS_AS(pow_rat(Rat(0), -1), std::domain_error);
}

TEST_CASE("simplest_rat_in picks the smallest denominator") {
  CHECK(simplest_rat_in(Rat(1, 3), Rat(1, 2)) == Rat(1, 2));
  CHECK(simplest_rat_in(Rat(7, 10), Rat(8, 10)) == Rat(3, 4));
  CHECK(simplest_rat_in(Rat(-1, 10), Rat(1, 10)) == Rat(0));
  CHECK(simplest_rat_in(Rat(5, 2), Rat(7, 2)) == Rat(3));
  Rat lo(314159, 100000), hi(314160, 100000);
  Rat s = simplest_rat_in(lo, hi);
  CHECK(s >= lo);
  CHECK(s <= hi);
  CHECK(s.get_den() <= 1000); // 355/113 lives in that window
}

TEST_CASE("dyadic_floor") {
  CHECK(dyadic_floor(Rat(1, 3), 4) == Rat(5, 16));
  CHECK(dyadic_floor(Rat(1, 2), 4) == Rat(1, 2));
  CHECK(dyadic_floor(Rat(-1, 3), 2) == Rat(-2, 4));
}

TEST_CASE("parse_rat_list") {
  auto v = parse_rat_list("2/9,3/9,4/9");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Rat(2, 9));
  CHECK(v[2] == Rat(4, 9));
  CHECK_THROWS_AS(parse_rat_list(""), std::invalid_argument);
}
