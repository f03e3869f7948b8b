#include <doctest.h>

#include <cmath>

#include "trump/enclosure.hpp"

using namespace trump;

TEST_CASE("from_rat brackets the exact value") {
  Enclosure e = Enclosure::from_rat(Rat(2, 9));
  CHECK(e.contains_rat(Rat(2, 9)));
  CHECK(e.lo_d() <= 2.0 / 9);
  CHECK(e.hi_d() >= 2.0 / 9);
  CHECK(e.certain_sign() == 1);
}

TEST_CASE("arithmetic preserves containment") {
  Enclosure a = Enclosure::from_rat(Rat(1, 3));
  Enclosure b = Enclosure::from_rat(Rat(1, 7));
  Enclosure s = a + b, d = a - b, p = a * b, q = a / b;
  CHECK(s.contains_rat(Rat(1, 3) + Rat(1, 7)));
  CHECK(d.contains_rat(Rat(1, 3) - Rat(1, 7)));
  CHECK(p.contains_rat(Rat(1, 21)));
  CHECK(q.contains_rat(Rat(7, 3)));
  CHECK(q.width_d() < 1e-30);
}

TEST_CASE("division by an interval containing zero throws") {
  Enclosure z = Enclosure::from_bounds_rat(Rat(-1), Rat(1));
  CHECK_THROWS_AS(Enclosure::from_long(1) / z, std::domain_error);
}

TEST_CASE("exp and log are inverse within widening") {
  Enclosure x = Enclosure::from_rat(Rat(5, 4));
  Enclosure y = exp(log(x));
  CHECK(y.contains_rat(Rat(5, 4)));
  CHECK(log(Enclosure::from_long(1)).contains_zero());
  CHECK_THROWS_AS(log(Enclosure::from_long(-1)), std::domain_error);
}

TEST_CASE("pow_int covers sign cases") {
  Enclosure m = Enclosure::from_bounds_rat(Rat(-2), Rat(3));
  Enclosure sq = pow_int(m, 2);
  CHECK(sq.lo_sign() == 0); // contains 0
  CHECK(sq.contains_rat(Rat(9)));
  CHECK(sq.contains_rat(Rat(4)));
  Enclosure c = pow_int(m, 3);
  CHECK(c.contains_rat(Rat(-8)));
  CHECK(c.contains_rat(Rat(27)));
  CHECK(pow_int(Enclosure::from_rat(Rat(1, 2)), -2).contains_rat(Rat(4)));
}

TEST_CASE("pow_rat_exp matches double evaluation") {
  Enclosure b = Enclosure::from_rat(Rat(3, 2));
  Enclosure r = pow_rat_exp(b, Rat(1, 2));
  double expect = std::sqrt(1.5);
  CHECK(r.lo_d() <= expect);
  CHECK(r.hi_d() >= expect);
  // zero base
  Enclosure z = pow_rat_exp(Enclosure(), Rat(1, 2));
  CHECK(z.is_exact_zero());
  CHECK_THROWS_AS(pow_rat_exp(Enclosure(), Rat(-1, 2)), std::domain_error);
}

TEST_CASE("certified comparisons") {
  Enclosure a = Enclosure::from_rat(Rat(1, 3));
  Enclosure b = Enclosure::from_rat(Rat(1, 2));
  CHECK(Enclosure::surely_lt(a, b));
  CHECK(!Enclosure::surely_lt(b, a));
  CHECK(Enclosure::surely_le(a, a + b - b) ==
        false); // widened interval overlaps
}

TEST_CASE("precision escalation tightens width") {
  Enclosure coarse = log(Enclosure::from_rat(Rat(2), 64));
  Enclosure fine = log(Enclosure::from_rat(Rat(2), 512));
  CHECK(fine.width_d() <= coarse.width_d());
  CHECK(fine.contains_rat(fine.lo_rat()));
}

TEST_CASE("infinite endpoints propagate through exp") {
  Enclosure inf = Enclosure::pos_infinity();
  CHECK(!inf.lo_finite());
  CHECK(inf.certain_sign() == 1);
  Enclosure l = log(Enclosure::from_bounds_rat(Rat(0), Rat(1)));
  CHECK(!l.lo_finite()); // log 0 = -inf
  CHECK(exp(l).lo_d() == 0.0);
}
