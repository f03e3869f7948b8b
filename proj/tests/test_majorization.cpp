#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "trump/enclosure.hpp"
#include "trump/majorization.hpp"

using namespace trump;

namespace {
ProbSequence seq(const std::string &csv) {
  return ProbSequence(parse_rat_list(csv));
}
} // namespace

TEST_CASE("is_majorized basics") {
  CHECK(is_majorized(seq("1/2,1/2"), seq("0,1")).holds);
  ProbSequence x = seq("2/7,5/7");
  CHECK(is_majorized(x, x).holds);
  auto r = is_majorized(seq("0.1,0.1,0.4,0.4"), seq("0,0.25,0.25,0.5"));
  CHECK(!r.holds);
  REQUIRE(r.violation_m.has_value());
  CHECK(*r.violation_m == 2);
  CHECK(r.x_partial == Rat(1, 5));
  CHECK(r.y_partial == Rat(1, 4));
}

TEST_CASE("is_majorized errors") {
  CHECK_THROWS_AS(is_majorized(seq("1"), seq("1,2")), std::invalid_argument);
  CHECK_THROWS_AS(is_majorized(seq("1/2,1/2"), seq("1/2,1")),
                  std::invalid_argument);
}

TEST_CASE("characteristic function") {
  ProbSequence x = seq("1/2,1/2");
  CHECK(characteristic(x, Rat(1, 4)) == 0);
  CHECK(characteristic(x, Rat(1)) == 1);
  CHECK(characteristic(seq("1/4,3/4"), Rat(1, 2)) == Rat(1, 4));
  CHECK_THROWS_AS(characteristic(x, Rat(-1)), std::domain_error);
}

TEST_CASE("characteristic route agrees with partial sums") {
  CHECK(is_majorized_via_characteristic(seq("1/2,1/2"), seq("0,1")));
  CHECK(!is_majorized_via_characteristic(seq("0.1,0.1,0.4,0.4"),
                                         seq("0,0.25,0.25,0.5")));
  CHECK(is_majorized_via_characteristic(seq("1,0"), seq("1,0")));
}

TEST_CASE("two majorization routes agree on random equal-sum pairs") {
  std::mt19937 rng(23);
  for (int it = 0; it < 1000; ++it) {
    size_t n = 2 + it % 7; // n <= 8
    ProbSequence x = testgen::random_positive(rng, n, 12, 8);
    ProbSequence y = testgen::random_positive(rng, n, 12, 8);
    y = scaled(y, x.sum() / y.sum());
    CHECK(is_majorized(x, y).holds == is_majorized_via_characteristic(x, y));
  }
}

TEST_CASE("cross-product identity for the characteristic function") {
  std::mt19937 rng(29);
  for (int it = 0; it < 30; ++it) {
    ProbSequence x = testgen::random_positive(rng, 3);
    ProbSequence c = testgen::random_positive(rng, 2);
    Rat t = testgen::random_rat(rng);
    Rat lhs = characteristic(tensor(x, c), t);
    Rat rhs = 0;
    for (const Rat &cl : c.elements())
      rhs += cl * characteristic(x, t / cl);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("transitivity via averaging chains") {
  std::mt19937 rng(31);
  for (int it = 0; it < 50; ++it) {
    ProbSequence z = testgen::random_positive(rng, 4);
    ProbSequence y = z;
    for (int k = 0; k < 3; ++k)
      y = testgen::t_transform(y, rng);
    ProbSequence x = y;
    for (int k = 0; k < 3; ++k)
      x = testgen::t_transform(x, rng);
    CHECK(is_majorized(y, z).holds);
    CHECK(is_majorized(x, y).holds);
    CHECK(is_majorized(x, z).holds);
  }
}

TEST_CASE("convex sums respect majorization") {
  std::mt19937 rng(37);
  const mpfr_prec_t prec = 128;
  for (int it = 0; it < 40; ++it) {
    auto [x, y] = testgen::random_majorized_pair(rng, 4);
    REQUIRE(is_majorized(x, y).holds);
    // f(t) = t^2, exact
    Rat sx = 0, sy = 0;
    for (const Rat &v : x.elements())
      sx += v * v;
    for (const Rat &v : y.elements())
      sy += v * v;
    CHECK(sx <= sy);
    if (!x.same_multiset(y))
      CHECK(sx < sy);
    // f(t) = t ln t and f(t) = -ln(t+1), enclosures
    Enclosure ex(prec), ey(prec), lx(prec), ly(prec);
    for (const Rat &v : x.elements()) {
      Enclosure e = Enclosure::from_rat(v, prec);
      ex = ex + e * log(e);
      lx = lx - log(e + Rat(1));
    }
    for (const Rat &v : y.elements()) {
      Enclosure e = Enclosure::from_rat(v, prec);
      ey = ey + e * log(e);
      ly = ly - log(e + Rat(1));
    }
    CHECK(ex.lo_d() <= ey.hi_d());
    CHECK(lx.lo_d() <= ly.hi_d());
  }
}

TEST_CASE("tensoring with a catalyst preserves majorization") {
  std::mt19937 rng(41);
  for (int it = 0; it < 40; ++it) {
    auto [x, y] = testgen::random_majorized_pair(rng, 3);
    ProbSequence c = testgen::random_positive(rng, 2);
    CHECK(is_majorized(tensor(x, c), tensor(y, c)).holds);
  }
}
