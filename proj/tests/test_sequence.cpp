#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "trump/sequence.hpp"

using namespace trump;

namespace {
ProbSequence seq(const std::string &csv) {
  return ProbSequence(parse_rat_list(csv));
}
} // namespace

TEST_CASE("construction rejects negatives, computes views") {
  CHECK_THROWS_AS(ProbSequence({Rat(-1)}), std::invalid_argument);
  ProbSequence s = seq("3,1,2");
  CHECK(s.ascending() == std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
  CHECK(s.sum() == 6);
  CHECK(s.min() == 1);
  CHECK(s.max() == 3);
  CHECK(s.all_positive());
  CHECK(!seq("0,1").all_positive());
}

TEST_CASE("sort_ascending") {
  CHECK(sort_ascending(seq("3,1,2")).elements() ==
        std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
  CHECK(sort_ascending(seq("1/2,1/2")).elements() ==
        std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  CHECK(sort_ascending(seq("4/9,2/9,3/9")).elements() ==
        std::vector<Rat>{Rat(2, 9), Rat(3, 9), Rat(4, 9)});
}

TEST_CASE("tensor") {
  CHECK(tensor(seq("1"), seq("1/2,1/2")).same_multiset(seq("1/2,1/2")));
  CHECK(tensor(seq("1/2,1/2"), seq("1/2,1/2"))
            .same_multiset(seq("1/4,1/4,1/4,1/4")));
  CHECK(tensor(seq("2/5,3/5"), seq("3/5,2/5"))
            .same_multiset(seq("6/25,4/25,9/25,6/25")));
}

TEST_CASE("tensor properties") {
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    ProbSequence x = testgen::random_positive(rng, 1 + it % 4);
    ProbSequence c = testgen::random_positive(rng, 1 + (it / 2) % 3);
    CHECK(tensor(x, c).same_multiset(tensor(c, x)));
    CHECK(tensor(x, c).sum() == x.sum() * c.sum());
  }
}

TEST_CASE("tensor_power") {
  ProbSequence x = seq("1/2,1/3");
  CHECK(tensor_power(x, 1).same_multiset(x));
  CHECK(tensor_power(seq("1/2,1/2"), 2).same_multiset(seq("1/4,1/4,1/4,1/4")));
  CHECK_THROWS_AS(tensor_power(x, 0), std::invalid_argument);
}

TEST_CASE("concat") {
  CHECK(concat(seq("1"), seq("2")).same_multiset(seq("1,2")));
  CHECK(concat(seq("1/4"), seq("1/4,1/2")).same_multiset(seq("1/4,1/4,1/2")));
  ProbSequence empty;
  CHECK(concat(seq("1,2"), empty).same_multiset(seq("1,2")));
}

TEST_CASE("strip_common") {
  auto r1 = strip_common(seq("1,2,3"), seq("1,2,3"));
  CHECK(r1.x_rest.empty());
  CHECK(r1.y_rest.empty());
  CHECK(r1.common.same_multiset(seq("1,2,3")));

  auto r2 = strip_common(seq("1,2,3"), seq("1,4,5"));
  CHECK(r2.x_rest.same_multiset(seq("2,3")));
  CHECK(r2.y_rest.same_multiset(seq("4,5")));
  CHECK(r2.common.same_multiset(seq("1")));

  auto r3 = strip_common(seq("1,1,2"), seq("1,2,2"));
  CHECK(r3.x_rest.same_multiset(seq("1")));
  CHECK(r3.y_rest.same_multiset(seq("2")));
  CHECK(r3.common.same_multiset(seq("1,2")));

  CHECK_THROWS_AS(strip_common(seq("1"), seq("1,2")), std::invalid_argument);
}

TEST_CASE("strip then concat reconstructs the multisets") {
  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    size_t n = 1 + it % 5;
    ProbSequence x = testgen::random_positive(rng, n, 6, 4);
    ProbSequence y = testgen::random_positive(rng, n, 6, 4);
    auto r = strip_common(x, y);
    CHECK(concat(r.x_rest, r.common).same_multiset(x));
    CHECK(concat(r.y_rest, r.common).same_multiset(y));
  }
}

TEST_CASE("distance") {
  CHECK(distance(seq("1/2,1/3"), seq("1/3,1/2")).is_exact_zero());
  Enclosure d = distance(seq("1/2,1/2"), seq("1/4,3/4"));
  CHECK(d.contains_rat(Rat(0)) == false);
  CHECK(d.lo_d() <= std::log(2.0));
  CHECK(d.hi_d() >= std::log(2.0));
  CHECK_THROWS_AS(distance(seq("0,1"), seq("1,1")), std::domain_error);
  CHECK_THROWS_AS(distance(seq("1"), seq("1,1")), std::invalid_argument);
}

TEST_CASE("distance symmetry and triangle inequality") {
  std::mt19937 rng(13);
  for (int it = 0; it < 30; ++it) {
    size_t n = 2 + it % 3;
    ProbSequence a = testgen::random_positive(rng, n);
    ProbSequence b = testgen::random_positive(rng, n);
    ProbSequence c = testgen::random_positive(rng, n);
    Enclosure ab = distance(a, b), ba = distance(b, a);
    CHECK(ab.lo_d() <= ba.hi_d());
    CHECK(ba.lo_d() <= ab.hi_d());
    Enclosure ac = distance(a, c), cb = distance(c, b);
    CHECK(ab.lo_d() <= ac.hi_d() + cb.hi_d() + 1e-12);
  }
}

TEST_CASE("detect_power_form on powers of 2") {
  auto pf = detect_power_form(seq("1,2,4"), seq("1,1,8"));
  REQUIRE(pf.has_value());
  CHECK(pf->first.base == 2);
  CHECK(pf->first.scale == 1);
  CHECK(pf->first.exponents == std::vector<long>{0, 1, 2});
  CHECK(pf->second.exponents == std::vector<long>{0, 0, 3});
}

TEST_CASE("detect_power_form base 3 with scale") {
  auto pf = detect_power_form(seq("1/3,1"), seq("1/9,1/9"));
  REQUIRE(pf.has_value());
  CHECK(pf->first.base == 3);
  CHECK(pf->first.scale == Rat(1, 9));
  CHECK(pf->first.materialize().same_multiset(seq("1/3,1")));
  CHECK(pf->second.materialize().same_multiset(seq("1/9,1/9")));
}

TEST_CASE("detect_power_form finds the finer common base") {
  // ratios 4 and 8 are only commensurable through base 2
  auto pf = detect_power_form(seq("1,4"), seq("8,8"));
  REQUIRE(pf.has_value());
  CHECK(pf->first.base == 2);
}

TEST_CASE("detect_power_form rejects incommensurable elements") {
  CHECK(!detect_power_form(seq("1/2,1"), seq("1/3,1")).has_value());
  CHECK(!detect_power_form(seq("2,3"), seq("2,3")).has_value());
  CHECK(!detect_power_form(seq("0,1"), seq("1,1")).has_value());
}

TEST_CASE("detect_power_form round trip on random power sequences") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> exp(0, 6);
  for (int it = 0; it < 40; ++it) {
    Rat base = it % 2 ? Rat(2) : Rat(3, 2);
    Rat scale(1 + it % 3, 7);
    std::vector<Rat> xv, yv;
    for (int i = 0; i < 3; ++i) {
      xv.push_back(scale * pow_rat(base, exp(rng)));
      yv.push_back(scale * pow_rat(base, exp(rng)));
    }
    ProbSequence x{xv}, y{yv};
    auto pf = detect_power_form(x, y);
    REQUIRE(pf.has_value());
    CHECK(pf->first.materialize().same_multiset(x));
    CHECK(pf->second.materialize().same_multiset(y));
    long jmin = 1000;
    for (long e : pf->first.exponents)
      jmin = std::min(jmin, e);
    for (long e : pf->second.exponents)
      jmin = std::min(jmin, e);
    CHECK(jmin == 0);
  }
}
