#pragma once

#include <optional>
#include <string>

#include "trump/catalyst.hpp"
#include "trump/means.hpp"
#include "trump/stability.hpp"

namespace trump {

struct ReductionOptions {
  ConditionOptions cond;
  long max_degree = 512;
  mpfr_prec_t precision = Enclosure::kDefaultPrec;
  bool construct = true;
  // Cap on the materialized gap-polynomial degree for the enclosure-base
  // route; the common denominator of the log approximations typically pushes
  // past it, in which case construction reports inconclusive.
  long sandwich_degree_cap = 4096;
};

// Power form with certified-real scale and base: element i is
// scale * base^exponent_i, also materialized directly for tighter values.
struct EncPowerForm {
  Enclosure scale;
  Enclosure base;
  std::vector<Int> exponents;     // joint min 0 across the produced pair
  std::vector<Enclosure> values;  // per-element enclosures, input order
};

// Artifacts of the reduction of a positive disjoint pair to a power-form
// sandwich x <= xbar, ybar <= y (elementwise off the top element), with
// rational log approximations alpha_i ~ ln y_i, beta_i ~ ln x_i on a common
// denominator, the root lambda0 of sum(e^(la_i) - e^(lb_i)) near 1, and the
// normalizer z0.
struct SandwichReduction {
  Rat epsilon;
  Rat epsilon0;            // stability radius of the conditions
  Enclosure log_bound;     // L = |ln min(y)|
  Enclosure entropy_gap;   // H = entropy(x) - entropy(y)
  std::vector<Rat> alpha;  // ascending-y order
  std::vector<Rat> beta;   // ascending-x order
  std::vector<Enclosure> phi, theta; // deviations from the true logs
  Enclosure lambda0;
  Enclosure z0;
  Int common_denominator;
  EncPowerForm xbar, ybar;
};

SandwichReduction sandwich_reduce(const ProbSequence &x, const ProbSequence &y,
                                  const ReductionOptions &opts = {});

// z with the zero elements of y replaced by eps and the rest rescaled by
// (1 - m*eps); exactly majorized by y throughout the admissible eps range.
ProbSequence zero_padded(const ProbSequence &y, const Rat &eps);

struct ZeroPaddingReduction {
  long zero_count; // m
  Rat epsilon;
  std::optional<Rat> bound_nonpos_exact; // eps1 when m divides n
  Enclosure bound_nonpos;                // eps1, covers nu <= 0
  Enclosure bound_small;                 // eps2, covers 0 < nu <= 1/2
  Enclosure bound_large;                 // eps3, covers nu >= 2
  Rat bound_mid;                         // eps4, covers 1/2 <= nu <= 2
  Enclosure j_min;   // sampled min of the small-nu gap root
  Enclosure k_ratio; // sampled max of A_nu(x)/A_nu(y) on [2, inf]
  Enclosure m_min;   // sampled min of R_nu on [1/2, 2]
  ProbSequence padded;
};

ZeroPaddingReduction zero_padding_reduce(const ProbSequence &x,
                                         const ProbSequence &y,
                                         const ReductionOptions &opts = {});

enum class TrumpingStatus {
  not_trumped,
  trumped,
  trumped_conditions_only,
  inconclusive
};

struct TrumpingReport {
  TrumpingStatus status = TrumpingStatus::inconclusive;
  std::string witness; // for not_trumped
  std::string route;
  std::string note;
  ConditionReport conditions;
  std::optional<Catalyst> catalyst;
  std::optional<RatPoly> certificate; // b polynomial, rational route
  std::vector<KnotCheck> knots;
};

// Full pipeline: strip common elements, exact sum check, condition check,
// then the construction dispatch (exact power form / zero padding /
// power-form sandwich). x must be positive and of the same length as y.
TrumpingReport decide_trumping(const ProbSequence &x, const ProbSequence &y,
                               const ReductionOptions &opts = {});

} // namespace trump
