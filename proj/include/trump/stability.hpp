#pragma once

#include "trump/means.hpp"
#include "trump/sequence.hpp"

namespace trump {

// Largest dyadic-searched radius eps such that any equal-sum perturbation
// xbar with distance(x, xbar) <= eps keeps the power-mean ratio within
// e^(+-delta|nu-1|) on nu in [1/2, 2]. Derived from the derivative bound
//   eps + ((e^(4 eps) - 1)/2) * ln(x_max/x_min) <= delta/2,
// which is certified at the returned value. x must be positive.
Rat mean_stability_radius(const ProbSequence &x, const Rat &delta,
                          mpfr_prec_t prec = Enclosure::kDefaultPrec);

// ln(S_nu(xbar)/S_nu(x)) for the nu-th power sums; exactly zero at nu = 1
// when the sums agree.
Enclosure power_sum_log_ratio(const ProbSequence &x, const ProbSequence &xbar,
                              const Rat &nu,
                              mpfr_prec_t prec = Enclosure::kDefaultPrec);

// Stability radius for the full condition set: certified sampled minima of
// |ln(A_nu(y)/A_nu(x))| away from nu = 1 (value b) and of R_nu on [1/2, 2]
// (value m), both halved for safety; the radius is
//   eps0 = min(radius(x, m/3), radius(y, m/3), b/3).
// Requires normalized positive sequences with strict extreme-element
// ordering and non-violated conditions.
struct StabilityRadius {
  Rat epsilon0;
  Rat b_lower; // certified sampled lower bound, already halved
  Rat m_lower;
};
StabilityRadius conditions_stability_radius(const ProbSequence &x,
                                            const ProbSequence &y,
                                            const ConditionOptions &opts = {});

} // namespace trump
