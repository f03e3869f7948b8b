#pragma once

#include <optional>

#include "trump/sequence.hpp"

namespace trump {

// Outcome of an ascending-partial-sum comparison. On failure, the smallest
// prefix length m whose sums violate the ordering is reported together with
// both partial sums.
struct MajorizationResult {
  bool holds = false;
  std::optional<size_t> violation_m; // 1-based prefix length
  Rat x_partial, y_partial;          // partial sums at the violation

  explicit operator bool() const { return holds; }
};

// x majorized by y: every ascending m-prefix sum of x dominates y's, with
// exactly equal totals. Length mismatch or unequal sums is an error, not a
// "false" verdict.
MajorizationResult is_majorized(const ProbSequence &x, const ProbSequence &y);

// H_x(t) = sum_i max(t - x_i, 0), exact.
Rat characteristic(const ProbSequence &x, const Rat &t);

// Equivalent decision through pointwise domination of the characteristic
// functions, evaluated at the finitely many knots (element values). Both
// functions are piecewise linear with equal slopes beyond the last knot, so
// the knot set decides the comparison.
bool is_majorized_via_characteristic(const ProbSequence &x,
                                     const ProbSequence &y);

} // namespace trump
