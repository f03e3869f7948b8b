#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trump/enclosure.hpp"
#include "trump/rational.hpp"

namespace trump {

// Finite sequence of nonnegative exact rationals. Values are immutable after
// construction; multiset semantics (order matters only for display), with the
// ascending view precomputed. Empty sequences arise from common-element
// stripping and are accepted; most operations require at least one element.
class ProbSequence {
public:
  ProbSequence() = default;
  explicit ProbSequence(std::vector<Rat> elems);

  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<Rat> &elements() const { return elems_; }
  const std::vector<Rat> &ascending() const { return sorted_; }
  const Rat &min() const;
  const Rat &max() const;
  const Rat &sum() const { return sum_; }
  bool all_positive() const;
  bool same_multiset(const ProbSequence &o) const { return sorted_ == o.sorted_; }

private:
  std::vector<Rat> elems_;
  std::vector<Rat> sorted_;
  Rat sum_;
};

ProbSequence sort_ascending(const ProbSequence &x);

// Every element multiplied by a positive factor.
ProbSequence scaled(const ProbSequence &x, const Rat &factor);

// All pairwise products x_i * c_l, length |x|*|c|.
ProbSequence tensor(const ProbSequence &x, const ProbSequence &c);

// k-fold tensor of x with itself, k >= 1.
ProbSequence tensor_power(const ProbSequence &x, unsigned k);

ProbSequence concat(const ProbSequence &x, const ProbSequence &z);

// Splits equal-length x, y into disjoint remainders plus the maximal common
// multiset: x = x_rest (+) common, y = y_rest (+) common.
struct StripResult {
  ProbSequence x_rest, y_rest, common;
};
StripResult strip_common(const ProbSequence &x, const ProbSequence &y);

// max_i |ln(x_i / xbar_i)| over the ascending views. Both sequences must be
// strictly positive and of equal length.
Enclosure distance(const ProbSequence &x, const ProbSequence &xbar,
                   mpfr_prec_t prec = Enclosure::kDefaultPrec);

// Sequence of the form scale * base^exponent_i with integer exponents.
struct PowerForm {
  Rat scale;                   // > 0
  Rat base;                    // > 1
  std::vector<long> exponents; // >= 0

  ProbSequence materialize() const;
};

// Recognizes a common representation x_i = K * w^a_i, y_j = K * w^b_j with a
// rational base w > 1 and nonnegative integer exponents whose joint minimum
// is 0. Base candidates come from the multiplicative gcd of element ratios;
// the exponent search is capped.
std::optional<std::pair<PowerForm, PowerForm>>
detect_power_form(const ProbSequence &x, const ProbSequence &y,
                  long exponent_cap = 64);

} // namespace trump
