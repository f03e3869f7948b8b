#pragma once

#include <map>
#include <optional>
#include <variant>

#include "trump/majorization.hpp"
#include "trump/means.hpp"
#include "trump/positivize.hpp"
#include "trump/sequence.hpp"

namespace trump {

// Catalyst stored as base^exponent values with multiplicities (the
// coefficients of the constructed multiplier polynomial). The base is exact
// rational, or a certified enclosure when it arises from the power-form
// sandwich of a general pair. Materialization is on demand; verification
// works on the multiplicity form directly.
struct Catalyst {
  std::variant<Rat, Enclosure> base;
  std::map<long, Int> multiplicities; // exponent -> count (> 0)

  static Catalyst trivial(); // the single-element catalyst (1)

  bool rational_base() const { return std::holds_alternative<Rat>(base); }
  const Rat &base_rat() const { return std::get<Rat>(base); }
  const Enclosure &base_enc() const { return std::get<Enclosure>(base); }
  Int total_count() const;
  ProbSequence materialize(unsigned long count_cap = 1ul << 20) const;
};

enum class VerifyOutcome { verified, refuted, inconclusive };

// Exact decision of tensor(x, c) majorized-by tensor(y, c) through the
// characteristic functions at the knots of the y-side tensor. Requires
// equal sums of x and y.
VerifyOutcome verify_catalyst(const ProbSequence &x, const ProbSequence &y,
                              const ProbSequence &c);
VerifyOutcome verify_catalyst(const ProbSequence &x, const ProbSequence &y,
                              const Catalyst &c,
                              mpfr_prec_t prec = Enclosure::kDefaultPrec);

// Case-by-case values of the majorization gap Delta(t) = H_{y(x)c}(t) -
// H_{x(x)c}(t) at the knots t = w^k, next to the closed form
// (w-1) * b_{k-1} * w^(k-1). Scale-invariant: computed with the power forms
// normalized to unit scale.
struct KnotCheck {
  long k;
  Rat gap_value;
  Rat predicted;
};

struct ConstructedCatalyst {
  Catalyst catalyst;
  RatPoly multiplier;  // a, nonnegative integer coefficients
  RatPoly certificate; // b = a * quotient, nonnegative
  RatPoly quotient;    // gap / ((1-s)(1-s/w))
};

// Builds the catalyst for a disjoint rational power-form pair with
// exactly-certified conditions: multiplicities are the coefficients of the
// positivized multiplier. The construction is verified before returning.
ConstructedCatalyst construct_catalyst(const PowerForm &x, const PowerForm &y,
                                       long max_degree = 512);

// All knots checked for exact equality with the closed form; throws
// std::logic_error on any mismatch. Also checks the zero value at t <= 1 and
// constancy beyond the last knot.
std::vector<KnotCheck> majorization_gap_at_knots(const PowerForm &x,
                                                 const PowerForm &y,
                                                 const Catalyst &c,
                                                 const RatPoly &b);

// Multiplier search over an enclosure base (the sandwich route): gap built
// exactly from the integer exponents, divided by (1-s/w) in interval
// arithmetic, multiplier (1+s)^m with the product certified nonnegative.
struct EnclosureCatalystResult {
  Catalyst catalyst;
  EncPoly certificate; // certified coefficientwise >= 0
  long binomial_m;
};
std::optional<EnclosureCatalystResult> construct_catalyst_enclosure(
    const std::vector<long> &y_exponents, const std::vector<long> &x_exponents,
    const Enclosure &base, long max_degree, long materialized_degree_cap);

} // namespace trump
