#pragma once

#include <optional>

#include "trump/polynomial.hpp"

namespace trump {

// Raised when no multiplier within the degree cap is found.
struct degree_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gap polynomial sum_i (s^a_i - s^b_i) for exponent lists a (from y) and b
// (from x), and its exact quotient by (1 - s)(1 - s/w). Requires min(a) = 0;
// the quotient exists exactly when both sequences have equal counts and the
// materialized sequences have equal sums, and a positive constant term when
// y holds the joint minimum.
struct GapQuotient {
  RatPoly gap;      // sum s^a_i - sum s^b_i
  RatPoly quotient; // gap / ((1-s)(1-s/w))
};
GapQuotient gap_quotient(const std::vector<long> &y_exponents,
                         const std::vector<long> &x_exponents, const Rat &w);

// Writes 1 - 2*xi*s + lambda*s^2 (complex roots: lambda > xi^2 > 0) as b/a
// with nonnegative coefficients:
//   a = sum_{k<2N} (1+lambda s^2)^k (2 xi s)^(2N-1-k),
//   b = (1+lambda s^2)^(2N) - (2 xi s)^(2N),
// where N is the smallest integer with binom(2N,N)/4^N >= (xi^2/lambda)^N,
// decided in exact integer arithmetic.
struct QuadraticSplit {
  RatPoly a, b;
  unsigned long n;
};
QuadraticSplit split_complex_quadratic(const Rat &xi, const Rat &lambda);

// Multiplies (a, b) by e(s) = 1 + s + ... + s^(deg b - 1) so that every
// coefficient of the new b is strictly positive. Identity when b already is.
std::pair<RatPoly, RatPoly> ensure_strict_positive(const RatPoly &a,
                                                   const RatPoly &b);

// Perturbs the coefficients of a to nearby small rationals within
// beta / sum|q_k| (beta = min coefficient of a*q), verifies a_new * q >= 0
// coefficientwise, and scales to integer coefficients. Requires a*q to have
// strictly positive coefficients.
RatPoly rationalize_multiplier(const RatPoly &a, const RatPoly &q);

enum class PositivizeStrategy { automatic, binomial_only, factor_only };

// Finds a with nonnegative integer coefficients, a(0) > 0, such that
// b = a*q has nonnegative coefficients. Requires q(0) > 0 and q without
// positive roots. Tries a = (1+s)^m first, then the constructive
// factor-by-factor route on numerically isolated roots.
struct PositivizeResult {
  RatPoly a, b;
};
PositivizeResult positivize(const RatPoly &q, long max_degree,
                            PositivizeStrategy strategy =
                                PositivizeStrategy::automatic);

// Same multiplier search with interval coefficients: a = (1+s)^m with the
// product certified nonnegative. Returns the exponent m and certified b, or
// nullopt when the cap or the available precision is insufficient.
struct EnclosurePositivize {
  long m;
  EncPoly b;
};
std::optional<EnclosurePositivize>
positivize_enclosure(const EncPoly &q, long max_degree);

} // namespace trump
