#pragma once

#include <optional>
#include <string>

#include "trump/sequence.hpp"

namespace trump {

// A_nu(x) = ((sum x_i^nu)/n)^(1/nu) for finite nu; the geometric mean at
// nu = 0. Elements must be positive when nu <= 0; zeros contribute 0 when
// nu > 0.
Enclosure power_mean(const ProbSequence &x, const Rat &nu,
                     mpfr_prec_t prec = Enclosure::kDefaultPrec);

// Limit values at nu = +/-inf: the extreme elements, exact.
Rat power_mean_extreme(const ProbSequence &x, bool positive_inf);

// sigma(x) = -sum x_i ln x_i, with 0 ln 0 = 0.
Enclosure entropy(const ProbSequence &x,
                  mpfr_prec_t prec = Enclosure::kDefaultPrec);

// R_nu = ln(A_nu(y)/A_nu(x)) / (nu - 1); at nu = 1 the entropy difference
// sigma(x) - sigma(y), computed from the entropy formula. Requires equal
// sums and positive x. When y has zeros and nu <= 0, A_nu(y) = 0 and the
// value is +infinity.
Enclosure r_function(const ProbSequence &x, const ProbSequence &y,
                     const Rat &nu, mpfr_prec_t prec = Enclosure::kDefaultPrec);

enum class Verdict { satisfied, violated, inconclusive };
enum class CheckMode { strict, closure };
enum class CertificateKind { exact, numeric };

struct ViolationSite {
  enum class Kind { finite_nu, nu_neg_inf, nu_pos_inf, entropy_point };
  Kind kind = Kind::finite_nu;
  Rat nu; // meaningful for finite_nu
  std::string detail;

  std::string str() const;
};

struct ConditionSample {
  Rat nu;
  Enclosure r;
};

struct ConditionOptions {
  Rat nu_min = -40;
  Rat nu_max = 40;
  int grid = 400;
  mpfr_prec_t precision = Enclosure::kDefaultPrec;
  mpfr_prec_t max_precision = 2048;
  bool use_sturm = true;
};

// Decision record for the mean/entropy inequalities over all nu. A violated
// verdict always carries a certified witness. A satisfied verdict is exact
// when backed by the polynomial root-count certificate (common rational
// power form), and numeric (grid evidence only) otherwise.
struct ConditionReport {
  Verdict verdict = Verdict::inconclusive;
  CheckMode mode = CheckMode::strict;
  CertificateKind certificate = CertificateKind::numeric;
  bool numeric_only = true;
  std::optional<ViolationSite> first_violation;
  std::vector<ConditionSample> samples;
  std::optional<Rat> min_margin; // least certified lower bound on R samples
};

// Three tiers: exact endpoint and sum checks; an exact positivity
// certificate for the gap quotient when both sequences share a rational
// power form; otherwise an adaptive enclosure grid with the entropy point.
// In strict mode the sequences must be distinct.
ConditionReport check_conditions(const ProbSequence &x, const ProbSequence &y,
                                 CheckMode mode,
                                 const ConditionOptions &opts = {});

} // namespace trump
