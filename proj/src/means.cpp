#include "trump/means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trump/positivize.hpp"

namespace trump {

namespace {

bool has_zero(const ProbSequence &x) { return !x.all_positive(); }

Enclosure power_sum(const ProbSequence &x, const Rat &nu, mpfr_prec_t prec) {
  Enclosure s(prec);
  for (const Rat &e : x.elements()) {
    if (e == 0) {
      if (nu <= 0)
        throw std::domain_error("power_mean: zero element with nu <= 0");
      continue;
    }
    s = s + pow_rat_exp(Enclosure::from_rat(e, prec), nu);
  }
  return s;
}

} // namespace

Enclosure power_mean(const ProbSequence &x, const Rat &nu, mpfr_prec_t prec) {
  if (x.empty())
    throw std::invalid_argument("power_mean: empty sequence");
  const long n = (long)x.size();
  if (nu == 0) {
    // geometric mean
    if (has_zero(x))
      throw std::domain_error("power_mean: zero element with nu <= 0");
    Enclosure acc(prec);
    for (const Rat &e : x.elements())
      acc = acc + log(Enclosure::from_rat(e, prec));
    return exp(acc / Rat(n));
  }
  Enclosure s = power_sum(x, nu, prec);
  if (s.is_exact_zero()) // all elements zero, nu > 0
    return s;
  Enclosure ln_mean = (log(s) - log(Enclosure::from_long(n, prec))) / nu;
  return exp(ln_mean);
}

Rat power_mean_extreme(const ProbSequence &x, bool positive_inf) {
  return positive_inf ? x.max() : x.min();
}

Enclosure entropy(const ProbSequence &x, mpfr_prec_t prec) {
  Enclosure s(prec);
  for (const Rat &e : x.elements()) {
    if (e == 0)
      continue; // 0 ln 0 = 0
    Enclosure v = Enclosure::from_rat(e, prec);
    s = s - v * log(v);
  }
  return s;
}

Enclosure r_function(const ProbSequence &x, const ProbSequence &y,
                     const Rat &nu, mpfr_prec_t prec) {
  if (x.size() != y.size())
    throw std::invalid_argument("r_function: length mismatch");
  if (x.sum() != y.sum())
    throw std::invalid_argument("r_function: sums differ");
  if (has_zero(x))
    throw std::domain_error("r_function: x must be positive");
  if (x.same_multiset(y))
    return Enclosure(prec); // exactly zero for identical multisets
  if (nu == 1)
    return entropy(x, prec) - entropy(y, prec);
  if (has_zero(y) && nu <= 0)
    return Enclosure::pos_infinity(prec); // A_nu(y) = 0 < A_nu(x)
  Enclosure lx = log(power_mean(x, nu, prec));
  Enclosure ly = log(power_mean(y, nu, prec));
  return (ly - lx) / (nu - Rat(1));
}

std::string ViolationSite::str() const {
  switch (kind) {
  case Kind::nu_neg_inf:
    return "nu->-inf endpoint: " + detail;
  case Kind::nu_pos_inf:
    return "nu->+inf endpoint: " + detail;
  case Kind::entropy_point:
    return "entropy (nu=1): " + detail;
  case Kind::finite_nu:
    return "nu=" + rat_str(nu) + ": " + detail;
  }
  return detail;
}

namespace {

std::vector<Rat> chebyshev_grid(const Rat &lo, const Rat &hi, int n) {
  std::vector<Rat> out;
  if (n <= 1) {
    out.push_back((lo + hi) / 2);
    return out;
  }
  const double a = lo.get_d(), b = hi.get_d();
  for (int j = 0; j < n; ++j) {
    double t = std::cos(M_PI * (double)j / (double)(n - 1));
    double v = 0.5 * (a + b) + 0.5 * (b - a) * t;
    out.push_back(Rat(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct GridOutcome {
  bool certified_violation = false;
  bool ambiguous = false;
  Rat violation_nu;
  std::string violation_detail;
};

} // namespace

ConditionReport check_conditions(const ProbSequence &x, const ProbSequence &y,
                                 CheckMode mode, const ConditionOptions &opts) {
  if (x.size() != y.size())
    throw std::invalid_argument("check_conditions: length mismatch");
  if (x.empty())
    throw std::invalid_argument("check_conditions: empty sequences");
  if (x.sum() != y.sum())
    throw std::invalid_argument("check_conditions: sums differ");
  if (has_zero(x))
    throw std::domain_error("check_conditions: x must be positive");

  ConditionReport rep;
  rep.mode = mode;

  if (x.same_multiset(y)) {
    if (mode == CheckMode::strict)
      throw std::invalid_argument(
          "check_conditions: sequences must be distinct in strict mode");
    rep.verdict = Verdict::satisfied;
    rep.certificate = CertificateKind::exact;
    rep.numeric_only = false;
    rep.samples.push_back({Rat(1), Enclosure(opts.precision)});
    rep.min_margin = Rat(0);
    return rep;
  }

  // exact endpoint checks (limits at nu -> -inf and +inf, non-strict)
  StripResult stripped = strip_common(x, y);
  const ProbSequence &xs = stripped.x_rest;
  const ProbSequence &ys = stripped.y_rest;
  if (xs.min() < ys.min()) {
    rep.verdict = Verdict::violated;
    rep.certificate = CertificateKind::exact;
    rep.numeric_only = false;
    rep.first_violation = ViolationSite{ViolationSite::Kind::nu_neg_inf, Rat(0),
                                        rat_str(xs.min()) + " < " +
                                            rat_str(ys.min())};
    return rep;
  }
  if (xs.max() > ys.max()) {
    rep.verdict = Verdict::violated;
    rep.certificate = CertificateKind::exact;
    rep.numeric_only = false;
    rep.first_violation = ViolationSite{ViolationSite::Kind::nu_pos_inf, Rat(0),
                                        rat_str(xs.max()) + " > " +
                                            rat_str(ys.max())};
    return rep;
  }

  // exact certificate via the gap quotient when a rational power form exists
  bool exact_settled = false;
  if (opts.use_sturm && xs.all_positive() && ys.all_positive()) {
    if (auto pf = detect_power_form(xs, ys)) {
      const auto &[fx, fy] = *pf;
      GapQuotient gq =
          gap_quotient(fy.exponents, fx.exponents, fx.base);
      int roots = count_positive_roots(gq.quotient);
      if (roots == 0) {
        rep.verdict = Verdict::satisfied;
        rep.certificate = CertificateKind::exact;
        rep.numeric_only = false;
        exact_settled = true;
      } else {
        auto intervals = isolate_positive_roots(gq.quotient);
        bool negative_somewhere = false;
        Rat neg_at;
        for (const auto &[a, b] : intervals) {
          if (gq.quotient.evaluate(b) < 0 || gq.quotient.evaluate(a) < 0) {
            negative_somewhere = true;
            neg_at = gq.quotient.evaluate(a) < 0 ? a : b;
            break;
          }
        }
        if (mode == CheckMode::strict || negative_somewhere) {
          rep.verdict = Verdict::violated;
          rep.certificate = CertificateKind::exact;
          rep.numeric_only = false;
          const auto &[ra, rb] = intervals.front();
          double s0 = (ra.get_d() + rb.get_d()) / 2;
          double nu0 = std::log(s0) / std::log(fx.base.get_d());
          std::ostringstream det;
          det << "mean equality near nu=" << nu0
              << " (gap quotient root in (" << rat_str(ra) << ", "
              << rat_str(rb) << "])";
          rep.first_violation = ViolationSite{ViolationSite::Kind::finite_nu,
                                              Rat(nu0), det.str()};
          return rep;
        }
        // closure mode, roots without sign change: quotient stays >= 0
        rep.verdict = Verdict::satisfied;
        rep.certificate = CertificateKind::exact;
        rep.numeric_only = false;
        exact_settled = true;
      }
    }
  }

  // enclosure grid over [nu_min, nu_max] plus the entropy point
  std::vector<Rat> grid = chebyshev_grid(opts.nu_min, opts.nu_max, opts.grid);
  grid.push_back(Rat(1));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto eval_certified = [&](const Rat &nu) {
    mpfr_prec_t p = opts.precision;
    Enclosure r = r_function(x, y, nu, p);
    while (r.certain_sign() == 0 && !r.is_exact_zero() &&
           p < opts.max_precision) {
      p *= 2;
      r = r_function(x, y, nu, p);
    }
    return r;
  };

  GridOutcome out;
  std::vector<Rat> ambiguous_at;
  for (size_t i = 0; i < grid.size(); ++i) {
    const Rat &nu = grid[i];
    Enclosure r = eval_certified(nu);
    rep.samples.push_back({nu, r});
    int sign = r.certain_sign();
    bool strict_zero = r.is_exact_zero() && mode == CheckMode::strict;
    if ((sign < 0 || strict_zero) && !out.certified_violation) {
      out.certified_violation = true;
      out.violation_nu = nu;
      std::ostringstream det;
      det << "certified R in [" << r.lo_d() << ", " << r.hi_d() << "]";
      out.violation_detail = det.str();
    } else if (sign == 0 && !r.is_exact_zero()) {
      out.ambiguous = true;
      ambiguous_at.push_back(nu);
    }
  }

  // local refinement around sign-ambiguous nodes
  for (const Rat &nu : ambiguous_at) {
    auto it = std::lower_bound(grid.begin(), grid.end(), nu);
    size_t idx = (size_t)(it - grid.begin());
    Rat left = idx > 0 ? grid[idx - 1] : opts.nu_min;
    Rat right = idx + 1 < grid.size() ? grid[idx + 1] : opts.nu_max;
    for (const Rat &probe : {(left + nu) / 2, (nu + right) / 2}) {
      Enclosure r = eval_certified(probe);
      rep.samples.push_back({probe, r});
      if (r.certain_sign() < 0 && !out.certified_violation) {
        out.certified_violation = true;
        out.violation_nu = probe;
        out.violation_detail = "certified negative R near ambiguous node";
      }
    }
  }
  std::sort(rep.samples.begin(), rep.samples.end(),
            [](const ConditionSample &a, const ConditionSample &b) {
              return a.nu < b.nu;
            });

  for (const ConditionSample &s : rep.samples) {
    if (!s.r.lo_finite())
      continue;
    Rat lo = s.r.lo_rat();
    if (!rep.min_margin || lo < *rep.min_margin)
      rep.min_margin = lo;
  }

  if (out.certified_violation) {
    if (exact_settled)
      throw std::logic_error(
          "check_conditions: grid contradicts exact certificate");
    rep.verdict = Verdict::violated;
    rep.certificate = CertificateKind::numeric;
    rep.numeric_only = false; // the violation itself is certified
    ViolationSite::Kind kind = out.violation_nu == 1
                                   ? ViolationSite::Kind::entropy_point
                                   : ViolationSite::Kind::finite_nu;
    rep.first_violation =
        ViolationSite{kind, out.violation_nu, out.violation_detail};
    return rep;
  }
  if (exact_settled)
    return rep;
  if (out.ambiguous) {
    rep.verdict = Verdict::inconclusive;
    rep.certificate = CertificateKind::numeric;
    rep.numeric_only = true;
    return rep;
  }
  rep.verdict = Verdict::satisfied;
  rep.certificate = CertificateKind::numeric;
  rep.numeric_only = true;
  return rep;
}

} // namespace trump
