#include "trump/stability.hpp"

#include <stdexcept>

namespace trump {

namespace {

// eps + ((e^(4 eps) - 1)/2) * ln(xmax/xmin)
Enclosure radius_bound(const Rat &eps, const Rat &spread_ratio,
                       mpfr_prec_t prec) {
  Enclosure e = Enclosure::from_rat(eps, prec);
  Enclosure growth =
      (exp(e * Rat(4)) - Enclosure::from_long(1, prec)) / Rat(2);
  return e + growth * log(Enclosure::from_rat(spread_ratio, prec));
}

} // namespace

Rat mean_stability_radius(const ProbSequence &x, const Rat &delta,
                          mpfr_prec_t prec) {
  if (!x.all_positive())
    throw std::domain_error("mean_stability_radius: x must be positive");
  if (delta <= 0)
    throw std::invalid_argument("mean_stability_radius: delta must be > 0");
  const Rat target = delta / 2;
  if (x.min() == x.max())
    return target; // log-spread term vanishes; the bound is eps <= delta/2

  const Rat spread = x.max() / x.min();
  auto certified_ok = [&](const Rat &eps) {
    Enclosure b = radius_bound(eps, spread, prec);
    return Enclosure::surely_le(b, Enclosure::from_rat(target, prec));
  };
  // the bound is increasing in eps; eps = target is an upper limit since the
  // bound is at least eps
  Rat lo = 0, hi = target;
  for (int it = 0; it < 60; ++it) {
    Rat mid = (lo + hi) / 2;
    if (certified_ok(mid))
      lo = mid;
    else
      hi = mid;
  }
  if (lo == 0)
    throw std::runtime_error("mean_stability_radius: no certified radius");
  return lo;
}

Enclosure power_sum_log_ratio(const ProbSequence &x, const ProbSequence &xbar,
                              const Rat &nu, mpfr_prec_t prec) {
  if (!x.all_positive() || !xbar.all_positive())
    throw std::domain_error("power_sum_log_ratio: zero element");
  if (nu == 1 && x.sum() == xbar.sum())
    return Enclosure(prec); // exactly zero
  auto s = [&](const ProbSequence &v) {
    Enclosure acc(prec);
    for (const Rat &e : v.elements())
      acc = acc + pow_rat_exp(Enclosure::from_rat(e, prec), nu);
    return acc;
  };
  return log(s(xbar)) - log(s(x));
}

StabilityRadius conditions_stability_radius(const ProbSequence &x,
                                            const ProbSequence &y,
                                            const ConditionOptions &opts) {
  if (x.size() != y.size())
    throw std::invalid_argument("conditions_stability_radius: length mismatch");
  if (x.sum() != 1 || y.sum() != 1)
    throw std::invalid_argument(
        "conditions_stability_radius: sequences must be normalized");
  if (!x.all_positive() || !y.all_positive())
    throw std::domain_error("conditions_stability_radius: zero element");
  if (!(x.min() > y.min()) || !(x.max() < y.max()))
    throw std::invalid_argument(
        "conditions_stability_radius: extreme elements must differ strictly");
  ConditionReport cr = check_conditions(x, y, CheckMode::strict, opts);
  if (cr.verdict == Verdict::violated)
    throw std::invalid_argument(
        "conditions_stability_radius: conditions violated");

  const mpfr_prec_t prec = opts.precision;
  auto g_of = [&](const Rat &nu) { // ln(A_nu(y)/A_nu(x))
    return log(power_mean(y, nu, prec)) - log(power_mean(x, nu, prec));
  };

  // b: min |G_nu| over [nu_min, 1/2] u [2, nu_max] u both infinite endpoints
  Rat b_min;
  bool have_b = false;
  auto fold_b = [&](const Rat &v) {
    if (!have_b || v < b_min) {
      b_min = v;
      have_b = true;
    }
  };
  auto sample_abs_g = [&](const Rat &nu) {
    mpfr_prec_t p = prec;
    Enclosure g = g_of(nu);
    while (abs(g).lo_sign() <= 0 && p < opts.max_precision) {
      p *= 2;
      g = log(power_mean(y, nu, p)) - log(power_mean(x, nu, p));
    }
    Enclosure a = abs(g);
    if (a.lo_sign() <= 0)
      throw std::runtime_error(
          "conditions_stability_radius: cannot certify |G| > 0 at nu=" +
          rat_str(nu));
    fold_b(a.lo_rat());
  };
  const int half_grid = std::max(8, opts.grid / 4);
  Rat lo = opts.nu_min, hi = Rat(1, 2);
  for (int j = 0; j <= half_grid; ++j)
    sample_abs_g(lo + (hi - lo) * Rat(j, half_grid));
  lo = Rat(2), hi = opts.nu_max;
  for (int j = 0; j <= half_grid; ++j)
    sample_abs_g(lo + (hi - lo) * Rat(j, half_grid));
  // exact infinite endpoints: |ln(extreme ratios)|
  for (Rat ratio : {y.min() / x.min(), y.max() / x.max()}) {
    Enclosure g = abs(log(Enclosure::from_rat(ratio, prec)));
    if (g.lo_sign() <= 0)
      throw std::logic_error("conditions_stability_radius: endpoint ratio 1");
    fold_b(g.lo_rat());
  }
  const Rat b_lower = b_min / 2;

  // m: min R_nu over [1/2, 2]
  Rat m_min;
  bool have_m = false;
  lo = Rat(1, 2), hi = Rat(2);
  for (int j = 0; j <= half_grid; ++j) {
    Rat nu = lo + (hi - lo) * Rat(j, half_grid);
    mpfr_prec_t p = prec;
    Enclosure r = r_function(x, y, nu, p);
    while (r.lo_sign() <= 0 && p < opts.max_precision) {
      p *= 2;
      r = r_function(x, y, nu, p);
    }
    if (r.lo_sign() <= 0)
      throw std::runtime_error(
          "conditions_stability_radius: cannot certify R > 0 at nu=" +
          rat_str(nu));
    Rat v = r.lo_rat();
    if (!have_m || v < m_min) {
      m_min = v;
      have_m = true;
    }
  }
  const Rat m_lower = m_min / 2;

  const Rat delta = m_lower / 3;
  Rat eps1 = mean_stability_radius(x, delta, prec);
  Rat eps2 = mean_stability_radius(y, delta, prec);
  Rat b_third = b_lower / 3;
  Rat eps0 = std::min(std::min(eps1, eps2), b_third);
  return {eps0, b_lower, m_lower};
}

} // namespace trump
