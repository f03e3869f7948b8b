#include "trump/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trump {

namespace {

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// smallest multiple of 1/q strictly above v
Rat grid_above(const Rat &v, const Int &q) {
  Rat scaled = v * Rat(q);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num().get_mpz_t(),
             scaled.get_den().get_mpz_t());
  return Rat(fl + 1, q);
}

// largest multiple of 1/q strictly below v
Rat grid_below(const Rat &v, const Int &q) {
  Rat scaled = v * Rat(q);
  Int ce;
  mpz_cdiv_q(ce.get_mpz_t(), scaled.get_num().get_mpz_t(),
             scaled.get_den().get_mpz_t());
  return Rat(ce - 1, q);
}

// nearest multiple of 1/q to v
Rat grid_round(const Rat &v, const Int &q) {
  Rat scaled = v * Rat(q) + Rat(1, 2);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num().get_mpz_t(),
             scaled.get_den().get_mpz_t());
  return Rat(fl, q);
}

Rat positive_dyadic_floor(const Rat &v, unsigned start_bits = 60) {
  for (unsigned bits = start_bits; bits < 4096; bits += 60) {
    Rat d = dyadic_floor(v, bits);
    if (d > 0)
      return d;
  }
  throw precision_error("dyadic floor underflow");
}

} // namespace

SandwichReduction sandwich_reduce(const ProbSequence &x_in,
                                  const ProbSequence &y_in,
                                  const ReductionOptions &opts) {
  if (x_in.size() != y_in.size())
    throw std::invalid_argument("sandwich_reduce: length mismatch");
  if (!x_in.all_positive() || !y_in.all_positive())
    throw std::domain_error("sandwich_reduce: sequences must be positive");
  if (x_in.sum() != 1 || y_in.sum() != 1)
    throw std::invalid_argument("sandwich_reduce: sequences must be normalized");
  if (!strip_common(x_in, y_in).common.empty())
    throw std::invalid_argument("sandwich_reduce: common elements present");
  ProbSequence x = sort_ascending(x_in), y = sort_ascending(y_in);
  const long n = (long)x.size();
  if (!(x.min() > y.min()) || !(x.max() < y.max()))
    throw std::invalid_argument(
        "sandwich_reduce: extreme elements must differ strictly");

  ConditionReport cr = check_conditions(x, y, CheckMode::strict, opts.cond);
  if (cr.verdict == Verdict::violated)
    throw std::invalid_argument("sandwich_reduce: conditions violated");
  if (cr.verdict == Verdict::inconclusive)
    throw precision_error("sandwich_reduce: conditions inconclusive");

  const mpfr_prec_t prec = std::max<mpfr_prec_t>(opts.precision, 128);

  SandwichReduction out;
  out.entropy_gap = entropy(x, prec) - entropy(y, prec);
  if (out.entropy_gap.lo_sign() <= 0)
    throw precision_error("sandwich_reduce: cannot certify entropy gap");
  out.log_bound = abs(log(Enclosure::from_rat(y.min(), prec)));
  if (out.log_bound.lo_sign() <= 0)
    throw std::invalid_argument("sandwich_reduce: min(y) = 1");

  StabilityRadius sr = conditions_stability_radius(x, y, opts.cond);
  out.epsilon0 = sr.epsilon0;

  const Rat h_lo = out.entropy_gap.lo_rat();
  const Rat l_hi = out.log_bound.hi_rat();
  const Rat l_lo = out.log_bound.lo_rat();
  Rat bound = out.epsilon0 / 2;
  bound = std::min(bound, Rat(1, 8 * n));
  bound = std::min(bound, Rat(1, n * n));
  bound = std::min(bound, Rat(h_lo / (96 * n * l_hi)));
  bound = std::min(bound, Rat(l_lo / 2));
  const Rat eps = positive_dyadic_floor(bound / 2);
  out.epsilon = eps;

  // common denominator: a power of two fine enough for every window
  Rat need1 = Rat(4 * n) / eps, need2 = Rat(4) / (eps * eps);
  Rat need = std::max(need1, need2);
  Int q = 2;
  while (Rat(q) < need)
    q <<= 1;
  out.common_denominator = q;

  auto log_enc = [&](const Rat &v) {
    return log(Enclosure::from_rat(v, prec));
  };

  const Rat window_lo = eps / (2 * n), window_hi = eps / Rat(n);
  std::vector<Rat> alpha(n), beta(n);
  for (long i = 0; i + 1 < n; ++i) {
    alpha[i] = grid_above((log_enc(y.ascending()[i]) + window_lo).hi_rat(), q);
    beta[i] = grid_below((log_enc(x.ascending()[i]) - window_lo).lo_rat(), q);
  }
  // last element: steer the weighted deviation sums toward zero
  {
    Enclosure s_phi(prec), s_theta(prec);
    for (long i = 0; i + 1 < n; ++i) {
      s_phi = s_phi + (Enclosure::from_rat(alpha[i], prec) -
                       log_enc(y.ascending()[i])) *
                          y.ascending()[i];
      s_theta = s_theta + (Enclosure::from_rat(beta[i], prec) -
                           log_enc(x.ascending()[i])) *
                              x.ascending()[i];
    }
    Enclosure target_a =
        log_enc(y.ascending()[n - 1]) - s_phi / y.ascending()[n - 1];
    Enclosure target_b =
        log_enc(x.ascending()[n - 1]) - s_theta / x.ascending()[n - 1];
    alpha[n - 1] = grid_round(target_a.lo_rat(), q);
    beta[n - 1] = grid_round(target_b.lo_rat(), q);
  }

  // verify the windows and the uniform bound
  const Rat eps_sq = eps * eps;
  Enclosure sum_phi(prec), sum_theta(prec);
  for (long i = 0; i < n; ++i) {
    Enclosure phi = Enclosure::from_rat(alpha[i], prec) -
                    log_enc(y.ascending()[i]);
    Enclosure theta = Enclosure::from_rat(beta[i], prec) -
                      log_enc(x.ascending()[i]);
    if (i + 1 < n) {
      if (!Enclosure::surely_le(Enclosure::from_rat(window_lo, prec), phi) ||
          !Enclosure::surely_le(phi, Enclosure::from_rat(window_hi, prec)) ||
          !Enclosure::surely_le(theta,
                                Enclosure::from_rat(-window_lo, prec)) ||
          !Enclosure::surely_le(Enclosure::from_rat(-window_hi, prec), theta))
        throw precision_error("sandwich_reduce: window placement failed");
    }
    if (!Enclosure::surely_le(abs(phi), Enclosure::from_rat(eps, prec)) ||
        !Enclosure::surely_le(abs(theta), Enclosure::from_rat(eps, prec)))
      throw precision_error("sandwich_reduce: uniform deviation bound failed");
    sum_phi = sum_phi + phi * y.ascending()[i];
    sum_theta = sum_theta + theta * x.ascending()[i];
    out.phi.push_back(phi);
    out.theta.push_back(theta);
  }
  if (!Enclosure::surely_le(abs(sum_phi), Enclosure::from_rat(eps_sq, prec)) ||
      !Enclosure::surely_le(abs(sum_theta), Enclosure::from_rat(eps_sq, prec)))
    throw precision_error("sandwich_reduce: weighted deviation sum too large");
  out.alpha = alpha;
  out.beta = beta;

  // root of F(la) = sum e^(la a_i) - sum e^(la b_i) inside |la-1| <= eps/L
  auto f_at = [&](const Rat &la, mpfr_prec_t p) {
    Enclosure s(p);
    for (long i = 0; i < n; ++i)
      s = s + exp(Enclosure::from_rat(la * alpha[i], p));
    for (long i = 0; i < n; ++i)
      s = s - exp(Enclosure::from_rat(la * beta[i], p));
    return s;
  };
  auto certified_sign = [&](const Rat &la) {
    mpfr_prec_t p = prec;
    Enclosure v = f_at(la, p);
    while (v.certain_sign() == 0 && p < opts.cond.max_precision) {
      p *= 2;
      v = f_at(la, p);
    }
    return v.certain_sign();
  };
  const Rat half_width = positive_dyadic_floor(eps / l_hi);
  Rat lo = 1 - half_width, hi = 1 + half_width;
  if (certified_sign(lo) >= 0 || certified_sign(hi) <= 0)
    throw precision_error("sandwich_reduce: root bracket failed");
  for (long it = 0; it < (long)prec + 10; ++it) {
    Rat mid = (lo + hi) / 2;
    int s = certified_sign(mid);
    if (s == 0)
      break; // remaining bracket is the tightest certified enclosure
    (s < 0 ? lo : hi) = mid;
  }
  out.lambda0 = Enclosure::from_bounds_rat(lo, hi, prec);

  auto z_from = [&](const std::vector<Rat> &es) {
    Enclosure s(prec);
    for (const Rat &e : es)
      s = s + exp(out.lambda0 * Enclosure::from_rat(e, prec));
    return s;
  };
  out.z0 = intersect(z_from(alpha), z_from(beta));

  // bounds |lambda0 - 1| <= 6 eps^2 / H and |ln z0| <= (2 + 12 L/H) eps^2
  Enclosure one = Enclosure::from_long(1, prec);
  if (!Enclosure::surely_le(
          abs(out.lambda0 - one),
          Enclosure::from_rat(6 * eps_sq, prec) / out.entropy_gap))
    throw precision_error("sandwich_reduce: root distance bound failed");
  if (!Enclosure::surely_le(
          abs(log(out.z0)),
          (Enclosure::from_long(2, prec) +
           Enclosure::from_long(12, prec) * out.log_bound / out.entropy_gap) *
              Enclosure::from_rat(eps_sq, prec)))
    throw precision_error("sandwich_reduce: normalizer bound failed");

  // materialize the sandwich pair
  auto build_form = [&](const std::vector<Rat> &es) {
    EncPowerForm f;
    f.base = exp(out.lambda0 / Rat(q));
    for (const Rat &e : es)
      f.values.push_back(exp(out.lambda0 * Enclosure::from_rat(e, prec)) /
                         out.z0);
    return f;
  };
  out.xbar = build_form(beta);
  out.ybar = build_form(alpha);
  Rat e_min = alpha[0];
  for (const Rat &e : alpha)
    e_min = std::min(e_min, e);
  for (const Rat &e : beta)
    e_min = std::min(e_min, e);
  auto exps_from = [&](const std::vector<Rat> &es) {
    std::vector<Int> ks;
    for (const Rat &e : es) {
      Rat k = (e - e_min) * Rat(q);
      if (k.get_den() != 1)
        throw std::logic_error("sandwich_reduce: non-integer exponent");
      ks.push_back(Int(k.get_num()));
    }
    return ks;
  };
  out.xbar.exponents = exps_from(beta);
  out.ybar.exponents = exps_from(alpha);
  Enclosure scale = exp(out.lambda0 * Enclosure::from_rat(e_min, prec)) /
                    out.z0;
  out.xbar.scale = scale;
  out.ybar.scale = scale;

  // sandwich inequalities off the top element, and distance < epsilon0
  Enclosure dist_x(prec), dist_y(prec);
  for (long i = 0; i < n; ++i) {
    Enclosure xi = Enclosure::from_rat(x.ascending()[i], prec);
    Enclosure yi = Enclosure::from_rat(y.ascending()[i], prec);
    if (i + 1 < n) {
      if (!Enclosure::surely_le(out.xbar.values[i], xi))
        throw precision_error("sandwich_reduce: x_i >= xbar_i failed");
      if (!Enclosure::surely_le(yi, out.ybar.values[i]))
        throw precision_error("sandwich_reduce: ybar_i >= y_i failed");
    }
    dist_x = max(dist_x, abs(log(xi) - log(out.xbar.values[i])));
    dist_y = max(dist_y, abs(log(yi) - log(out.ybar.values[i])));
  }
  Enclosure eps0_enc = Enclosure::from_rat(out.epsilon0, prec);
  if (!Enclosure::surely_lt(dist_x, eps0_enc) ||
      !Enclosure::surely_lt(dist_y, eps0_enc))
    throw precision_error("sandwich_reduce: distance bound failed");
  return out;
}

ProbSequence zero_padded(const ProbSequence &y, const Rat &eps) {
  if (eps < 0)
    throw std::invalid_argument("zero_padded: negative eps");
  long m = 0;
  for (const Rat &v : y.ascending())
    if (v == 0)
      ++m;
  if (m == 0)
    throw std::invalid_argument("zero_padded: y has no zeros");
  std::vector<Rat> z;
  const Rat rescale = 1 - Rat(m) * eps;
  for (const Rat &v : y.ascending())
    z.push_back(v == 0 ? eps : Rat(rescale * v));
  return ProbSequence(std::move(z));
}

ZeroPaddingReduction zero_padding_reduce(const ProbSequence &x_in,
                                         const ProbSequence &y_in,
                                         const ReductionOptions &opts) {
  if (x_in.size() != y_in.size())
    throw std::invalid_argument("zero_padding_reduce: length mismatch");
  if (!x_in.all_positive())
    throw std::domain_error("zero_padding_reduce: x must be positive");
  if (x_in.sum() != 1 || y_in.sum() != 1)
    throw std::invalid_argument(
        "zero_padding_reduce: sequences must be normalized");
  if (!strip_common(x_in, y_in).common.empty())
    throw std::invalid_argument("zero_padding_reduce: common elements present");
  ProbSequence x = sort_ascending(x_in), y = sort_ascending(y_in);
  const long n = (long)x.size();
  long m = 0;
  for (const Rat &v : y.ascending())
    if (v == 0)
      ++m;
  if (m == 0)
    throw std::invalid_argument("zero_padding_reduce: y has no zeros");

  ConditionReport cr = check_conditions(x, y, CheckMode::strict, opts.cond);
  if (cr.verdict == Verdict::violated)
    throw std::invalid_argument("zero_padding_reduce: conditions violated");
  if (cr.verdict == Verdict::inconclusive)
    throw precision_error("zero_padding_reduce: conditions inconclusive");

  const mpfr_prec_t prec = std::max<mpfr_prec_t>(opts.precision, 128);
  ZeroPaddingReduction out;
  out.zero_count = m;

  std::vector<Rat> y_pos(y.ascending().begin() + m, y.ascending().end());

  // eps1 = y_max (x_min / y_max)^(n/m), exact when m divides n
  {
    Rat ratio = x.min() / y.max();
    if (n % m == 0) {
      Rat exact = y.max() * pow_rat(ratio, n / m);
      out.bound_nonpos_exact = exact;
      out.bound_nonpos = Enclosure::from_rat(exact, prec);
    } else {
      out.bound_nonpos =
          Enclosure::from_rat(y.max(), prec) *
          pow_rat_exp(Enclosure::from_rat(ratio, prec), Rat(n, m));
    }
  }

  auto power_sum_enc = [&](const std::vector<Rat> &vals, const Rat &nu,
                           mpfr_prec_t p) {
    Enclosure s(p);
    for (const Rat &v : vals)
      s = s + pow_rat_exp(Enclosure::from_rat(v, p), nu);
    return s;
  };

  // eps2: sampled min over (0, 1/2] of the small-nu root gap, with the
  // explicit limit value at nu = 0, halved
  {
    const int samples = 1000;
    Enclosure lo_min = Enclosure::pos_infinity(prec);
    for (int j = 1; j <= samples; ++j) {
      Rat nu(j, 2 * samples);
      mpfr_prec_t p = prec;
      Enclosure t = power_sum_enc(x.ascending(), nu, p) -
                    power_sum_enc(y_pos, nu, p);
      while (t.lo_sign() <= 0 && p < opts.cond.max_precision) {
        p *= 2;
        t = power_sum_enc(x.ascending(), nu, p) - power_sum_enc(y_pos, nu, p);
      }
      if (t.lo_sign() <= 0)
        throw precision_error("zero_padding_reduce: small-nu gap not certified");
      Enclosure j_nu = exp(log(t / Rat(m)) / nu);
      lo_min = min(lo_min, j_nu);
    }
    Enclosure acc(prec); // nu -> 0 limit: (prod x / prod y_pos)^(1/m)
    for (const Rat &v : x.ascending())
      acc = acc + log(Enclosure::from_rat(v, prec));
    for (const Rat &v : y_pos)
      acc = acc - log(Enclosure::from_rat(v, prec));
    lo_min = min(lo_min, exp(acc / Rat(m)));
    out.j_min = lo_min;
    out.bound_small = lo_min * Rat(1, 2);
  }

  // eps3 = (1 - K)/m with K the sampled max of A_nu(x)/A_nu(y) on [2, inf]
  {
    const int samples = 256;
    Enclosure k_max =
        Enclosure::from_rat(x.max() / y.max(), prec); // exact nu = inf limit
    const Rat lo = 2, hi = opts.cond.nu_max < 2 ? Rat(40) : opts.cond.nu_max;
    for (int j = 0; j <= samples; ++j) {
      Rat nu = lo + (hi - lo) * Rat(j, samples);
      mpfr_prec_t p = prec;
      Enclosure ratio =
          exp(log(power_mean(x, nu, p)) - log(power_mean(y, nu, p)));
      k_max = max(k_max, ratio);
    }
    out.k_ratio = k_max;
    if (k_max.hi_rat() >= 1)
      throw precision_error("zero_padding_reduce: large-nu ratio not below 1");
    out.bound_large =
        (Enclosure::from_long(1, prec) - k_max) / Rat(m) * Rat(1, 2);
  }

  // eps4: halve until R_nu(eps) > m_min/2 across the certified [1/2, 2] grid
  {
    const int samples = 64;
    Rat m_lo;
    bool have = false;
    for (int j = 0; j <= samples; ++j) {
      Rat nu = Rat(1, 2) + Rat(3, 2) * Rat(j, samples);
      mpfr_prec_t p = prec;
      Enclosure r = r_function(x, y, nu, p);
      while (r.lo_sign() <= 0 && p < opts.cond.max_precision) {
        p *= 2;
        r = r_function(x, y, nu, p);
      }
      if (r.lo_sign() <= 0)
        throw precision_error("zero_padding_reduce: mid-range R not certified");
      Rat v = r.lo_rat();
      if (!have || v < m_lo) {
        m_lo = v;
        have = true;
      }
    }
    out.m_min = Enclosure::from_rat(m_lo, prec);
    const Rat half_m = m_lo / 2;

    Rat ordering_cap = Rat(1) / (Rat(1) / y_pos.front() + Rat(m));
    Rat eps_cap = std::min(out.bound_nonpos.lo_rat(), out.bound_small.lo_rat());
    eps_cap = std::min(eps_cap, out.bound_large.lo_rat());
    eps_cap = std::min(eps_cap, ordering_cap);
    if (eps_cap <= 0)
      throw precision_error("zero_padding_reduce: empty eps range");
    Rat eps = positive_dyadic_floor(eps_cap / 2);
    bool ok = false;
    for (int rounds = 0; rounds < 60 && !ok; ++rounds) {
      ok = true;
      ProbSequence z = zero_padded(y, eps);
      for (int j = 0; j <= samples && ok; ++j) {
        Rat nu = Rat(1, 2) + Rat(3, 2) * Rat(j, samples);
        mpfr_prec_t p = prec;
        Enclosure r = r_function(x, z, nu, p);
        while (!Enclosure::surely_lt(Enclosure::from_rat(half_m, p), r) &&
               p < opts.cond.max_precision) {
          p *= 2;
          r = r_function(x, z, nu, p);
        }
        if (!Enclosure::surely_lt(Enclosure::from_rat(half_m, p), r))
          ok = false;
      }
      if (!ok)
        eps /= 2;
    }
    if (!ok)
      throw precision_error("zero_padding_reduce: mid-range search exhausted");
    out.bound_mid = eps;
    out.epsilon = eps;
  }

  out.padded = zero_padded(y, out.epsilon);
  if (!is_majorized(out.padded, y))
    throw std::logic_error("zero_padding_reduce: padded sequence not below y");
  return out;
}

namespace {

std::string status_note(const char *what) { return std::string(what); }

// power-form or sandwich construction for a stripped positive pair with
// non-violated conditions; fills catalyst/certificate fields on success
bool attempt_construction(const ProbSequence &xs, const ProbSequence &ys,
                          const ReductionOptions &opts, TrumpingReport &rep) {
  if (auto pf = detect_power_form(xs, ys)) {
    try {
      ConstructedCatalyst cc =
          construct_catalyst(pf->first, pf->second, opts.max_degree);
      rep.status = TrumpingStatus::trumped;
      rep.route += rep.route.empty() ? "power_form" : "+power_form";
      rep.catalyst = cc.catalyst;
      rep.certificate = cc.certificate;
      rep.knots = majorization_gap_at_knots(pf->first, pf->second, cc.catalyst,
                                            cc.certificate);
      return true;
    } catch (const degree_cap_error &e) {
      rep.status = TrumpingStatus::trumped_conditions_only;
      rep.note = status_note(e.what());
      return false;
    }
  }
  // sandwich route
  try {
    SandwichReduction sr = sandwich_reduce(xs, ys, opts);
    rep.route += rep.route.empty() ? "sandwich" : "+sandwich";
    std::vector<long> ye, xe;
    bool fits = true;
    for (const Int &k : sr.ybar.exponents)
      fits = fits && k.fits_slong_p();
    for (const Int &k : sr.xbar.exponents)
      fits = fits && k.fits_slong_p();
    long max_exp = 0;
    if (fits) {
      for (const Int &k : sr.ybar.exponents)
        ye.push_back(k.get_si());
      for (const Int &k : sr.xbar.exponents)
        xe.push_back(k.get_si());
      for (long k : ye)
        max_exp = std::max(max_exp, k);
      for (long k : xe)
        max_exp = std::max(max_exp, k);
    }
    if (!fits || max_exp > opts.sandwich_degree_cap) {
      rep.status = TrumpingStatus::trumped_conditions_only;
      rep.note = "sandwich exponents exceed the materialization cap (common "
                 "denominator " +
                 sr.common_denominator.get_str() + ")";
      return false;
    }
    auto ec = construct_catalyst_enclosure(ye, xe, sr.xbar.base,
                                           opts.max_degree,
                                           opts.sandwich_degree_cap);
    if (!ec) {
      rep.status = TrumpingStatus::trumped_conditions_only;
      rep.note = "enclosure multiplier search exceeded the degree cap";
      return false;
    }
    rep.status = TrumpingStatus::trumped;
    rep.catalyst = ec->catalyst;
    rep.note = "certificate chain: x below sandwich, catalyst on the sandwich "
               "pair (multiplier (1+s)^" +
               std::to_string(ec->binomial_m) + "), sandwich below y";
    return true;
  } catch (const precision_error &e) {
    rep.status = TrumpingStatus::trumped_conditions_only;
    rep.note = status_note(e.what());
    return false;
  } catch (const std::runtime_error &e) {
    rep.status = TrumpingStatus::trumped_conditions_only;
    rep.note = status_note(e.what());
    return false;
  }
}

} // namespace

TrumpingReport decide_trumping(const ProbSequence &x, const ProbSequence &y,
                               const ReductionOptions &opts) {
  if (x.size() != y.size())
    throw std::invalid_argument("decide_trumping: length mismatch");
  if (!x.all_positive())
    throw std::domain_error("decide_trumping: x must be positive");
  if (x.sum() != y.sum())
    throw std::invalid_argument("decide_trumping: sums differ");

  TrumpingReport rep;
  StripResult st = strip_common(x, y);
  if (st.x_rest.empty()) {
    rep.status = TrumpingStatus::trumped;
    rep.route = "identical";
    rep.note = "sequences are equal up to rearrangement";
    rep.catalyst = Catalyst::trivial();
    rep.conditions.mode = CheckMode::strict;
    rep.conditions.verdict = Verdict::satisfied;
    rep.conditions.certificate = CertificateKind::exact;
    rep.conditions.numeric_only = false;
    return rep;
  }
  const ProbSequence &xs = st.x_rest;
  const ProbSequence &ys = st.y_rest;

  rep.conditions = check_conditions(xs, ys, CheckMode::strict, opts.cond);
  if (rep.conditions.verdict == Verdict::violated) {
    rep.status = TrumpingStatus::not_trumped;
    rep.witness = rep.conditions.first_violation
                      ? rep.conditions.first_violation->str()
                      : "condition violation";
    rep.route = "conditions";
    return rep;
  }

  if (is_majorized(xs, ys)) {
    rep.status = TrumpingStatus::trumped;
    rep.route = "majorized";
    rep.catalyst = Catalyst::trivial();
    rep.note = "plain majorization; the single-element catalyst suffices";
    return rep;
  }

  if (rep.conditions.verdict == Verdict::inconclusive) {
    rep.status = TrumpingStatus::inconclusive;
    rep.note = "condition check inconclusive at the precision cap";
    return rep;
  }

  if (!opts.construct) {
    rep.status = TrumpingStatus::trumped_conditions_only;
    rep.note = "construction disabled";
    return rep;
  }

  // constructions run on the normalized stripped pair; majorization and the
  // catalyst relation are invariant under the common positive rescaling
  const Rat total = xs.sum();
  ProbSequence xn = scaled(xs, Rat(1) / total);
  ProbSequence yn = scaled(ys, Rat(1) / total);

  if (!yn.all_positive()) {
    // zero padding first, then the positive-pair machinery on (x, z)
    try {
      ZeroPaddingReduction zr = zero_padding_reduce(xn, yn, opts);
      rep.route = "zero_padding";
      StripResult inner = strip_common(xn, zr.padded);
      if (inner.x_rest.empty() || is_majorized(inner.x_rest, inner.y_rest)) {
        rep.status = TrumpingStatus::trumped;
        rep.catalyst = Catalyst::trivial();
        rep.note = "x majorized by the padded sequence";
        return rep;
      }
      const Rat inner_total = inner.x_rest.sum();
      attempt_construction(scaled(inner.x_rest, Rat(1) / inner_total),
                           scaled(inner.y_rest, Rat(1) / inner_total), opts,
                           rep);
      return rep;
    } catch (const precision_error &e) {
      rep.status = TrumpingStatus::trumped_conditions_only;
      rep.note = e.what();
      return rep;
    }
  }

  attempt_construction(xn, yn, opts, rep);
  return rep;
}

} // namespace trump
