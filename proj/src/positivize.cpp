#include "trump/positivize.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace trump {

GapQuotient gap_quotient(const std::vector<long> &y_exponents,
                         const std::vector<long> &x_exponents, const Rat &w) {
  if (y_exponents.empty() || x_exponents.empty())
    throw std::invalid_argument("gap_quotient: empty exponent list");
  if (w <= 1)
    throw std::invalid_argument("gap_quotient: base must exceed 1");
  long amin = *std::min_element(y_exponents.begin(), y_exponents.end());
  if (amin != 0)
    throw std::invalid_argument("gap_quotient: min(y exponents) must be 0");
  long deg = 0;
  for (long e : y_exponents)
    deg = std::max(deg, e);
  for (long e : x_exponents) {
    if (e < 0)
      throw std::invalid_argument("gap_quotient: negative exponent");
    deg = std::max(deg, e);
  }
  std::vector<Rat> g(deg + 1, Rat(0));
  for (long e : y_exponents)
    g[e] += 1;
  for (long e : x_exponents)
    g[e] -= 1;
  RatPoly gap{std::move(g)};
  if (gap.is_zero())
    throw std::invalid_argument("gap_quotient: identical exponent multisets");

  // roots at 1 and w; nonzero value at either one signals an invalid input
  // (unequal counts resp. unequal sums of the materialized sequences)
  auto [q1, r1] = divide_linear_scaled(gap, Rat(1));
  if (r1 != 0)
    throw std::domain_error("gap_quotient: no root at 1 (unequal counts)");
  auto [q2, r2] = divide_linear_scaled(q1, w);
  if (r2 != 0)
    throw std::domain_error("gap_quotient: no root at base (unequal sums)");
  if (q2.is_zero() || q2.coeff(0) <= 0)
    throw std::domain_error("gap_quotient: quotient constant term not positive");
  return {std::move(gap), std::move(q2)};
}

QuadraticSplit split_complex_quadratic(const Rat &xi, const Rat &lambda) {
  if (!(xi > 0))
    throw std::invalid_argument("split_complex_quadratic: xi must be > 0");
  if (!(lambda > xi * xi))
    throw std::invalid_argument("split_complex_quadratic: need lambda > xi^2");

  // smallest N with binom(2N, N) * lambda^N >= (4 xi^2)^N
  const Rat ratio = 4 * xi * xi / lambda; // < 4, and (1/4)C(2N,N)^(1/N) -> 1
  unsigned long n = 0;
  Int binom = 1; // binom(2N, N)
  Rat pw = 1;    // ratio^N
  do {
    ++n;
    binom = binom * 2 * (2 * (long)n - 1) / (long)n;
    pw *= ratio;
  } while (Rat(binom) < pw);

  const RatPoly quad{{Rat(1), Rat(0), lambda}};    // 1 + lambda s^2
  const RatPoly lin = RatPoly::monomial(2 * xi, 1); // 2 xi s
  RatPoly qp{{Rat(1)}}, lp{{Rat(1)}};
  std::vector<RatPoly> qpow(2 * n + 1), lpow(2 * n + 1);
  for (unsigned long k = 0; k <= 2 * n; ++k) {
    qpow[k] = qp;
    lpow[k] = lp;
    qp = qp * quad;
    lp = lp * lin;
  }
  RatPoly a;
  for (unsigned long k = 0; k < 2 * n; ++k)
    a = a + qpow[k] * lpow[2 * n - 1 - k];
  RatPoly b = qpow[2 * n] - lpow[2 * n];
  if (!all_coeffs_nonneg(a) || !all_coeffs_nonneg(b))
    throw std::logic_error("split_complex_quadratic: negative coefficient");
  return {std::move(a), std::move(b), n};
}

std::pair<RatPoly, RatPoly> ensure_strict_positive(const RatPoly &a,
                                                   const RatPoly &b) {
  if (b.is_zero() || b.coeff(0) <= 0 || !all_coeffs_nonneg(b))
    throw std::invalid_argument("ensure_strict_positive: bad b");
  if (all_coeffs_positive(b))
    return {a, b};
  const long m = b.degree();
  std::vector<Rat> e((size_t)m, Rat(1)); // 1 + s + ... + s^(m-1)
  RatPoly unit{std::move(e)};
  return {a * unit, b * unit};
}

RatPoly rationalize_multiplier(const RatPoly &a, const RatPoly &q) {
  RatPoly b = a * q;
  if (!all_coeffs_positive(b))
    throw std::invalid_argument(
        "rationalize_multiplier: product must be strictly positive");
  Rat beta = b.coeffs().front();
  for (const Rat &c : b.coeffs())
    beta = std::min(beta, c);
  Rat denom = 0;
  for (const Rat &c : q.coeffs())
    denom += abs(c);
  const Rat eps = beta / denom;

  std::vector<Rat> approx;
  approx.reserve(a.coeffs().size());
  for (const Rat &c : a.coeffs()) {
    Rat lo = c - eps, hi = c + eps;
    if (lo < 0)
      lo = 0; // multiplier coefficients stay nonnegative
    approx.push_back(simplest_rat_in(lo, hi));
  }
  RatPoly abar{std::move(approx)};
  RatPoly bbar = abar * q;
  if (!all_coeffs_nonneg(bbar))
    throw std::logic_error("rationalize_multiplier: perturbation bound failed");

  Int d = rat_den_lcm(abar.coeffs());
  return abar * Rat(d);
}

namespace {

using Cplx = std::complex<double>;

// Durand-Kerner iteration on the monic normalization; double precision is
// enough here because exactness is restored downstream by the verified
// rational perturbation.
std::vector<Cplx> all_roots(const RatPoly &p) {
  const long deg = p.degree();
  std::vector<double> c(deg + 1);
  const double lead = p.coeffs().back().get_d();
  for (long i = 0; i <= deg; ++i)
    c[i] = p.coeff(i).get_d() / lead;
  auto eval = [&](Cplx z) {
    Cplx acc = 0;
    for (long i = deg; i >= 0; --i)
      acc = acc * z + c[i];
    return acc;
  };
  std::vector<Cplx> r(deg);
  Cplx seed(0.4, 0.9);
  Cplx s = 1.0;
  for (long i = 0; i < deg; ++i) {
    s *= seed;
    r[i] = s;
  }
  for (int it = 0; it < 500; ++it) {
    double moved = 0;
    for (long i = 0; i < deg; ++i) {
      Cplx denom = 1.0;
      for (long j = 0; j < deg; ++j)
        if (j != i)
          denom *= r[i] - r[j];
      Cplx step = eval(r[i]) / denom;
      r[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14)
      break;
  }
  return r;
}

Rat snap(double v, unsigned bits = 40) {
  Rat d(v); // exact binary value
  return dyadic_floor(d, bits);
}

RatPoly binomial_search(const RatPoly &q, long max_degree, bool *found) {
  RatPoly one_plus_s{{Rat(1), Rat(1)}};
  RatPoly a{{Rat(1)}};
  RatPoly b = q;
  for (long m = 0; m <= max_degree; ++m) {
    if (all_coeffs_nonneg(b)) {
      *found = true;
      return a;
    }
    a = a * one_plus_s;
    b = b * one_plus_s;
  }
  *found = false;
  return {};
}

RatPoly factor_search(const RatPoly &q, long max_degree) {
  auto roots = all_roots(q);
  RatPoly a{{Rat(1)}};
  for (const Cplx &r : roots) {
    if (r.imag() <= 1e-9)
      continue; // use each conjugate pair once; real roots stay in b
    const double n2 = std::norm(r);
    if (n2 < 1e-18)
      throw std::domain_error("positivize: quotient has a root at 0");
    const double xi_d = r.real() / n2;
    if (xi_d <= 1e-12)
      continue; // factor already has nonnegative coefficients
    Rat xi = snap(xi_d);
    Rat lambda = snap(1.0 / n2);
    if (lambda <= xi * xi)
      lambda = xi * xi * Rat(1048577, 1048576);
    a = a * split_complex_quadratic(xi, lambda).a;
    if (a.degree() > max_degree)
      throw degree_cap_error("positivize: factor route exceeded degree cap");
  }
  // Snapping errors can leave slightly negative coefficients in a*q; widen
  // with e(s) rounds, which strictly positivizes the ideal product.
  for (int round = 0; round < 4; ++round) {
    RatPoly b = a * q;
    if (all_coeffs_nonneg(b))
      return a;
    long m = b.degree();
    std::vector<Rat> e((size_t)m, Rat(1));
    a = a * RatPoly{std::move(e)};
    if (a.degree() > max_degree)
      throw degree_cap_error("positivize: factor route exceeded degree cap");
  }
  throw degree_cap_error("positivize: factor route failed to clear negatives");
}

} // namespace

PositivizeResult positivize(const RatPoly &q, long max_degree,
                            PositivizeStrategy strategy) {
  if (q.is_zero() || q.coeff(0) <= 0)
    throw std::invalid_argument("positivize: need q(0) > 0");
  if (count_positive_roots(q) != 0)
    throw std::invalid_argument("positivize: q has a positive root");

  if (strategy != PositivizeStrategy::factor_only) {
    bool found = false;
    RatPoly a = binomial_search(q, max_degree, &found);
    if (found)
      return {a, a * q};
    if (strategy == PositivizeStrategy::binomial_only)
      throw degree_cap_error("positivize: binomial multiplier exceeded cap");
  }

  RatPoly a = factor_search(q, max_degree);
  if (!all_coeffs_integer(a)) {
    RatPoly b = a * q;
    if (!all_coeffs_positive(b)) {
      auto [a2, b2] = ensure_strict_positive(a, b);
      if (a2.degree() > max_degree)
        throw degree_cap_error("positivize: degree cap exceeded");
      a = a2;
    }
    a = rationalize_multiplier(a, q);
    if (a.degree() > max_degree)
      throw degree_cap_error("positivize: degree cap exceeded");
  }
  return {a, a * q};
}

std::optional<EnclosurePositivize> positivize_enclosure(const EncPoly &q,
                                                        long max_degree) {
  auto nonneg = [](const EncPoly &p) {
    for (const Enclosure &c : p.coeffs())
      if (c.lo_sign() < 0)
        return false;
    return true;
  };
  const EncPoly one_plus_s{{Enclosure::from_long(1), Enclosure::from_long(1)}};
  EncPoly b = q;
  for (long m = 0; m <= max_degree; ++m) {
    if (nonneg(b))
      return EnclosurePositivize{m, b};
    b = b * one_plus_s;
  }
  return std::nullopt;
}

} // namespace trump
