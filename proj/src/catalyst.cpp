#include "trump/catalyst.hpp"

#include <algorithm>
#include <stdexcept>

namespace trump {

Catalyst Catalyst::trivial() {
  Catalyst c;
  c.base = Rat(2);
  c.multiplicities[0] = 1;
  return c;
}

Int Catalyst::total_count() const {
  Int n = 0;
  for (const auto &[k, m] : multiplicities)
    n += m;
  return n;
}

ProbSequence Catalyst::materialize(unsigned long count_cap) const {
  if (!rational_base())
    throw std::domain_error("Catalyst: cannot materialize enclosure base");
  Int total = total_count();
  if (total == 0 || !total.fits_ulong_p() || total.get_ui() > count_cap)
    throw std::length_error("Catalyst: materialization too large");
  std::vector<Rat> vals;
  vals.reserve(total.get_ui());
  for (const auto &[k, m] : multiplicities) {
    Rat v = pow_rat(base_rat(), k);
    for (Int i = 0; i < m; ++i)
      vals.push_back(v);
  }
  return ProbSequence(std::move(vals));
}

namespace {

using Weighted = std::vector<std::pair<Rat, Rat>>; // (value, weight)

Weighted weighted_tensor(const ProbSequence &s, const Weighted &c) {
  Weighted out;
  out.reserve(s.size() * c.size());
  for (const Rat &v : s.elements())
    for (const auto &[cv, cw] : c)
      out.emplace_back(v * cv, cw);
  return out;
}

Rat h_weighted(const Weighted &vals, const Rat &t) {
  Rat h = 0;
  for (const auto &[v, w] : vals)
    if (v < t)
      h += w * (t - v);
  return h;
}

Weighted catalyst_weights_rat(const Catalyst &c) {
  Weighted w;
  for (const auto &[k, m] : c.multiplicities)
    w.emplace_back(pow_rat(c.base_rat(), k), Rat(m));
  return w;
}

VerifyOutcome verify_weighted(const ProbSequence &x, const ProbSequence &y,
                              const Weighted &c) {
  if (x.size() != y.size())
    throw std::invalid_argument("verify_catalyst: length mismatch");
  if (x.sum() != y.sum())
    throw std::invalid_argument("verify_catalyst: sums differ");
  Weighted tx = weighted_tensor(x, c);
  Weighted ty = weighted_tensor(y, c);
  std::vector<Rat> knots;
  knots.reserve(ty.size());
  for (const auto &[v, w] : ty)
    knots.push_back(v);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  for (const Rat &t : knots)
    if (h_weighted(tx, t) > h_weighted(ty, t))
      return VerifyOutcome::refuted;
  return VerifyOutcome::verified;
}

Enclosure pos_part(const Enclosure &e) {
  return max(e, Enclosure::from_long(0, e.precision()));
}

} // namespace

VerifyOutcome verify_catalyst(const ProbSequence &x, const ProbSequence &y,
                              const ProbSequence &c) {
  if (c.empty())
    throw std::invalid_argument("verify_catalyst: empty catalyst");
  Weighted w;
  for (const Rat &v : c.elements())
    w.emplace_back(v, Rat(1));
  return verify_weighted(x, y, w);
}

VerifyOutcome verify_catalyst(const ProbSequence &x, const ProbSequence &y,
                              const Catalyst &c, mpfr_prec_t prec) {
  if (c.multiplicities.empty())
    throw std::invalid_argument("verify_catalyst: empty catalyst");
  if (c.rational_base())
    return verify_weighted(x, y, catalyst_weights_rat(c));

  if (x.size() != y.size())
    throw std::invalid_argument("verify_catalyst: length mismatch");
  if (x.sum() != y.sum())
    throw std::invalid_argument("verify_catalyst: sums differ");
  // enclosure base: interval evaluation of the same knot comparison
  using EW = std::vector<std::pair<Enclosure, Rat>>;
  Enclosure base = c.base_enc();
  mpfr_prec_t p = std::max(prec, base.precision());
  EW cw;
  for (const auto &[k, m] : c.multiplicities)
    cw.emplace_back(pow_int(base, k), Rat(m));
  auto tensor_items = [&](const ProbSequence &s) {
    EW out;
    for (const Rat &v : s.elements())
      for (const auto &[cv, m] : cw)
        out.emplace_back(cv * Enclosure::from_rat(v, p), m);
    return out;
  };
  EW tx = tensor_items(x), ty = tensor_items(y);
  auto h_at = [&](const EW &vals, const Enclosure &t) {
    Enclosure h(p);
    for (const auto &[v, w] : vals)
      h = h + pos_part(t - v) * w;
    return h;
  };
  bool ambiguous = false;
  for (const auto &[t, tw] : ty) {
    Enclosure d = h_at(tx, t) - h_at(ty, t);
    if (d.certain_sign() > 0)
      return VerifyOutcome::refuted;
    if (d.hi_sign() > 0)
      ambiguous = true;
  }
  return ambiguous ? VerifyOutcome::inconclusive : VerifyOutcome::verified;
}

namespace {

void require_joint_form(const PowerForm &x, const PowerForm &y) {
  if (x.scale != y.scale || x.base != y.base)
    throw std::invalid_argument("catalyst: power forms must share scale/base");
  if (x.base <= 1)
    throw std::invalid_argument("catalyst: base must exceed 1");
  long jm = std::min(*std::min_element(x.exponents.begin(), x.exponents.end()),
                     *std::min_element(y.exponents.begin(), y.exponents.end()));
  if (jm != 0)
    throw std::invalid_argument("catalyst: joint minimum exponent must be 0");
}

} // namespace

ConstructedCatalyst construct_catalyst(const PowerForm &x, const PowerForm &y,
                                       long max_degree) {
  require_joint_form(x, y);
  if (x.exponents.size() != y.exponents.size())
    throw std::invalid_argument("construct_catalyst: length mismatch");
  ProbSequence sx = x.materialize(), sy = y.materialize();
  if (sx.sum() != sy.sum())
    throw std::invalid_argument("construct_catalyst: sums differ");
  if (sx.same_multiset(sy))
    throw std::invalid_argument("construct_catalyst: sequences not distinct");
  if (!strip_common(sx, sy).common.empty())
    throw std::invalid_argument(
        "construct_catalyst: common elements present (strip first)");
  if (sx.min() < sy.min() || sx.max() > sy.max())
    throw std::invalid_argument("construct_catalyst: endpoint conditions fail");

  GapQuotient gq = gap_quotient(y.exponents, x.exponents, x.base);
  if (count_positive_roots(gq.quotient) != 0)
    throw std::invalid_argument(
        "construct_catalyst: conditions fail (quotient has a positive root)");

  PositivizeResult pr = positivize(gq.quotient, max_degree);
  if (pr.a.coeff(0) <= 0 || !all_coeffs_integer(pr.a))
    throw std::logic_error("construct_catalyst: bad multiplier");

  ConstructedCatalyst out;
  out.catalyst.base = x.base;
  const auto &ac = pr.a.coeffs();
  for (size_t k = 0; k < ac.size(); ++k)
    if (ac[k] != 0)
      out.catalyst.multiplicities[(long)k] = Int(ac[k].get_num());
  out.multiplier = pr.a;
  out.certificate = pr.b;
  out.quotient = gq.quotient;

  if (verify_catalyst(sx, sy, out.catalyst) != VerifyOutcome::verified)
    throw std::logic_error("construct_catalyst: verification failed");
  majorization_gap_at_knots(x, y, out.catalyst, out.certificate);
  return out;
}

std::vector<KnotCheck> majorization_gap_at_knots(const PowerForm &x,
                                                 const PowerForm &y,
                                                 const Catalyst &c,
                                                 const RatPoly &b) {
  require_joint_form(x, y);
  if (!c.rational_base() || c.base_rat() != x.base)
    throw std::invalid_argument("majorization_gap_at_knots: base mismatch");
  const Rat w = x.base;

  // unit-scale sequences and weighted tensors
  auto unit_seq = [&](const PowerForm &f) {
    std::vector<Rat> v;
    for (long e : f.exponents)
      v.push_back(pow_rat(w, e));
    return ProbSequence(std::move(v));
  };
  ProbSequence ux = unit_seq(x), uy = unit_seq(y);
  Weighted cw = catalyst_weights_rat(c);
  Weighted tx = weighted_tensor(ux, cw), ty = weighted_tensor(uy, cw);

  // f = (1 - s/w) b has degree M; knots run to w^(M+1)
  RatPoly f = RatPoly{{Rat(1)}} * b - RatPoly::monomial(Rat(1) / w, 1) * b;
  const long m_deg = f.degree();

  if (h_weighted(ty, Rat(1)) != h_weighted(tx, Rat(1)))
    throw std::logic_error("majorization_gap_at_knots: gap not 0 at t = 1");

  std::vector<KnotCheck> table;
  Rat tk = 1;
  for (long k = 1; k <= m_deg + 1; ++k) {
    tk *= w;
    Rat gap = h_weighted(ty, tk) - h_weighted(tx, tk);
    Rat predicted = (w - 1) * b.coeff((size_t)(k - 1)) * pow_rat(w, k - 1);
    if (gap != predicted)
      throw std::logic_error("majorization_gap_at_knots: knot identity fails");
    table.push_back({k, gap, predicted});
  }
  // constancy past the last knot
  Rat t1 = tk * w, t2 = tk * w * w;
  if (h_weighted(ty, t1) - h_weighted(tx, t1) !=
      h_weighted(ty, t2) - h_weighted(tx, t2))
    throw std::logic_error("majorization_gap_at_knots: gap not constant");
  return table;
}

std::optional<EnclosureCatalystResult> construct_catalyst_enclosure(
    const std::vector<long> &y_exponents, const std::vector<long> &x_exponents,
    const Enclosure &base, long max_degree, long materialized_degree_cap) {
  if (y_exponents.empty() || x_exponents.empty())
    throw std::invalid_argument("construct_catalyst_enclosure: empty input");
  if (base.lo_sign() <= 0 || base.contains_rat(Rat(1)))
    throw std::invalid_argument(
        "construct_catalyst_enclosure: base must exceed 1");
  long deg = 0;
  long jmin = y_exponents.front();
  for (long e : y_exponents) {
    deg = std::max(deg, e);
    jmin = std::min(jmin, e);
  }
  for (long e : x_exponents) {
    deg = std::max(deg, e);
    jmin = std::min(jmin, e);
  }
  if (jmin != 0)
    throw std::invalid_argument(
        "construct_catalyst_enclosure: joint minimum exponent must be 0");
  if (deg > materialized_degree_cap)
    return std::nullopt; // gap polynomial would be too large to materialize

  std::vector<Rat> g((size_t)deg + 1, Rat(0));
  for (long e : y_exponents)
    g[(size_t)e] += 1;
  for (long e : x_exponents)
    g[(size_t)e] -= 1;
  RatPoly gap{std::move(g)};
  auto [q1, r1] = divide_linear_scaled(gap, Rat(1));
  if (r1 != 0)
    throw std::invalid_argument(
        "construct_catalyst_enclosure: unequal counts");
  auto [quot, rem] =
      divide_linear_scaled(to_enclosure(q1, base.precision()), base);
  if (!rem.contains_zero())
    throw std::logic_error(
        "construct_catalyst_enclosure: base is not a root of the gap");

  auto found = positivize_enclosure(quot, max_degree);
  if (!found)
    return std::nullopt;

  EnclosureCatalystResult out;
  out.binomial_m = found->m;
  out.certificate = found->b;
  out.catalyst.base = base;
  Int binom;
  for (long k = 0; k <= found->m; ++k) {
    mpz_bin_uiui(binom.get_mpz_t(), (unsigned long)found->m, (unsigned long)k);
    out.catalyst.multiplicities[k] = binom;
  }
  return out;
}

} // namespace trump
