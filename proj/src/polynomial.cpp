#include "trump/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace trump {

std::pair<RatPoly, RatPoly> divmod(const RatPoly &p, const RatPoly &d) {
  if (d.is_zero())
    throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Rat> r = p.coeffs();
  const auto &dc = d.coeffs();
  if (r.size() < dc.size())
    return {RatPoly(), p};
  std::vector<Rat> q(r.size() - dc.size() + 1, Rat(0));
  for (size_t k = r.size(); k-- >= dc.size();) {
    Rat f = r[k] / dc.back();
    q[k - dc.size() + 1] = f;
    if (f != 0)
      for (size_t j = 0; j < dc.size(); ++j)
        r[k - dc.size() + 1 + j] -= f * dc[j];
    if (k == 0)
      break;
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly exact_divide(const RatPoly &p, const RatPoly &d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero())
    throw std::domain_error("exact_divide: nonzero remainder");
  return q;
}

bool all_coeffs_nonneg(const RatPoly &p) {
  for (const Rat &c : p.coeffs())
    if (c < 0)
      return false;
  return true;
}

bool all_coeffs_positive(const RatPoly &p) {
  if (p.is_zero())
    return false;
  for (const Rat &c : p.coeffs())
    if (c <= 0)
      return false;
  return true;
}

bool all_coeffs_integer(const RatPoly &p) {
  for (const Rat &c : p.coeffs())
    if (c.get_den() != 1)
      return false;
  return true;
}

namespace {

// Divide by the absolute leading coefficient; keeps Euclid remainders small
// without touching signs.
RatPoly normalize_lead(const RatPoly &p) {
  if (p.is_zero())
    return p;
  Rat lead = abs(p.coeffs().back());
  return p * (Rat(1) / lead);
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a = normalize_lead(a);
  b = normalize_lead(b);
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = b;
    b = normalize_lead(r);
  }
  return a;
}

RatPoly squarefree_part(const RatPoly &p) {
  RatPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0)
    return p;
  return exact_divide(p, g);
}

std::vector<RatPoly> sturm_chain(const RatPoly &p) {
  std::vector<RatPoly> chain;
  chain.push_back(squarefree_part(p));
  chain.push_back(chain[0].derivative());
  while (!chain.back().is_zero()) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero())
      break;
    chain.push_back(normalize_lead(r) * Rat(-1));
  }
  return chain;
}

int sign_at_zero_plus(const RatPoly &p) {
  for (const Rat &c : p.coeffs())
    if (c != 0)
      return c > 0 ? 1 : -1;
  return 0;
}

int sign_at_inf(const RatPoly &p) {
  if (p.is_zero())
    return 0;
  return p.coeffs().back() > 0 ? 1 : -1;
}

int sign_at(const RatPoly &p, const Rat &t) {
  Rat v = p.evaluate(t);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

int variations(const std::vector<int> &signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0)
      continue;
    if (prev != 0 && s != prev)
      ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<RatPoly> &chain, const Rat &t) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const RatPoly &p : chain)
    signs.push_back(sign_at(p, t));
  return variations(signs);
}

} // namespace

int count_positive_roots(const RatPoly &p) {
  if (p.is_zero())
    throw std::invalid_argument("count_positive_roots: zero polynomial");
  if (p.degree() == 0)
    return 0;
  auto chain = sturm_chain(p);
  std::vector<int> s0, si;
  for (const RatPoly &q : chain) {
    s0.push_back(sign_at_zero_plus(q));
    si.push_back(sign_at_inf(q));
  }
  return variations(s0) - variations(si);
}

std::vector<std::pair<Rat, Rat>> isolate_positive_roots(const RatPoly &p) {
  std::vector<std::pair<Rat, Rat>> out;
  if (p.is_zero() || p.degree() == 0)
    return out;
  RatPoly sf = squarefree_part(p);
  auto chain = sturm_chain(p); // chain already built on squarefree part
  // Cauchy bound on root magnitude
  Rat bound = 0;
  for (const Rat &c : sf.coeffs())
    bound = std::max(bound, Rat(abs(c)));
  bound = Rat(1) + bound / Rat(abs(sf.coeffs().back()));

  // V just right of 0 == variations of the 0+ signs
  std::vector<int> s0;
  for (const RatPoly &q : chain)
    s0.push_back(sign_at_zero_plus(q));
  int v_left = variations(s0);

  struct Seg {
    Rat a, b;
    int va, vb;
  };
  // Nudge the right end off any root of the squarefree part.
  Rat right = bound;
  while (sf.evaluate(right) == 0)
    right += 1;
  std::vector<Seg> work{{Rat(0), right, v_left, variations_at(chain, right)}};
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    int roots = s.va - s.vb;
    if (roots <= 0)
      continue;
    if (roots == 1) {
      out.emplace_back(s.a, s.b);
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    while (sf.evaluate(mid) == 0)
      mid = (s.a + mid) / 2; // move off the root, interval stays valid
    int vm = variations_at(chain, mid);
    work.push_back({s.a, mid, s.va, vm});
    work.push_back({mid, s.b, vm, s.vb});
  }
  std::sort(out.begin(), out.end());
  return out;
}

EncPoly to_enclosure(const RatPoly &p, mpfr_prec_t prec) {
  std::vector<Enclosure> c;
  c.reserve(p.coeffs().size());
  for (const Rat &v : p.coeffs())
    c.push_back(Enclosure::from_rat(v, prec));
  return EncPoly(std::move(c));
}

} // namespace trump
