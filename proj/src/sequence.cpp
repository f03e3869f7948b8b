#include "trump/sequence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trump {

ProbSequence::ProbSequence(std::vector<Rat> elems) : elems_(std::move(elems)) {
  for (Rat &e : elems_) {
    e.canonicalize();
    if (e < 0)
      throw std::invalid_argument("ProbSequence: negative element");
  }
  sorted_ = elems_;
  std::sort(sorted_.begin(), sorted_.end());
  sum_ = 0;
  for (const Rat &e : elems_)
    sum_ += e;
}

const Rat &ProbSequence::min() const {
  if (empty())
    throw std::invalid_argument("ProbSequence: empty");
  return sorted_.front();
}

const Rat &ProbSequence::max() const {
  if (empty())
    throw std::invalid_argument("ProbSequence: empty");
  return sorted_.back();
}

bool ProbSequence::all_positive() const {
  return !empty() && sorted_.front() > 0;
}

ProbSequence sort_ascending(const ProbSequence &x) {
  return ProbSequence(x.ascending());
}

ProbSequence scaled(const ProbSequence &x, const Rat &factor) {
  if (factor <= 0)
    throw std::invalid_argument("scaled: factor must be positive");
  std::vector<Rat> out;
  out.reserve(x.size());
  for (const Rat &e : x.elements())
    out.push_back(e * factor);
  return ProbSequence(std::move(out));
}

ProbSequence tensor(const ProbSequence &x, const ProbSequence &c) {
  std::vector<Rat> out;
  out.reserve(x.size() * c.size());
  for (const Rat &xi : x.elements())
    for (const Rat &cl : c.elements())
      out.push_back(xi * cl);
  return ProbSequence(std::move(out));
}

ProbSequence tensor_power(const ProbSequence &x, unsigned k) {
  if (k < 1)
    throw std::invalid_argument("tensor_power: k must be >= 1");
  ProbSequence r = x;
  for (unsigned i = 1; i < k; ++i)
    r = tensor(r, x);
  return r;
}

ProbSequence concat(const ProbSequence &x, const ProbSequence &z) {
  std::vector<Rat> out = x.elements();
  out.insert(out.end(), z.elements().begin(), z.elements().end());
  return ProbSequence(std::move(out));
}

StripResult strip_common(const ProbSequence &x, const ProbSequence &y) {
  if (x.size() != y.size())
    throw std::invalid_argument("strip_common: length mismatch");
  std::vector<Rat> xr, yr, common;
  const auto &xs = x.ascending();
  const auto &ys = y.ascending();
  size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i] == ys[j]) {
      common.push_back(xs[i]);
      ++i, ++j;
    } else if (xs[i] < ys[j]) {
      xr.push_back(xs[i++]);
    } else {
      yr.push_back(ys[j++]);
    }
  }
  while (i < xs.size())
    xr.push_back(xs[i++]);
  while (j < ys.size())
    yr.push_back(ys[j++]);
  return {ProbSequence(std::move(xr)), ProbSequence(std::move(yr)),
          ProbSequence(std::move(common))};
}

Enclosure distance(const ProbSequence &x, const ProbSequence &xbar,
                   mpfr_prec_t prec) {
  if (x.size() != xbar.size())
    throw std::invalid_argument("distance: length mismatch");
  if (!x.all_positive() || !xbar.all_positive())
    throw std::domain_error("distance: zero element");
  Enclosure d(prec);
  for (size_t i = 0; i < x.size(); ++i) {
    Rat ratio = x.ascending()[i] / xbar.ascending()[i];
    d = max(d, abs(log(Enclosure::from_rat(ratio, prec))));
  }
  return d;
}

ProbSequence PowerForm::materialize() const {
  std::vector<Rat> out;
  out.reserve(exponents.size());
  for (long e : exponents)
    out.push_back(scale * pow_rat(base, e));
  return ProbSequence(std::move(out));
}

namespace {

// Multiplicative Euclid step: largest g with a = g^p, b = g^q when the two
// ratios are commensurable. Iteration-capped; returns 1 on failure.
Rat mult_gcd(Rat a, Rat b, int iter_cap) {
  for (int it = 0; it < iter_cap; ++it) {
    if (a == 1)
      return b;
    if (b == 1)
      return a;
    if (a < b)
      std::swap(a, b);
    a /= b;
  }
  return Rat(1);
}

std::optional<long> exponent_of(const Rat &value, const Rat &base,
                                long cap) {
  Rat r = value;
  for (long k = 0; k <= cap; ++k) {
    if (r == 1)
      return k;
    if (r < 1)
      return std::nullopt;
    r /= base;
  }
  return std::nullopt;
}

} // namespace

std::optional<std::pair<PowerForm, PowerForm>>
detect_power_form(const ProbSequence &x, const ProbSequence &y,
                  long exponent_cap) {
  if (!x.all_positive() || !y.all_positive())
    return std::nullopt;
  std::vector<Rat> all = x.ascending();
  all.insert(all.end(), y.ascending().begin(), y.ascending().end());
  std::sort(all.begin(), all.end());
  const Rat scale = all.front();

  std::vector<Rat> ratios;
  for (const Rat &v : all) {
    Rat r = v / scale;
    if (r > 1 && (ratios.empty() || ratios.back() != r))
      ratios.push_back(r);
  }
  Rat base;
  if (ratios.empty()) {
    base = 2; // all elements equal; any base represents them with exponent 0
  } else {
    base = ratios[0];
    for (size_t i = 1; i < ratios.size(); ++i) {
      base = mult_gcd(base, ratios[i], (int)exponent_cap);
      if (base == 1)
        return std::nullopt;
    }
    if (base <= 1)
      return std::nullopt;
  }

  auto extract = [&](const ProbSequence &s) -> std::optional<std::vector<long>> {
    std::vector<long> exps;
    for (const Rat &v : s.elements()) {
      auto k = exponent_of(v / scale, base, exponent_cap);
      if (!k)
        return std::nullopt;
      exps.push_back(*k);
    }
    return exps;
  };
  auto ex = extract(x);
  auto ey = extract(y);
  if (!ex || !ey)
    return std::nullopt;
  return std::make_pair(PowerForm{scale, base, *ex}, PowerForm{scale, base, *ey});
}

} // namespace trump
