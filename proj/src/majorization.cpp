#include "trump/majorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace trump {

MajorizationResult is_majorized(const ProbSequence &x, const ProbSequence &y) {
  if (x.size() != y.size())
    throw std::invalid_argument("is_majorized: length mismatch");
  if (x.sum() != y.sum())
    throw std::invalid_argument("is_majorized: sums differ");
  const auto &xs = x.ascending();
  const auto &ys = y.ascending();
  Rat px = 0, py = 0;
  for (size_t m = 0; m + 1 < xs.size(); ++m) {
    px += xs[m];
    py += ys[m];
    if (px < py)
      return {false, m + 1, px, py};
  }
  return {true, std::nullopt, {}, {}};
}

Rat characteristic(const ProbSequence &x, const Rat &t) {
  if (t < 0)
    throw std::domain_error("characteristic: negative t");
  const auto &xs = x.ascending();
  // elements below t contribute t - x_i
  auto it = std::lower_bound(xs.begin(), xs.end(), t);
  Rat h = 0;
  for (auto p = xs.begin(); p != it; ++p)
    h += t - *p;
  return h;
}

bool is_majorized_via_characteristic(const ProbSequence &x,
                                     const ProbSequence &y) {
  if (x.size() != y.size())
    throw std::invalid_argument("is_majorized: length mismatch");
  if (x.sum() != y.sum())
    throw std::invalid_argument("is_majorized: sums differ");
  std::vector<Rat> knots = x.ascending();
  knots.insert(knots.end(), y.ascending().begin(), y.ascending().end());
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  for (const Rat &t : knots)
    if (characteristic(x, t) > characteristic(y, t))
      return false;
  return true;
}

} // namespace trump
