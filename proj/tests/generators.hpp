#pragma once

#include <random>

#include "trump/majorization.hpp"
#include "trump/sequence.hpp"

namespace trump::testgen {

inline Rat random_rat(std::mt19937 &rng, long max_num = 20, long max_den = 20) {
  std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
  return Rat(num(rng), den(rng));
}

inline ProbSequence random_positive(std::mt19937 &rng, size_t n,
                                    long max_num = 20, long max_den = 20) {
  std::vector<Rat> v;
  for (size_t i = 0; i < n; ++i)
    v.push_back(random_rat(rng, max_num, max_den));
  return ProbSequence(std::move(v));
}

inline ProbSequence normalized(const ProbSequence &s) {
  return scaled(s, Rat(1) / s.sum());
}

// One averaging step x_i, x_j <- mixtures of the pair; preserves the sum and
// moves the sequence down in the majorization order.
inline ProbSequence t_transform(const ProbSequence &s, std::mt19937 &rng) {
  if (s.size() < 2)
    return s;
  std::uniform_int_distribution<size_t> pick(0, s.size() - 1);
  size_t i = pick(rng), j = pick(rng);
  while (j == i)
    j = pick(rng);
  std::uniform_int_distribution<long> tnum(1, 9);
  Rat t(tnum(rng), 10);
  std::vector<Rat> v = s.elements();
  Rat a = v[i], b = v[j];
  v[i] = (1 - t) * a + t * b;
  v[j] = t * a + (1 - t) * b;
  return ProbSequence(std::move(v));
}

// Random pair with x majorized by y, produced by repeated averaging.
inline std::pair<ProbSequence, ProbSequence>
random_majorized_pair(std::mt19937 &rng, size_t n, int steps = 6) {
  ProbSequence y = random_positive(rng, n);
  ProbSequence x = y;
  for (int k = 0; k < steps; ++k)
    x = t_transform(x, rng);
  return {x, y};
}

} // namespace trump::testgen
