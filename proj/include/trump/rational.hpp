#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace trump {

using Int = mpz_class;
using Rat = mpq_class;

// Exact integer power. Negative exponents require a nonzero base.
Rat pow_rat(const Rat &base, long e);

// Parses "p/q", an integer, or a decimal literal ("0.4", "-1.25") exactly.
Rat parse_rat(const std::string &s);

// Comma-separated list of rational literals.
std::vector<Rat> parse_rat_list(const std::string &csv);

// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat &q);

// Simplest rational (smallest denominator, then smallest numerator) in the
// closed interval [lo, hi]. Requires lo <= hi.
Rat simplest_rat_in(const Rat &lo, const Rat &hi);

// Largest dyadic k/2^bits <= q.
Rat dyadic_floor(const Rat &q, unsigned bits);

inline Int rat_den_lcm(const std::vector<Rat> &qs) {
  Int l = 1;
  for (const Rat &q : qs)
    l = lcm(l, Int(q.get_den()));
  return l;
}

} // namespace trump
