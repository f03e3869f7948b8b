#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "trump/rational.hpp"

namespace trump {

// Closed interval [lo, hi] of MPFR numbers with outward (directed) rounding.
// Every operation returns an interval that contains the exact result for any
// choice of point values inside the operands. Endpoints may be infinite.
class Enclosure {
public:
  static constexpr mpfr_prec_t kDefaultPrec = 128;

  explicit Enclosure(mpfr_prec_t prec = kDefaultPrec);
  Enclosure(const Enclosure &o);
  Enclosure(Enclosure &&o) noexcept;
  Enclosure &operator=(const Enclosure &o);
  Enclosure &operator=(Enclosure &&o) noexcept;
  ~Enclosure();

  static Enclosure from_rat(const Rat &q, mpfr_prec_t prec = kDefaultPrec);
  static Enclosure from_long(long v, mpfr_prec_t prec = kDefaultPrec);
  static Enclosure from_bounds_rat(const Rat &lo, const Rat &hi,
                                   mpfr_prec_t prec = kDefaultPrec);
  static Enclosure pos_infinity(mpfr_prec_t prec = kDefaultPrec);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const { return (lo_d() + hi_d()) / 2; }
  double width_d() const { return hi_d() - lo_d(); }

  bool lo_finite() const { return mpfr_number_p(lo_); }
  bool hi_finite() const { return mpfr_number_p(hi_); }
  Rat lo_rat() const; // exact dyadic endpoint; endpoint must be finite
  Rat hi_rat() const;

  // +1 if certainly positive, -1 if certainly negative, 0 if the sign is
  // not determined by this enclosure.
  int certain_sign() const;
  int lo_sign() const;
  int hi_sign() const;
  bool contains_zero() const;
  bool is_exact() const { return mpfr_equal_p(lo_, hi_); }
  bool is_exact_zero() const;
  bool contains_rat(const Rat &q) const;

  // a.hi < b.lo  /  a.hi <= b.lo: proofs of a < b resp. a <= b.
  static bool surely_lt(const Enclosure &a, const Enclosure &b);
  static bool surely_le(const Enclosure &a, const Enclosure &b);

  friend Enclosure operator+(const Enclosure &a, const Enclosure &b);
  friend Enclosure operator-(const Enclosure &a, const Enclosure &b);
  friend Enclosure operator-(const Enclosure &a);
  friend Enclosure operator*(const Enclosure &a, const Enclosure &b);
  friend Enclosure operator/(const Enclosure &a, const Enclosure &b);

  friend Enclosure exp(const Enclosure &a);
  friend Enclosure log(const Enclosure &a); // requires a >= 0, a.hi > 0
  friend Enclosure abs(const Enclosure &a);
  friend Enclosure pow_int(const Enclosure &a, long k);
  friend Enclosure min(const Enclosure &a, const Enclosure &b);
  friend Enclosure max(const Enclosure &a, const Enclosure &b);
  friend Enclosure hull(const Enclosure &a, const Enclosure &b);
  friend Enclosure intersect(const Enclosure &a, const Enclosure &b);

  std::string str() const;

private:
  mpfr_t lo_, hi_;
};

Enclosure operator+(const Enclosure &a, const Rat &b);
Enclosure operator-(const Enclosure &a, const Rat &b);
Enclosure operator*(const Enclosure &a, const Rat &b);
Enclosure operator/(const Enclosure &a, const Rat &b);

// base >= 0; 0^e = 0 for e > 0. Non-integer e on an interval touching zero
// keeps the zero endpoint.
Enclosure pow_rat_exp(const Enclosure &base, const Rat &e);

Enclosure sum(const std::vector<Enclosure> &terms, mpfr_prec_t prec);

} // namespace trump
