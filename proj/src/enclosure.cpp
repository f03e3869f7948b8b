#include "trump/enclosure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trump {

namespace {

mpfr_prec_t join_prec(const Enclosure &a, const Enclosure &b) {
  return std::max(a.precision(), b.precision());
}

} // namespace

Enclosure::Enclosure(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure &o) {
  mpfr_init2(lo_, o.precision());
  mpfr_init2(hi_, o.precision());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure &&o) noexcept {
  mpfr_init2(lo_, o.precision());
  mpfr_init2(hi_, o.precision());
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Enclosure &Enclosure::operator=(const Enclosure &o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.precision());
    mpfr_set_prec(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Enclosure &Enclosure::operator=(Enclosure &&o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Enclosure Enclosure::from_rat(const Rat &q, mpfr_prec_t prec) {
  Enclosure r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Enclosure Enclosure::from_long(long v, mpfr_prec_t prec) {
  Enclosure r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::from_bounds_rat(const Rat &lo, const Rat &hi,
                                     mpfr_prec_t prec) {
  if (lo > hi)
    throw std::invalid_argument("Enclosure: lo > hi");
  Enclosure r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

Enclosure Enclosure::pos_infinity(mpfr_prec_t prec) {
  Enclosure r(prec);
  mpfr_set_inf(r.lo_, 1);
  mpfr_set_inf(r.hi_, 1);
  return r;
}

namespace {

Rat mpfr_to_rat(const mpfr_t v) {
  if (!mpfr_number_p(v))
    throw std::domain_error("Enclosure: endpoint not finite");
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, v);
  Rat r(q);
  mpq_clear(q);
  return r;
}

} // namespace

Rat Enclosure::lo_rat() const { return mpfr_to_rat(lo_); }
Rat Enclosure::hi_rat() const { return mpfr_to_rat(hi_); }

int Enclosure::certain_sign() const {
  if (mpfr_sgn(lo_) > 0)
    return 1;
  if (mpfr_sgn(hi_) < 0)
    return -1;
  return 0;
}

int Enclosure::lo_sign() const { return mpfr_sgn(lo_); }
int Enclosure::hi_sign() const { return mpfr_sgn(hi_); }

bool Enclosure::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Enclosure::is_exact_zero() const {
  return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

bool Enclosure::contains_rat(const Rat &q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Enclosure::surely_lt(const Enclosure &a, const Enclosure &b) {
  return mpfr_less_p(a.hi_, b.lo_);
}

bool Enclosure::surely_le(const Enclosure &a, const Enclosure &b) {
  return mpfr_lessequal_p(a.hi_, b.lo_);
}

Enclosure operator+(const Enclosure &a, const Enclosure &b) {
  Enclosure r(join_prec(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure &a, const Enclosure &b) {
  Enclosure r(join_prec(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure &a) {
  Enclosure r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator*(const Enclosure &a, const Enclosure &b) {
  const mpfr_prec_t p = join_prec(a, b);
  Enclosure r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_))
        mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_))
        mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  // 0 * inf -> nan in mpfr; our intervals never pair an exact zero with an
  // infinite operand, so reject the case instead of propagating nan.
  if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_))
    throw std::domain_error("Enclosure: 0 * inf");
  return r;
}

Enclosure operator/(const Enclosure &a, const Enclosure &b) {
  if (b.contains_zero())
    throw std::domain_error("Enclosure: division by interval containing 0");
  const mpfr_prec_t p = join_prec(a, b);
  Enclosure r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, as[i], bs[j], MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_))
        mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, as[i], bs[j], MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_))
        mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_))
    throw std::domain_error("Enclosure: inf / inf");
  return r;
}

Enclosure exp(const Enclosure &a) {
  Enclosure r(a.precision());
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Enclosure log(const Enclosure &a) {
  if (mpfr_sgn(a.lo_) < 0 || mpfr_sgn(a.hi_) <= 0)
    throw std::domain_error("Enclosure: log of non-positive interval");
  Enclosure r(a.precision());
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD); // log(+0) = -inf
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Enclosure abs(const Enclosure &a) {
  Enclosure r(a.precision());
  if (mpfr_sgn(a.lo_) >= 0)
    return a;
  if (mpfr_sgn(a.hi_) <= 0)
    return -a;
  // spans zero
  mpfr_set_zero(r.lo_, 1);
  mpfr_t t;
  mpfr_init2(t, a.precision());
  mpfr_neg(t, a.lo_, MPFR_RNDU);
  if (mpfr_greater_p(t, a.hi_))
    mpfr_set(r.hi_, t, MPFR_RNDU);
  else
    mpfr_set(r.hi_, a.hi_, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Enclosure pow_int(const Enclosure &a, long k) {
  const mpfr_prec_t p = a.precision();
  if (k == 0)
    return Enclosure::from_long(1, p);
  if (k < 0) {
    if (a.contains_zero())
      throw std::domain_error("Enclosure: negative power of interval with 0");
    return Enclosure::from_long(1, p) / pow_int(a, -k);
  }
  Enclosure r(p);
  if (k % 2 == 0 && a.contains_zero()) {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t1, t2;
    mpfr_init2(t1, p);
    mpfr_init2(t2, p);
    mpfr_pow_si(t1, a.lo_, k, MPFR_RNDU);
    mpfr_pow_si(t2, a.hi_, k, MPFR_RNDU);
    mpfr_max(r.hi_, t1, t2, MPFR_RNDU);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return r;
  }
  // monotone on the interval (odd k, or even k with a sign-definite interval)
  mpfr_t c1, c2;
  mpfr_init2(c1, p);
  mpfr_init2(c2, p);
  mpfr_pow_si(c1, a.lo_, k, MPFR_RNDD);
  mpfr_pow_si(c2, a.hi_, k, MPFR_RNDD);
  mpfr_min(r.lo_, c1, c2, MPFR_RNDD);
  mpfr_pow_si(c1, a.lo_, k, MPFR_RNDU);
  mpfr_pow_si(c2, a.hi_, k, MPFR_RNDU);
  mpfr_max(r.hi_, c1, c2, MPFR_RNDU);
  mpfr_clear(c1);
  mpfr_clear(c2);
  return r;
}

Enclosure min(const Enclosure &a, const Enclosure &b) {
  Enclosure r(join_prec(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure max(const Enclosure &a, const Enclosure &b) {
  Enclosure r(join_prec(a, b));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure hull(const Enclosure &a, const Enclosure &b) {
  Enclosure r(join_prec(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure intersect(const Enclosure &a, const Enclosure &b) {
  Enclosure r(join_prec(a, b));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  if (mpfr_greater_p(r.lo_, r.hi_))
    throw std::domain_error("Enclosure: empty intersection");
  return r;
}

std::string Enclosure::str() const {
  std::ostringstream os;
  os << "[" << lo_d() << ", " << hi_d() << "]";
  return os.str();
}

Enclosure operator+(const Enclosure &a, const Rat &b) {
  return a + Enclosure::from_rat(b, a.precision());
}
Enclosure operator-(const Enclosure &a, const Rat &b) {
  return a - Enclosure::from_rat(b, a.precision());
}
Enclosure operator*(const Enclosure &a, const Rat &b) {
  return a * Enclosure::from_rat(b, a.precision());
}
Enclosure operator/(const Enclosure &a, const Rat &b) {
  return a / Enclosure::from_rat(b, a.precision());
}

Enclosure pow_rat_exp(const Enclosure &base, const Rat &e) {
  if (base.lo_sign() < 0)
    throw std::domain_error("pow_rat_exp: negative base");
  if (e.get_den() == 1 && e.get_num().fits_slong_p())
    return pow_int(base, e.get_num().get_si());
  if (base.is_exact_zero()) {
    if (e <= 0)
      throw std::domain_error("pow_rat_exp: zero base, non-positive exponent");
    return Enclosure(base.precision());
  }
  if (base.lo_sign() == 0 && e <= 0)
    throw std::domain_error("pow_rat_exp: zero base, non-positive exponent");
  // lo == 0 with e > 0 falls through: log gives [-inf, .], exp maps back to 0
  return exp(Enclosure::from_rat(e, base.precision()) * log(base));
}

Enclosure sum(const std::vector<Enclosure> &terms, mpfr_prec_t prec) {
  Enclosure acc(prec);
  for (const Enclosure &t : terms)
    acc = acc + t;
  return acc;
}

} // namespace trump
