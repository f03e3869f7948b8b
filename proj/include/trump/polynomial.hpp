#pragma once

#include <utility>
#include <vector>

#include "trump/enclosure.hpp"
#include "trump/rational.hpp"

namespace trump {

template <class T> struct scalar_traits;

template <> struct scalar_traits<Rat> {
  static constexpr bool exact = true;
  static bool is_zero(const Rat &v) { return v == 0; }
  static Rat zero() { return Rat(0); }
  static Rat from_long(long v) { return Rat(v); }
};

template <> struct scalar_traits<Enclosure> {
  static constexpr bool exact = false;
  static bool is_zero(const Enclosure &v) { return v.is_exact_zero(); }
  static Enclosure zero() { return Enclosure(); }
  static Enclosure from_long(long v) { return Enclosure::from_long(v); }
};

// Dense polynomial, coefficients ascending by power. Trailing coefficients
// that are exactly zero are trimmed; the zero polynomial has no coefficients
// and degree -1.
template <class T> class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(T v, size_t k) {
    std::vector<T> c(k + 1, scalar_traits<T>::zero());
    c[k] = std::move(v);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return (long)c_.size() - 1; }
  const std::vector<T> &coeffs() const { return c_; }

  T coeff(size_t k) const {
    return k < c_.size() ? c_[k] : scalar_traits<T>::zero();
  }

  T evaluate(const T &s) const {
    T acc = scalar_traits<T>::zero();
    for (size_t i = c_.size(); i-- > 0;)
      acc = acc * s + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1)
      return Polynomial();
    std::vector<T> d;
    d.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * scalar_traits<T>::from_long((long)i));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()),
                     scalar_traits<T>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      c[i] = c[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i)
      c[i] = c[i] + b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial &a, const Polynomial &b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()),
                     scalar_traits<T>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      c[i] = c[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i)
      c[i] = c[i] - b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero())
      return Polynomial();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, scalar_traits<T>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial &a, const T &v) {
    std::vector<T> c = a.c_;
    for (T &ci : c)
      ci = ci * v;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial &a, const Polynomial &b)
    requires scalar_traits<T>::exact
  {
    return a.c_ == b.c_;
  }

private:
  void trim() {
    while (!c_.empty() && scalar_traits<T>::is_zero(c_.back()))
      c_.pop_back();
  }

  std::vector<T> c_;
};

using RatPoly = Polynomial<Rat>;
using EncPoly = Polynomial<Enclosure>;

// Quotient and remainder of exact division.
std::pair<RatPoly, RatPoly> divmod(const RatPoly &p, const RatPoly &d);

// Division that must be exact; throws std::domain_error on a nonzero
// remainder.
RatPoly exact_divide(const RatPoly &p, const RatPoly &d);

bool all_coeffs_nonneg(const RatPoly &p);
bool all_coeffs_positive(const RatPoly &p);
bool all_coeffs_integer(const RatPoly &p);

// Number of distinct real roots in (0, +inf), by Sturm's method over exact
// rationals (squarefree reduction, then sign variations at 0+ and +inf).
int count_positive_roots(const RatPoly &p);

// Disjoint rational intervals (a, b], each containing exactly one distinct
// positive root. Endpoints avoid the roots themselves.
std::vector<std::pair<Rat, Rat>> isolate_positive_roots(const RatPoly &p);

// Conversion with directed rounding.
EncPoly to_enclosure(const RatPoly &p, mpfr_prec_t prec);

// Quotient of p by (1 - s/w). The remainder (value p(w) up to a unit) is
// returned alongside; exact division requires it to vanish.
template <class T>
std::pair<Polynomial<T>, T> divide_linear_scaled(const Polynomial<T> &p,
                                                 const T &w) {
  if (p.is_zero())
    return {Polynomial<T>(), scalar_traits<T>::zero()};
  const auto &c = p.coeffs();
  std::vector<T> q;
  q.reserve(c.size());
  T carry = scalar_traits<T>::zero();
  for (size_t k = 0; k + 1 < c.size(); ++k) {
    carry = k == 0 ? c[0] : c[k] + carry / w;
    q.push_back(carry);
  }
  T rem = c.back() + (q.empty() ? scalar_traits<T>::zero() : q.back() / w);
  return {Polynomial<T>(std::move(q)), rem};
}

} // namespace trump
