#include "trump/rational.hpp"

#include <cctype>
#include <sstream>

namespace trump {

Rat pow_rat(const Rat &base, long e) {
  if (e == 0)
    return Rat(1);
  if (base == 0 && e < 0)
    throw std::domain_error("pow_rat: zero base with negative exponent");
  Rat b = e < 0 ? Rat(1) / base : base;
  unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
  Rat r(1);
  while (k > 0) {
    if (k & 1)
      r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

namespace {

bool all_digits(const std::string &s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c))
      return false;
  return true;
}

} // namespace

Rat parse_rat(const std::string &raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace((unsigned char)c))
      s.push_back(c);
  if (s.empty())
    throw std::invalid_argument("parse_rat: empty literal");

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  Rat value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    if (dot != std::string::npos)
      throw std::invalid_argument("parse_rat: mixed '/' and '.' in \"" + raw + "\"");
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("parse_rat: bad fraction \"" + raw + "\"");
    Int d(den);
    if (d == 0)
      throw std::invalid_argument("parse_rat: zero denominator in \"" + raw + "\"");
    value = Rat(Int(num), d);
  } else if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty())
      ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("parse_rat: bad decimal \"" + raw + "\"");
    value = Rat(Int(ip));
    if (!fp.empty()) {
      Int scale = 1;
      for (size_t i = 0; i < fp.size(); ++i)
        scale *= 10;
      value += Rat(Int(fp), scale);
    }
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("parse_rat: bad integer \"" + raw + "\"");
    value = Rat(Int(s));
  }
  value.canonicalize();
  return neg ? Rat(-value) : value;
}

std::vector<Rat> parse_rat_list(const std::string &csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_rat(item));
  if (out.empty())
    throw std::invalid_argument("parse_rat_list: no values in \"" + csv + "\"");
  return out;
}

std::string rat_str(const Rat &q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1)
    return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat simplest_rat_in(const Rat &lo, const Rat &hi) {
  if (lo > hi)
    throw std::invalid_argument("simplest_rat_in: empty interval");
  if (lo <= 0 && 0 <= hi)
    return Rat(0);
  if (hi < 0)
    return -simplest_rat_in(-hi, -lo);
  // 0 < lo <= hi: continued-fraction descent
  Int fl = Int(lo.get_num() / lo.get_den()); // floor, lo > 0
  if (Rat(fl) == lo)
    return lo;
  if (Rat(fl + 1) <= hi)
    return Rat(fl + 1);
  Rat sub = simplest_rat_in(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
  return Rat(fl) + Rat(1) / sub;
}

Rat dyadic_floor(const Rat &q, unsigned bits) {
  Int scale = Int(1) << bits;
  Rat scaled = q * Rat(scale);
  Int fl = Int(scaled.get_num() / scaled.get_den());
  if (scaled < 0 && Rat(fl) != scaled)
    fl -= 1;
  return Rat(fl, scale);
}

} // namespace trump
