#include "trump/serialize.hpp"

#include <ostream>

namespace trump {

json sequence_to_json(const ProbSequence &s) {
  json arr = json::array();
  for (const Rat &e : s.elements())
    arr.push_back(rat_str(e));
  return arr;
}

ProbSequence sequence_from_json(const json &j) {
  if (!j.is_array())
    throw std::invalid_argument("sequence: expected a JSON array");
  std::vector<Rat> elems;
  for (const auto &v : j) {
    if (v.is_string())
      elems.push_back(parse_rat(v.get<std::string>()));
    else if (v.is_number_integer())
      elems.push_back(Rat((long)v.get<long long>()));
    else
      throw std::invalid_argument("sequence: elements must be exact literals");
  }
  return ProbSequence(std::move(elems));
}

json poly_to_json(const RatPoly &p) {
  json arr = json::array();
  for (const Rat &c : p.coeffs())
    arr.push_back(rat_str(c));
  return arr;
}

RatPoly poly_from_json(const json &j) {
  if (!j.is_array())
    throw std::invalid_argument("polynomial: expected a JSON array");
  std::vector<Rat> c;
  for (const auto &v : j)
    c.push_back(parse_rat(v.get<std::string>()));
  return RatPoly(std::move(c));
}

json catalyst_to_json(const Catalyst &c) {
  json j;
  if (c.rational_base()) {
    j["omega"] = rat_str(c.base_rat());
  } else {
    j["omega_lo"] = rat_str(c.base_enc().lo_rat());
    j["omega_hi"] = rat_str(c.base_enc().hi_rat());
  }
  json mult = json::object();
  for (const auto &[k, m] : c.multiplicities) {
    if (m.fits_ulong_p() && m.get_ui() <= (1ull << 53))
      mult[std::to_string(k)] = (uint64_t)m.get_ui();
    else
      mult[std::to_string(k)] = m.get_str();
  }
  j["multiplicities"] = std::move(mult);
  return j;
}

Catalyst catalyst_from_json(const json &j) {
  Catalyst c;
  if (j.contains("omega")) {
    Rat base = parse_rat(j.at("omega").get<std::string>());
    if (base <= 1)
      throw std::invalid_argument("catalyst: omega must exceed 1");
    c.base = base;
  } else if (j.contains("omega_lo") && j.contains("omega_hi")) {
    Rat lo = parse_rat(j.at("omega_lo").get<std::string>());
    Rat hi = parse_rat(j.at("omega_hi").get<std::string>());
    c.base = Enclosure::from_bounds_rat(lo, hi);
  } else {
    throw std::invalid_argument("catalyst: missing omega");
  }
  const json &mult = j.at("multiplicities");
  if (!mult.is_object() || mult.empty())
    throw std::invalid_argument("catalyst: missing multiplicities");
  for (auto it = mult.begin(); it != mult.end(); ++it) {
    long k = std::stol(it.key());
    Int m;
    if (it.value().is_number_unsigned() || it.value().is_number_integer())
      m = Int((long)it.value().get<long long>());
    else
      m = Int(it.value().get<std::string>());
    if (m <= 0)
      throw std::invalid_argument("catalyst: multiplicities must be positive");
    c.multiplicities[k] = m;
  }
  return c;
}

std::string verdict_str(Verdict v) {
  switch (v) {
  case Verdict::satisfied:
    return "satisfied";
  case Verdict::violated:
    return "violated";
  case Verdict::inconclusive:
    return "inconclusive";
  }
  return "?";
}

std::string status_str(TrumpingStatus s) {
  switch (s) {
  case TrumpingStatus::not_trumped:
    return "not_trumped";
  case TrumpingStatus::trumped:
    return "trumped";
  case TrumpingStatus::trumped_conditions_only:
    return "trumped_conditions_only";
  case TrumpingStatus::inconclusive:
    return "inconclusive";
  }
  return "?";
}

namespace {

json enclosure_bounds(const Enclosure &e) {
  json j;
  j["lo"] = e.lo_finite() ? rat_str(e.lo_rat()) : (e.lo_d() > 0 ? "inf" : "-inf");
  j["hi"] = e.hi_finite() ? rat_str(e.hi_rat()) : (e.hi_d() > 0 ? "inf" : "-inf");
  j["lo_approx"] = e.lo_d();
  j["hi_approx"] = e.hi_d();
  return j;
}

} // namespace

json report_to_json(const ConditionReport &r) {
  json j;
  j["verdict"] = verdict_str(r.verdict);
  j["mode"] = r.mode == CheckMode::strict ? "strict" : "closure";
  j["certificate"] =
      r.certificate == CertificateKind::exact ? "exact" : "numeric";
  j["numeric_only"] = r.numeric_only;
  if (r.first_violation) {
    json v;
    v["witness"] = r.first_violation->str();
    switch (r.first_violation->kind) {
    case ViolationSite::Kind::nu_neg_inf:
      v["at"] = "nu->-inf";
      break;
    case ViolationSite::Kind::nu_pos_inf:
      v["at"] = "nu->+inf";
      break;
    case ViolationSite::Kind::entropy_point:
      v["at"] = "entropy";
      break;
    case ViolationSite::Kind::finite_nu:
      v["at"] = rat_str(r.first_violation->nu);
      break;
    }
    j["first_violation"] = std::move(v);
  }
  if (r.min_margin)
    j["min_margin"] = rat_str(*r.min_margin);
  json samples = json::array();
  for (const ConditionSample &s : r.samples) {
    json e = enclosure_bounds(s.r);
    e["nu"] = s.nu.get_d();
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  return j;
}

json trumping_to_json(const TrumpingReport &r) {
  json j;
  j["status"] = status_str(r.status);
  j["route"] = r.route;
  if (!r.witness.empty())
    j["witness"] = r.witness;
  if (!r.note.empty())
    j["note"] = r.note;
  j["conditions"] = report_to_json(r.conditions);
  if (r.catalyst)
    j["catalyst"] = catalyst_to_json(*r.catalyst);
  if (r.certificate)
    j["certificate_b"] = poly_to_json(*r.certificate);
  if (!r.knots.empty()) {
    json knots = json::array();
    for (const KnotCheck &k : r.knots) {
      json e;
      e["k"] = k.k;
      e["gap"] = rat_str(k.gap_value);
      e["predicted"] = rat_str(k.predicted);
      knots.push_back(std::move(e));
    }
    j["knots"] = std::move(knots);
  }
  return j;
}

void samples_to_csv(const std::vector<ConditionSample> &samples,
                    std::ostream &os) {
  os << "nu,r_lo,r_hi\n";
  for (const ConditionSample &s : samples)
    os << s.nu.get_d() << "," << s.r.lo_d() << "," << s.r.hi_d() << "\n";
}

} // namespace trump
