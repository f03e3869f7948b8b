#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "trump/catalyst.hpp"
#include "trump/means.hpp"
#include "trump/reduction.hpp"

namespace trump {

using json = nlohmann::json;

// Sequences: array of exact literals, "p/q" or decimal, parsed exactly.
json sequence_to_json(const ProbSequence &s);
ProbSequence sequence_from_json(const json &j);

// Polynomials: coefficient strings, ascending powers.
json poly_to_json(const RatPoly &p);
RatPoly poly_from_json(const json &j);

// Catalyst: {"omega": "p/q", "multiplicities": {"0": m0, ...}}. Counts are
// numbers when they fit, strings otherwise; an enclosure base serializes as
// {"omega_lo": ..., "omega_hi": ...} with exact dyadic endpoint strings.
json catalyst_to_json(const Catalyst &c);
Catalyst catalyst_from_json(const json &j);

json report_to_json(const ConditionReport &r);
json trumping_to_json(const TrumpingReport &r);

std::string verdict_str(Verdict v);
std::string status_str(TrumpingStatus s);

// nu,r_lo,r_hi rows; endpoint doubles rounded outward.
void samples_to_csv(const std::vector<ConditionSample> &samples,
                    std::ostream &os);

} // namespace trump
