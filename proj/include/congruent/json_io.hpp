#pragma once

#include "json.hpp"

#include "congruent/descent.hpp"
#include "congruent/sha_criteria.hpp"
#include "congruent/survey.hpp"

namespace congruent {

using json = nlohmann::ordered_json;

/// Generators of the group, e.g. [-1, 2, 41]; [] for the trivial group.
json as_json(const SquareClassGroup& g);
/// Five integers in table column order.
json as_json(const ResidueProfile& r);
json as_json(const Witness& w);
json as_json(const DescentReport& r);
json as_json(const Classification& c);
json as_json(const SurveyRow& row);
json as_json(const SurveySummary& s);
json as_json(const VerificationReport& r);

}  // namespace congruent
