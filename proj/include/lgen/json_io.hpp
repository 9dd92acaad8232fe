#pragma once

#include <json.hpp>

#include "lgen/sampler.hpp"
#include "lgen/score.hpp"
#include "lgen/validator.hpp"

namespace lgen {

using json = nlohmann::ordered_json;

json to_json(const Field& f);
/// Throws std::invalid_argument on a malformed object.
Field field_from_json(const json& j);

json to_json(const DatasetRecord& r);
DatasetRecord record_from_json(const json& j);

json to_json(const DatasetStats& s);
json to_json(const ScoreReport& r);
json to_json(const ValidationReport& r);

/// {"p/q", float} pair for a rational.
json rational_json(const Rational& r);

}  // namespace lgen
