#pragma once

#include <json.hpp>

#include "orlicz/classify.hpp"

namespace orlicz {

using json = nlohmann::json;

// Strict parsers: unknown fields are rejected with the offending field path.
OrliczFunction parse_function(const json& j, const std::string& path = "function");
Measure parse_measure(const json& j, const std::string& path = "measure");
StepFunction parse_step_function(const json& j, const std::string& path = "x");

json emit_function(const OrliczFunction& f);
json emit_measure(const Measure& m);
json emit_step_function(const StepFunction& x);
json emit_growth(const GrowthVerdict& v);
json emit_classification(const ClassificationReport& r);
json emit_norm_report(const NormReport& r);
json emit_conjugate(const ConjugatePair& p);
json emit_witness(const Witness& w);
json emit_challenge(const ChallengeRecord& r);
json emit_diameter(const DiameterEstimate& e);

// Throws std::invalid_argument naming "<path>.<field>" on any extra field.
void require_fields(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed);

// "inf" <-> infinity; numbers pass through
double parse_extended(const json& j, const std::string& path);
json emit_extended(double v);

}  // namespace orlicz
