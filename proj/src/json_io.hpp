#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "ext_real.hpp"
#include "measures.hpp"

namespace divkit {

using Json = nlohmann::json;

// File schemas:
//   distribution  {"atoms":[{"label":"a","p":0.5}, ...]}
//   joint         {"x":["a",...],"y":["b",...],"pmf":[[...],...]}
//   kernel        {"source":[...],"target":[...],"rows":[[...],...]}

DiscreteDistribution distribution_from_json(const Json& j);
JointDistribution joint_from_json(const Json& j);
StochasticKernel kernel_from_json(const Json& j);

Json to_json(const DiscreteDistribution& d);
Json to_json(const JointDistribution& j);
Json to_json(const StochasticKernel& k);

/// Number, or the string "inf" (JSON has no infinity literal).
Json ext_real_to_json(ExtReal v);

Json parse_json_text(const std::string& text);
DiscreteDistribution distribution_from_text(const std::string& text);
JointDistribution joint_from_text(const std::string& text);
StochasticKernel kernel_from_text(const std::string& text);

} // namespace divkit
