#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairsplit/necklace.hpp"
#include "fairsplit/pathsplit.hpp"
#include "fairsplit/rational.hpp"

// Wire format: vertices, colors and thieves are 1-based; rationals are
// {"num": p, "den": q} with q > 0.
namespace fairsplit::io {

using nlohmann::json;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Instance {
    std::string kind;            // "path", "cycle" or "necklace"
    std::vector<int> colors;     // 0-based
    std::optional<int> q;
    AdvantageSpec advantages;    // 0-based colors and thieves
};

// Throws SchemaError on any structural problem, including a malformed
// advantages object (wrong color, r_j = 0, wrong size, bad thief).
Instance parse_instance(const json& j);
Instance parse_instance_text(const std::string& text);
json to_json(const Instance& inst);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const PairSplit& split);
PairSplit pair_split_from_json(const json& j);

json to_json(const StableSplit& split);
StableSplit stable_split_from_json(const json& j);

json to_json(const ContinuousSplitting& cont);
ContinuousSplitting continuous_from_json(const json& j);

json to_json(const DiscreteSplitting& split);
DiscreteSplitting discrete_from_json(const json& j);

json certificate(const std::vector<std::string>& violations);

}  // namespace fairsplit::io
