#pragma once

// JSON views of the results, as printed by the command-line tool.

#include <json.hpp>

#include "altknot/augmentation.hpp"
#include "altknot/diagram.hpp"
#include "altknot/error.hpp"
#include "altknot/reduction.hpp"
#include "altknot/volume.hpp"

namespace altknot {

using Json = nlohmann::ordered_json;

Json validation_json(const ValidationReport& r);
Json analysis_json(const Diagram& d);
Json reduction_json(const Reduced& r);
Json augmentation_json(const AugmentationResult& res);
Json volume_json(const VolumeReport& v);
Json bounds_json(int t, std::optional<int> claim);
Json error_json(const Error& e);

// "key: value" lines; nested objects are flattened with dotted keys.
std::string to_text(const Json& j);

}  // namespace altknot
