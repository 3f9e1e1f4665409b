#pragma once

#include "weitz/derivation.hpp"
#include "weitz/kernel_lab.hpp"

#include <json.hpp>

namespace weitz {

nlohmann::ordered_json to_json(const GradedPieceKey& key);
nlohmann::ordered_json to_json(const CompletenessReport& report);
nlohmann::ordered_json to_json(const CensusRow& row);
/// One record per generator: label, polynomial text, degree.
nlohmann::ordered_json to_json(const GeneratorSet& g);

} // namespace weitz
