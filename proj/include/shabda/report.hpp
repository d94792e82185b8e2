#pragma once

#include <json.hpp>

#include "shabda/augment.hpp"
#include "shabda/corpus.hpp"
#include "shabda/metrics.hpp"

namespace shabda {

nlohmann::json to_json(const ChrfParams& params);
nlohmann::json to_json(const SegEvalResult& result);
nlohmann::json to_json(const CorpusStats& stats);
nlohmann::json to_json(const CoverageCounts& counts);
nlohmann::json to_json(const CoverageReport& report);

}  // namespace shabda
