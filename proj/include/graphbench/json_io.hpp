#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "graphbench/evaluator.hpp"
#include "graphbench/model.hpp"
#include "graphbench/overtuning.hpp"
#include "graphbench/sampler.hpp"
#include "graphbench/stability.hpp"

namespace graphbench {

nlohmann::json to_json(const ParamValue& v);
ParamValue param_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HyperParams& hp);
HyperParams hparams_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HyperGrid& grid);
HyperGrid grid_from_json(const nlohmann::json& j);

/// Grid file: JSON object mapping hyper-parameter name -> candidate list.
HyperGrid load_grid_file(const std::filesystem::path& path);

/// Hyper-parameter file: JSON object mapping name -> value.
HyperParams load_hparams_file(const std::filesystem::path& path);

nlohmann::json to_json(const DatasetStats& stats);
nlohmann::json to_json(const EvaluationReport& report);
nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const ValidUtilResult& result);
nlohmann::json to_json(const RankingSequence& seq);

/// Serializes a double so infinities survive JSON (encoded as strings).
nlohmann::json json_real(double v);

} // namespace graphbench
