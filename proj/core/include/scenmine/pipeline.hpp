#ifndef SCENMINE_PIPELINE_HPP_
#define SCENMINE_PIPELINE_HPP_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "scenmine/miner.hpp"
#include "scenmine/scene_io.hpp"

namespace scenmine {

struct PipelineConfig {
  MinerConfig miner;
  SceneParseOptions parse;
  // Overrides the sample period declared in scene files when positive.
  double sample_period_override = 0.0;
  int worker_count = 1;
};

// Parses a JSON config file mirroring the parameter names; every key is
// optional, unknown keys are rejected. Throws ConfigError.
PipelineConfig parse_pipeline_config(const std::string& text);
PipelineConfig load_pipeline_config_file(const std::string& path);

struct MineResult {
  std::vector<ScenarioInstance> records;  // scene order, deterministic
  Summary summary;
  std::size_t scenes_ok = 0;
  std::size_t scenes_failed = 0;
  double wall_time_s = 0.0;

  double scenes_per_second() const {
    return wall_time_s > 0.0 ? static_cast<double>(scenes_ok) / wall_time_s : 0.0;
  }
};

// Mines scene files with a worker pool. Scenes are the unit of parallelism;
// records stream out in input order, so peak memory stays bounded by the
// in-flight window rather than the corpus. Failed scenes are logged and
// counted, processing continues.
MineResult mine_files(const std::vector<std::string>& scene_paths,
                      const std::vector<ScenarioCategory>& catalog,
                      const PipelineConfig& config, std::ostream* record_stream);

// In-memory variant used by tests and benchmarks; scenes must outlive the
// call.
MineResult mine_scenes(const std::vector<const Scene*>& scenes,
                       const std::vector<ScenarioCategory>& catalog,
                       const PipelineConfig& config, std::ostream* record_stream);

// Scene files in a directory (sorted by name), or the single file itself.
std::vector<std::string> collect_scene_files(const std::string& input_path);

}  // namespace scenmine

#endif  // SCENMINE_PIPELINE_HPP_
