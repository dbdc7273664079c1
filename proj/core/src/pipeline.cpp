#include "scenmine/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "scenmine/errors.hpp"
#include "scenmine/log.hpp"
#include "scenmine/records.hpp"

namespace scenmine {
namespace {

using Json = nlohmann::json;

double get_number(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ConfigError(std::string(key) + " must be a number");
  return j[key].get<double>();
}

bool get_bool(const Json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_boolean()) throw ConfigError(std::string(key) + " must be a boolean");
  return j[key].get<bool>();
}

}  // namespace

PipelineConfig parse_pipeline_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  static const char* kKnown[] = {
      "alpha",           "lambda_psi",     "t_d_s",           "lambda_a",
      "min_activity_s",  "turn_merge_gap_s", "t_e_s",         "delta_threshold",
      "beta",            "t_p_s",          "time_aligned",    "preprocess_enabled",
      "noise_sigma",     "lane_width_default", "sample_period_override", "workers"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : kKnown) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ConfigError("unknown config key '" + it.key() + "'");
  }

  PipelineConfig cfg;
  MotionParams& motion = cfg.miner.motion;
  motion.alpha = get_number(j, "alpha", motion.alpha);
  motion.lambda_psi = get_number(j, "lambda_psi", motion.lambda_psi);
  motion.t_d_s = get_number(j, "t_d_s", motion.t_d_s);
  motion.lambda_a = get_number(j, "lambda_a", motion.lambda_a);
  motion.min_activity_s = get_number(j, "min_activity_s", motion.min_activity_s);
  motion.turn_merge_gap_s = get_number(j, "turn_merge_gap_s", motion.turn_merge_gap_s);
  if (motion.alpha <= 0.0 || motion.alpha >= 1.0) throw ConfigError("alpha must be in (0, 1)");
  if (motion.lambda_psi <= 0.0) throw ConfigError("lambda_psi must be positive");

  cfg.miner.env.t_e_s = get_number(j, "t_e_s", cfg.miner.env.t_e_s);
  cfg.miner.env.delta_threshold = get_number(j, "delta_threshold", cfg.miner.env.delta_threshold);
  if (cfg.miner.env.t_e_s <= 0.0) throw ConfigError("t_e_s must be positive");
  if (cfg.miner.env.delta_threshold <= 0.0) throw ConfigError("delta_threshold must be positive");

  cfg.miner.interaction.beta = get_number(j, "beta", cfg.miner.interaction.beta);
  cfg.miner.interaction.t_p_s = get_number(j, "t_p_s", cfg.miner.interaction.t_p_s);
  cfg.miner.interaction.time_aligned =
      get_bool(j, "time_aligned", cfg.miner.interaction.time_aligned);
  if (cfg.miner.interaction.beta <= 1.0) throw ConfigError("beta must be > 1");
  if (cfg.miner.interaction.t_p_s <= 0.0) throw ConfigError("t_p_s must be positive");

  cfg.miner.preprocess.enabled = get_bool(j, "preprocess_enabled", true);
  cfg.miner.preprocess.noise_sigma =
      get_number(j, "noise_sigma", cfg.miner.preprocess.noise_sigma);

  cfg.parse.lane_width_default =
      get_number(j, "lane_width_default", cfg.parse.lane_width_default);
  cfg.sample_period_override = get_number(j, "sample_period_override", 0.0);
  const double workers = get_number(j, "workers", 1.0);
  if (workers < 1.0) throw ConfigError("workers must be >= 1");
  cfg.worker_count = static_cast<int>(workers);
  return cfg;
}

PipelineConfig load_pipeline_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pipeline_config(buf.str());
}

namespace {

struct SceneOutcome {
  bool ok = false;
  std::vector<ScenarioInstance> records;
  std::map<std::string, ActorType> actor_types;
  std::string scene_id;
  std::string error;
};

// One coordinator, N workers over an index queue. Finished scenes are handed
// to the writer strictly in input order; workers stall when the writer falls
// more than a window behind, which bounds memory by the window rather than
// the corpus.
class OrderedExecutor {
 public:
  OrderedExecutor(std::size_t job_count, int workers)
      : job_count_(job_count),
        window_(std::max<std::size_t>(64, static_cast<std::size_t>(workers) * 2 + 2)) {}

  template <typename RunJob, typename Consume>
  void run(int workers, RunJob run_job, Consume consume) {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] { worker_loop(run_job); });
    }
    std::size_t next_write = 0;
    while (next_write < job_count_) {
      std::unique_lock<std::mutex> lock(mu_);
      write_cv_.wait(lock, [&] { return pending_.count(next_write) > 0; });
      SceneOutcome outcome = std::move(pending_[next_write]);
      pending_.erase(next_write);
      written_ = next_write + 1;
      lock.unlock();
      window_cv_.notify_all();
      consume(next_write, std::move(outcome));
      ++next_write;
    }
    for (std::thread& t : pool) t.join();
  }

 private:
  template <typename RunJob>
  void worker_loop(RunJob& run_job) {
    while (true) {
      std::size_t index;
      {
        std::unique_lock<std::mutex> lock(mu_);
        if (next_job_ >= job_count_) return;
        index = next_job_++;
        window_cv_.wait(lock, [&] { return index < written_ + window_; });
      }
      SceneOutcome outcome = run_job(index);
      {
        std::lock_guard<std::mutex> lock(mu_);
        pending_[index] = std::move(outcome);
      }
      write_cv_.notify_one();
    }
  }

  std::size_t job_count_;
  std::size_t window_;
  std::mutex mu_;
  std::condition_variable write_cv_;
  std::condition_variable window_cv_;
  std::map<std::size_t, SceneOutcome> pending_;
  std::size_t next_job_ = 0;
  std::size_t written_ = 0;
};

SceneOutcome mine_one(const Scene& scene, const std::vector<ScenarioCategory>& catalog,
                      const PipelineConfig& config) {
  SceneOutcome outcome;
  outcome.scene_id = scene.scene_id;
  outcome.records = mine(scene, catalog, config.miner);
  for (const ActorTrack& a : scene.actors) {
    outcome.actor_types[a.actor_id] = a.actor_type;
  }
  outcome.ok = true;
  return outcome;
}

MineResult collect(std::size_t job_count, int workers,
                   const std::function<SceneOutcome(std::size_t)>& run_job,
                   std::ostream* record_stream) {
  MineResult result;
  const auto t0 = std::chrono::steady_clock::now();

  std::map<std::string, std::map<std::string, ActorType>> types_by_scene;
  OrderedExecutor executor(job_count, workers);
  executor.run(
      workers, run_job, [&](std::size_t, SceneOutcome outcome) {
        if (!outcome.ok) {
          ++result.scenes_failed;
          LOG_ERROR("scene '" << outcome.scene_id << "': " << outcome.error);
          return;
        }
        ++result.scenes_ok;
        types_by_scene[outcome.scene_id] = std::move(outcome.actor_types);
        for (ScenarioInstance& inst : outcome.records) {
          if (record_stream) {
            (*record_stream) << instance_to_json_line(inst) << "\n";
          }
          result.records.push_back(std::move(inst));
        }
      });

  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  result.summary = summarize(
      result.records,
      [&](const std::string& scene_id, const std::string& actor_id) -> std::optional<ActorType> {
        const auto scene_it = types_by_scene.find(scene_id);
        if (scene_it == types_by_scene.end()) return std::nullopt;
        const auto actor_it = scene_it->second.find(actor_id);
        if (actor_it == scene_it->second.end()) return std::nullopt;
        return actor_it->second;
      });
  return result;
}

}  // namespace

MineResult mine_files(const std::vector<std::string>& scene_paths,
                      const std::vector<ScenarioCategory>& catalog,
                      const PipelineConfig& config, std::ostream* record_stream) {
  return collect(
      scene_paths.size(), config.worker_count,
      [&](std::size_t index) -> SceneOutcome {
        SceneOutcome outcome;
        outcome.scene_id = scene_paths[index];
        try {
          Scene scene = load_scene_file(scene_paths[index], config.parse);
          if (config.sample_period_override > 0.0) {
            scene.sample_period_s = config.sample_period_override;
          }
          outcome = mine_one(scene, catalog, config);
        } catch (const std::exception& e) {
          outcome.ok = false;
          outcome.error = e.what();
        }
        return outcome;
      },
      record_stream);
}

MineResult mine_scenes(const std::vector<const Scene*>& scenes,
                       const std::vector<ScenarioCategory>& catalog,
                       const PipelineConfig& config, std::ostream* record_stream) {
  return collect(
      scenes.size(), config.worker_count,
      [&](std::size_t index) -> SceneOutcome {
        SceneOutcome outcome;
        outcome.scene_id = scenes[index]->scene_id;
        try {
          outcome = mine_one(*scenes[index], catalog, config);
        } catch (const std::exception& e) {
          outcome.ok = false;
          outcome.error = e.what();
        }
        return outcome;
      },
      record_stream);
}

std::vector<std::string> collect_scene_files(const std::string& input_path) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  if (fs::is_directory(input_path)) {
    for (const auto& entry : fs::directory_iterator(input_path)) {
      if (!entry.is_regular_file()) continue;
      const std::string name = entry.path().filename().string();
      if (name.size() >= 5 && name.substr(name.size() - 5) == ".json") {
        paths.push_back(entry.path().string());
      }
    }
    std::sort(paths.begin(), paths.end());
  } else if (fs::exists(input_path)) {
    paths.push_back(input_path);
  } else {
    throw ConfigError("input path '" + input_path + "' does not exist");
  }
  return paths;
}

}  // namespace scenmine
