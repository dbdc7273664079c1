// Command-line front end: mine / tag / synth / stats / render.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scenmine/audit.hpp"
#include "scenmine/catalog.hpp"
#include "scenmine/errors.hpp"
#include "scenmine/log.hpp"
#include "scenmine/miner.hpp"
#include "scenmine/pipeline.hpp"
#include "scenmine/records.hpp"
#include "scenmine/scene_io.hpp"
#include "scenmine/svg_render.hpp"
#include "scenmine/synthgen.hpp"

namespace fs = std::filesystem;
using namespace scenmine;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSceneError = 1;
constexpr int kExitConfigError = 2;

struct CommonArgs {
  std::string input;
  std::string output;
  std::string catalog_path;
  std::string config_path;
  int workers = 0;  // 0: take the config value
};

PipelineConfig resolve_config(const CommonArgs& args) {
  PipelineConfig config;
  if (!args.config_path.empty()) {
    config = load_pipeline_config_file(args.config_path);
  }
  if (args.workers > 0) config.worker_count = args.workers;
  return config;
}

std::vector<ScenarioCategory> resolve_catalog(const CommonArgs& args) {
  if (args.catalog_path.empty()) return builtin_catalog();
  return load_catalog_file(args.catalog_path);
}

int run_mine(const CommonArgs& args) {
  PipelineConfig config;
  std::vector<ScenarioCategory> catalog;
  std::vector<std::string> paths;
  try {
    config = resolve_config(args);
    catalog = resolve_catalog(args);
    paths = collect_scene_files(args.input);
  } catch (const Error& e) {
    std::cerr << "scenario_miner: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!args.output.empty()) {
    out_file.open(args.output);
    if (!out_file) {
      std::cerr << "scenario_miner: cannot open output '" << args.output << "'\n";
      return kExitConfigError;
    }
    out = &out_file;
  }

  const MineResult result = mine_files(paths, catalog, config, out);

  std::cerr << "scenes: " << result.scenes_ok << " ok, " << result.scenes_failed << " failed\n"
            << summary_to_text(result.summary);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "wall time: %.3f s (%.1f scenes/s)\n", result.wall_time_s,
                result.scenes_per_second());
  std::cerr << buf;
  return result.scenes_failed > 0 ? kExitSceneError : kExitOk;
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int run_tag(const CommonArgs& args) {
  PipelineConfig config;
  try {
    config = resolve_config(args);
  } catch (const Error& e) {
    std::cerr << "scenario_miner: " << e.what() << "\n";
    return kExitConfigError;
  }
  if (args.output.empty()) {
    std::cerr << "scenario_miner: tag requires --output <directory>\n";
    return kExitConfigError;
  }

  Scene scene;
  try {
    scene = load_scene_file(args.input, config.parse);
    if (config.sample_period_override > 0.0) {
      scene.sample_period_s = config.sample_period_override;
    }
  } catch (const std::exception& e) {
    std::cerr << "scenario_miner: " << e.what() << "\n";
    return kExitSceneError;
  }

  fs::create_directories(args.output);
  const SceneTags tags = compute_scene_tags(scene, config.miner);

  {
    std::ofstream lon(fs::path(args.output) / "longitudinal.csv");
    std::ofstream lat(fs::path(args.output) / "lateral.csv");
    lon << "actor_id,tag_class,tag,start_frame,end_frame\n";
    lat << "actor_id,tag_class,tag,start_frame,end_frame\n";
    for (std::size_t a = 0; a < scene.actors.size(); ++a) {
      for (const TagInterval& iv : intervals_from_frames(tags.longitudinal[a])) {
        lon << scene.actors[a].actor_id << ",longitudinal,"
            << to_string(static_cast<LongitudinalTag>(iv.tag)) << "," << iv.start_frame << ","
            << iv.end_frame << "\n";
      }
      for (const TagInterval& iv : intervals_from_frames(tags.lateral[a])) {
        lat << scene.actors[a].actor_id << ",lateral,"
            << to_string(static_cast<LateralTag>(iv.tag)) << "," << iv.start_frame << ","
            << iv.end_frame << "\n";
      }
    }
  }

  {
    std::ofstream env(fs::path(args.output) / "environment.csv");
    env << "actor_id,element_id,frame,phi_a,phi_e,delta_phi_a,tag\n";
    for (std::size_t a = 0; a < scene.actors.size(); ++a) {
      for (std::size_t e = 0; e < scene.map_elements.size(); ++e) {
        std::vector<EnvFrameTrace> trace;
        const std::vector<EnvInteractionTag> env_tags = tag_actor_environment(
            tags.tracks[a], scene.actors[a].length_m, scene.actors[a].width_m,
            scene.map_elements[e], config.miner.env, scene.sample_period_s, nullptr, &trace);
        for (std::size_t k = 0; k < env_tags.size(); ++k) {
          env << scene.actors[a].actor_id << "," << scene.map_elements[e].element_id << "," << k
              << "," << csv_number(trace[k].phi_a) << "," << csv_number(trace[k].phi_e) << ","
              << csv_number(trace[k].delta_phi_a) << "," << to_string(env_tags[k]) << "\n";
        }
      }
    }
  }

  {
    std::ofstream pairs(fs::path(args.output) / "pairs.csv");
    pairs << "host_id,guest_id,frame,close_proximity,estimated_collision,relative_heading,"
             "bearing\n";
    const int n = tags.actor_count();
    for (int h = 0; h < n; ++h) {
      for (int g = 0; g < n; ++g) {
        if (h == g) continue;
        for (int k = 0; k < scene.frame_count; ++k) {
          const FramePairTags& pt = tags.pair_tags(h, g, k);
          pairs << scene.actors[h].actor_id << "," << scene.actors[g].actor_id << "," << k << ","
                << (pt.valid && pt.close_proximity ? 1 : 0) << ","
                << (pt.valid && pt.estimated_collision ? 1 : 0) << ","
                << to_string(pt.relative_heading) << "," << to_string(pt.bearing) << "\n";
        }
      }
    }
  }
  return kExitOk;
}

int run_synth(const CommonArgs& args, const std::string& category, int count,
              std::uint64_t seed) {
  PipelineConfig config;
  try {
    config = resolve_config(args);
  } catch (const Error& e) {
    std::cerr << "scenario_miner: " << e.what() << "\n";
    return kExitConfigError;
  }
  if (args.output.empty()) {
    std::cerr << "scenario_miner: synth requires --output <directory>\n";
    return kExitConfigError;
  }

  SynthParams params;
  params.miner = config.miner;
  if (config.sample_period_override > 0.0) {
    params.sample_period_s = config.sample_period_override;
  }
  params.frame_count =
      std::max(2, static_cast<int>(std::lround(9.1 / params.sample_period_s)));

  fs::create_directories(args.output);
  try {
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
      const GroundTruth gt = category == "negative"
                                 ? generate_negative_scene(s, params)
                                 : generate_scene(category, s, params);
      const fs::path base = fs::path(args.output) / gt.scene.scene_id;
      write_ground_truth(gt, base.string() + ".scene.json", base.string() + ".truth.jsonl");
    }
  } catch (const Error& e) {
    std::cerr << "scenario_miner: " << e.what() << "\n";
    return kExitSceneError;
  }
  std::cerr << "wrote " << count << " scene(s) to " << args.output << "\n";
  return kExitOk;
}

int run_stats(const CommonArgs& args) {
  std::vector<ScenarioInstance> records;
  try {
    records = load_records_file(args.input);
  } catch (const Error& e) {
    std::cerr << "scenario_miner: " << e.what() << "\n";
    return kExitConfigError;
  }
  std::cout << summary_to_text(summarize(records));
  return kExitOk;
}

int run_render(const CommonArgs& args, const std::string& record_path, int line) {
  PipelineConfig config;
  try {
    config = resolve_config(args);
  } catch (const Error& e) {
    std::cerr << "scenario_miner: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    const Scene scene = load_scene_file(args.input, config.parse);
    const std::vector<ScenarioInstance> records = load_records_file(record_path);
    if (line < 1 || line > static_cast<int>(records.size())) {
      std::cerr << "scenario_miner: record file has " << records.size() << " line(s), asked for "
                << line << "\n";
      return kExitConfigError;
    }
    const std::string svg = render_scenario_svg(scene, records[line - 1]);
    if (args.output.empty()) {
      std::cout << svg;
    } else {
      std::ofstream out(args.output);
      if (!out) {
        std::cerr << "scenario_miner: cannot open output '" << args.output << "'\n";
        return kExitConfigError;
      }
      out << svg;
    }
  } catch (const Error& e) {
    std::cerr << "scenario_miner: " << e.what() << "\n";
    return kExitSceneError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scenario mining over multi-actor trajectory scenes"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string category = "SC1";
  int count = 1;
  std::uint64_t seed = 1;
  std::string record_path;
  int record_line = 1;

  CLI::App* mine_cmd = app.add_subcommand("mine", "Extract scenarios from scene files");
  mine_cmd->add_option("--input", args.input, "Scene file or directory")->required();
  mine_cmd->add_option("--output", args.output, "Record output path (default: stdout)");
  mine_cmd->add_option("--catalog", args.catalog_path, "Category definition file");
  mine_cmd->add_option("--config", args.config_path, "Pipeline config file");
  mine_cmd->add_option("--workers", args.workers, "Worker thread count");

  CLI::App* tag_cmd = app.add_subcommand("tag", "Dump tag timelines as CSV");
  tag_cmd->add_option("--input", args.input, "Scene file")->required();
  tag_cmd->add_option("--output", args.output, "Output directory")->required();
  tag_cmd->add_option("--config", args.config_path, "Pipeline config file");

  CLI::App* synth_cmd = app.add_subcommand("synth", "Generate synthetic scenes");
  synth_cmd->add_option("--category", category, "SC1 | SC2 | SC3 | negative");
  synth_cmd->add_option("--count", count, "Number of scenes");
  synth_cmd->add_option("--seed", seed, "Base seed");
  synth_cmd->add_option("--output", args.output, "Output directory")->required();
  synth_cmd->add_option("--config", args.config_path, "Pipeline config file");

  CLI::App* stats_cmd = app.add_subcommand("stats", "Summarize a record file");
  stats_cmd->add_option("--input", args.input, "Record file (JSON lines)")->required();

  CLI::App* render_cmd = app.add_subcommand("render", "Render one scenario record as SVG");
  render_cmd->add_option("--input", args.input, "Scene file")->required();
  render_cmd->add_option("--record", record_path, "Record file (JSON lines)")->required();
  render_cmd->add_option("--line", record_line, "1-based record line to render");
  render_cmd->add_option("--output", args.output, "SVG output path (default: stdout)");
  render_cmd->add_option("--config", args.config_path, "Pipeline config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (mine_cmd->parsed()) return run_mine(args);
    if (tag_cmd->parsed()) return run_tag(args);
    if (synth_cmd->parsed()) return run_synth(args, category, count, seed);
    if (stats_cmd->parsed()) return run_stats(args);
    if (render_cmd->parsed()) return run_render(args, record_path, record_line);
  } catch (const std::exception& e) {
    std::cerr << "scenario_miner: " << e.what() << "\n";
    return kExitSceneError;
  }
  return kExitConfigError;
}
