#ifndef SCENMINE_SYNTHGEN_HPP_
#define SCENMINE_SYNTHGEN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "scenmine/miner.hpp"
#include "scenmine/scene.hpp"

namespace scenmine {

struct SynthParams {
  double sample_period_s = 0.1;
  int frame_count = 91;
  // Parameters of the generation-time audit; the defaults match the mining
  // defaults so planted ground truth stays valid for the default pipeline.
  MinerConfig miner;
  // Background population (independent far-apart cruisers and map elements),
  // on top of the scripted actors of the scenario itself.
  int extra_actors = 0;
  int extra_elements = 0;
  int max_retries = 8;
};

struct GroundTruth {
  Scene scene;
  std::vector<ScenarioInstance> planted;
  std::vector<std::string> decoys;  // human-readable non-matching interactions
};

// Builds a scene that contains exactly one instance of the given category
// (SC1, SC2 or SC3) plus decoy actors that must not match anything. The
// planted window is whatever the exhaustive evaluator finds on the clean
// scene; generation fails rather than return unaudited ground truth.
GroundTruth generate_scene(const std::string& category_id, std::uint64_t seed,
                           const SynthParams& params = {});

// A scene with turns, passes and offset crossings that matches nothing in the
// built-in catalog; audited, with seed perturbation retries.
GroundTruth generate_negative_scene(std::uint64_t seed, const SynthParams& params = {});

// Marks interior frames invalid at gap_rate and adds Gaussian noise to
// vx/vy of valid frames. First and last valid frames stay valid.
Scene corrupt_scene(const Scene& scene, std::uint64_t seed, double gap_rate,
                    double noise_sigma);

// Scene file plus ground-truth sidecar (scenario-record lines).
void write_ground_truth(const GroundTruth& gt, const std::string& scene_path,
                        const std::string& sidecar_path);

}  // namespace scenmine

#endif  // SCENMINE_SYNTHGEN_HPP_
