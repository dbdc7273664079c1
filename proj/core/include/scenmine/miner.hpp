#ifndef SCENMINE_MINER_HPP_
#define SCENMINE_MINER_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scenmine/catalog.hpp"
#include "scenmine/env_tagger.hpp"
#include "scenmine/interaction_tagger.hpp"
#include "scenmine/motion_tagger.hpp"
#include "scenmine/preprocess.hpp"
#include "scenmine/scene.hpp"

namespace scenmine {

struct ScenarioInstance {
  std::string category_id;
  std::string scene_id;
  std::string host_actor_id;
  std::string guest_actor_id;
  int start_frame = 0;
  int end_frame = 0;  // inclusive
  double start_time_s = 0.0;
  double end_time_s = 0.0;
  std::optional<std::string> element_id;

  bool operator==(const ScenarioInstance&) const = default;
};

// Stable output order: category, host, guest, start frame (scene first when
// instances of several scenes are merged).
bool instance_less(const ScenarioInstance& a, const ScenarioInstance& b);

struct MinerConfig {
  PreprocessOptions preprocess;
  MotionParams motion;
  EnvParams env;
  InteractionParams interaction;
};

// Every tag timeline of one scene, computed once and shared by all category
// matchers.
struct SceneTags {
  const Scene* scene = nullptr;
  double sample_period_s = 0.1;
  std::vector<PreprocessedTrack> tracks;
  std::vector<std::vector<LongitudinalTag>> longitudinal;        // [actor][frame]
  std::vector<std::vector<LateralTag>> lateral;                  // [actor][frame]
  std::vector<std::vector<std::vector<EnvInteractionTag>>> env;  // [actor][element][frame]
  std::vector<PairTagSeries> pairs;                              // i<j, row-major

  int actor_count() const { return static_cast<int>(tracks.size()); }
  int pair_slot(int i, int j) const;  // requires i < j
  // Ordered view: tags with `host` as the host actor.
  const FramePairTags& pair_tags(int host, int guest, int frame) const;
};

SceneTags compute_scene_tags(const Scene& scene, const MinerConfig& config);

std::vector<ScenarioInstance> match_category(const SceneTags& tags,
                                             const ScenarioCategory& category);

// preprocess -> three taggers -> match every category; deterministic order.
std::vector<ScenarioInstance> mine(const Scene& scene,
                                   const std::vector<ScenarioCategory>& catalog,
                                   const MinerConfig& config);

using ActorTypeLookup =
    std::function<std::optional<ActorType>(const std::string& scene_id,
                                           const std::string& actor_id)>;

struct Summary {
  std::size_t total = 0;
  std::map<std::string, std::size_t> category_counts;
  std::map<std::string, double> category_proportions;  // empty when total == 0
  std::map<std::string, std::size_t> per_scene_counts;
  std::map<std::string, std::size_t> host_type_counts;
  std::map<std::string, std::size_t> guest_type_counts;
};

// Actor-type histograms need scene data; without a lookup they land under
// "unknown".
Summary summarize(const std::vector<ScenarioInstance>& instances,
                  const ActorTypeLookup& type_lookup = nullptr);

std::string summary_to_text(const Summary& summary);

}  // namespace scenmine

#endif  // SCENMINE_MINER_HPP_
