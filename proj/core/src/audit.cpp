#include "scenmine/audit.hpp"

#include <algorithm>
#include <optional>

#include "scenmine/tags.hpp"

namespace scenmine {
namespace {

// Interval-list view of a dense tag series; lookups scan the list, making the
// audit path independent of the miner's frame arrays.
class IntervalSeries {
 public:
  template <typename Tag>
  explicit IntervalSeries(const std::vector<Tag>& frames)
      : intervals_(intervals_from_frames(frames)) {}

  int at(int frame) const {
    for (const TagInterval& iv : intervals_) {
      if (frame >= iv.start_frame && frame <= iv.end_frame) return iv.tag;
    }
    return -1;
  }

 private:
  std::vector<TagInterval> intervals_;
};

struct PairView {
  IntervalSeries valid;
  IntervalSeries close;
  IntervalSeries collision;
  IntervalSeries heading;
  IntervalSeries bearing;
};

PairView make_pair_view(const std::vector<FramePairTags>& series) {
  const std::size_t n = series.size();
  std::vector<unsigned char> valid(n), close(n), collision(n), heading(n), bearing(n);
  for (std::size_t k = 0; k < n; ++k) {
    valid[k] = series[k].valid ? 1 : 0;
    close[k] = series[k].close_proximity ? 1 : 0;
    collision[k] = series[k].estimated_collision ? 1 : 0;
    heading[k] = static_cast<unsigned char>(series[k].relative_heading);
    bearing[k] = static_cast<unsigned char>(series[k].bearing);
  }
  return PairView{IntervalSeries(valid), IntervalSeries(close), IntervalSeries(collision),
                  IntervalSeries(heading), IntervalSeries(bearing)};
}

struct RoleView {
  IntervalSeries longitudinal;
  IntervalSeries lateral;
  std::vector<IntervalSeries> env;  // per element
};

bool role_ok(const RoleView& view, const RoleConstraint& rc, const Scene& scene, int frame) {
  if (rc.longitudinal &&
      rc.longitudinal->count(static_cast<LongitudinalTag>(view.longitudinal.at(frame))) == 0) {
    return false;
  }
  if (rc.lateral && rc.lateral->count(static_cast<LateralTag>(view.lateral.at(frame))) == 0) {
    return false;
  }
  if (rc.env_interaction) {
    bool any = false;
    for (std::size_t e = 0; e < scene.map_elements.size() && !any; ++e) {
      if (rc.env_interaction->element_kinds.count(scene.map_elements[e].kind) == 0) continue;
      any = rc.env_interaction->tags.count(
                static_cast<EnvInteractionTag>(view.env[e].at(frame))) > 0;
    }
    if (!any) return false;
  }
  return true;
}

std::optional<int> shared_witness(const RoleView& host, const RoleView& guest,
                                  const SharedElementConstraint& sc, const Scene& scene,
                                  int frame) {
  std::optional<int> best;
  for (std::size_t e = 0; e < scene.map_elements.size(); ++e) {
    if (scene.map_elements[e].kind != sc.kind) continue;
    if (sc.host_tags.count(static_cast<EnvInteractionTag>(host.env[e].at(frame))) == 0) continue;
    if (sc.guest_tags.count(static_cast<EnvInteractionTag>(guest.env[e].at(frame))) == 0) {
      continue;
    }
    const int idx = static_cast<int>(e);
    if (!best || scene.map_elements[idx].element_id < scene.map_elements[*best].element_id) {
      best = idx;
    }
  }
  return best;
}

}  // namespace

std::vector<ScenarioInstance> brute_force_match(const SceneTags& tags,
                                                const ScenarioCategory& category) {
  const Scene& scene = *tags.scene;
  const int n_actors = tags.actor_count();
  const int n_frames = scene.frame_count;
  const double ts = tags.sample_period_s;

  std::vector<RoleView> roles;
  roles.reserve(n_actors);
  for (int a = 0; a < n_actors; ++a) {
    RoleView view{IntervalSeries(tags.longitudinal[a]), IntervalSeries(tags.lateral[a]), {}};
    view.env.reserve(scene.map_elements.size());
    for (std::size_t e = 0; e < scene.map_elements.size(); ++e) {
      view.env.emplace_back(tags.env[a][e]);
    }
    roles.push_back(std::move(view));
  }

  std::vector<ScenarioInstance> instances;
  for (int h = 0; h < n_actors; ++h) {
    if (category.host.actor_type &&
        category.host.actor_type->count(scene.actors[h].actor_type) == 0) {
      continue;
    }
    for (int g = 0; g < n_actors; ++g) {
      if (g == h) continue;
      if (category.guest.actor_type &&
          category.guest.actor_type->count(scene.actors[g].actor_type) == 0) {
        continue;
      }

      PairView pair = make_pair_view([&] {
        std::vector<FramePairTags> ordered(n_frames);
        for (int k = 0; k < n_frames; ++k) ordered[k] = tags.pair_tags(h, g, k);
        return ordered;
      }());

      std::vector<char> conj(n_frames, 0);
      for (int k = 0; k < n_frames; ++k) {
        bool ok = role_ok(roles[h], category.host, scene, k) &&
                  role_ok(roles[g], category.guest, scene, k);
        if (ok && category.pair.interaction) {
          if (pair.valid.at(k) == 0) {
            ok = false;
          } else {
            bool any = false;
            for (PairInteractionFlag f : *category.pair.interaction) {
              if (f == PairInteractionFlag::kCloseProximity && pair.close.at(k)) any = true;
              if (f == PairInteractionFlag::kEstimatedCollision && pair.collision.at(k)) {
                any = true;
              }
            }
            ok = any;
          }
        }
        if (ok && category.pair.bearing &&
            category.pair.bearing->count(static_cast<BearingTag>(pair.bearing.at(k))) == 0) {
          ok = false;
        }
        if (ok && category.pair.relative_heading &&
            category.pair.relative_heading->count(
                static_cast<RelativeHeadingTag>(pair.heading.at(k))) == 0) {
          ok = false;
        }
        if (ok && category.shared_element) {
          ok = shared_witness(roles[h], roles[g], *category.shared_element, scene, k)
                   .has_value();
        }
        conj[k] = ok ? 1 : 0;
      }

      std::vector<int> prefix(n_frames + 1, 0);
      for (int k = 0; k < n_frames; ++k) prefix[k + 1] = prefix[k] + conj[k];

      // Every window, tested for full coverage and maximality.
      for (int s = 0; s < n_frames; ++s) {
        for (int e = s; e < n_frames; ++e) {
          if (prefix[e + 1] - prefix[s] != e - s + 1) continue;
          if (s > 0 && conj[s - 1]) continue;
          if (e + 1 < n_frames && conj[e + 1]) continue;
          if ((e - s + 1) * ts + 1e-12 < category.min_duration_s) continue;
          ScenarioInstance inst;
          inst.category_id = category.category_id;
          inst.scene_id = scene.scene_id;
          inst.host_actor_id = scene.actors[h].actor_id;
          inst.guest_actor_id = scene.actors[g].actor_id;
          inst.start_frame = s;
          inst.end_frame = e;
          inst.start_time_s = s * ts;
          inst.end_time_s = e * ts;
          if (category.shared_element) {
            const auto witness =
                shared_witness(roles[h], roles[g], *category.shared_element, scene, s);
            if (witness) inst.element_id = scene.map_elements[*witness].element_id;
          }
          instances.push_back(std::move(inst));
        }
      }
    }
  }

  if (category.host == category.guest) {
    std::vector<ScenarioInstance> deduped;
    for (const ScenarioInstance& inst : instances) {
      bool mirror_kept = false;
      for (const ScenarioInstance& other : instances) {
        if (other.host_actor_id == inst.guest_actor_id &&
            other.guest_actor_id == inst.host_actor_id &&
            other.start_frame == inst.start_frame && other.end_frame == inst.end_frame &&
            other.host_actor_id < inst.host_actor_id) {
          mirror_kept = true;
          break;
        }
      }
      if (!mirror_kept) deduped.push_back(inst);
    }
    instances.swap(deduped);
  }

  std::sort(instances.begin(), instances.end(), instance_less);
  return instances;
}

std::vector<ScenarioInstance> brute_force_mine(const Scene& scene,
                                               const std::vector<ScenarioCategory>& catalog,
                                               const MinerConfig& config) {
  std::vector<ScenarioInstance> out;
  if (catalog.empty()) return out;
  const SceneTags tags = compute_scene_tags(scene, config);
  for (const ScenarioCategory& category : catalog) {
    std::vector<ScenarioInstance> found = brute_force_match(tags, category);
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end(), instance_less);
  return out;
}

}  // namespace scenmine
