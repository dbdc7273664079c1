#include "scenmine/miner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "scenmine/ctrv_cache.hpp"

namespace scenmine {

bool instance_less(const ScenarioInstance& a, const ScenarioInstance& b) {
  return std::tie(a.scene_id, a.category_id, a.host_actor_id, a.guest_actor_id, a.start_frame,
                  a.end_frame) < std::tie(b.scene_id, b.category_id, b.host_actor_id,
                                          b.guest_actor_id, b.start_frame, b.end_frame);
}

int SceneTags::pair_slot(int i, int j) const {
  const int n = actor_count();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

const FramePairTags& SceneTags::pair_tags(int host, int guest, int frame) const {
  if (host < guest) {
    return pairs[pair_slot(host, guest)].host_i[frame];
  }
  return pairs[pair_slot(guest, host)].host_j[frame];
}

SceneTags compute_scene_tags(const Scene& scene, const MinerConfig& config) {
  SceneTags tags;
  tags.scene = &scene;
  tags.sample_period_s = scene.sample_period_s;

  const int n_actors = static_cast<int>(scene.actors.size());
  const int n_elements = static_cast<int>(scene.map_elements.size());

  MotionParams motion = config.motion;
  if (motion.t_d_s <= 0.0) motion.t_d_s = scene.duration_s();

  tags.tracks.reserve(n_actors);
  for (const ActorTrack& actor : scene.actors) {
    tags.tracks.push_back(preprocess_track(actor, scene.sample_period_s, config.preprocess));
  }

  tags.longitudinal.resize(n_actors);
  tags.lateral.resize(n_actors);
  tags.env.resize(n_actors);
  std::vector<CtrvBoxCache> sweep_caches;
  std::vector<CtrvBoxCache> rollout_caches;
  sweep_caches.reserve(n_actors);
  rollout_caches.reserve(n_actors);

  for (int i = 0; i < n_actors; ++i) {
    const ActorTrack& actor = scene.actors[i];
    tags.longitudinal[i] =
        tag_longitudinal(tags.tracks[i], actor.length_m, motion, scene.sample_period_s);
    tags.lateral[i] = tag_lateral(tags.tracks[i], motion, scene.sample_period_s);
    sweep_caches.emplace_back(&tags.tracks[i], actor.length_m, actor.width_m, config.env.t_e_s,
                              scene.sample_period_s, /*include_start=*/true);
    rollout_caches.emplace_back(&tags.tracks[i], actor.length_m, actor.width_m,
                                config.interaction.t_p_s, scene.sample_period_s,
                                /*include_start=*/false);

    tags.env[i].resize(n_elements);
    for (int e = 0; e < n_elements; ++e) {
      tags.env[i][e] =
          tag_actor_environment(tags.tracks[i], actor.length_m, actor.width_m,
                                scene.map_elements[e], config.env, scene.sample_period_s,
                                &sweep_caches[i]);
    }
  }

  tags.pairs.resize(static_cast<std::size_t>(n_actors) * (n_actors - 1) / 2);
  for (int i = 0; i < n_actors; ++i) {
    for (int j = i + 1; j < n_actors; ++j) {
      tags.pairs[tags.pair_slot(i, j)] = tag_actor_pair_both(
          tags.tracks[i], scene.actors[i].length_m, scene.actors[i].width_m, tags.tracks[j],
          scene.actors[j].length_m, scene.actors[j].width_m, config.interaction,
          scene.sample_period_s, &rollout_caches[i], &rollout_caches[j]);
    }
  }
  return tags;
}

namespace {

bool type_allowed(const std::optional<std::set<ActorType>>& allowed, ActorType t) {
  return !allowed || allowed->count(t) > 0;
}

// Environment clause of one role: some element of an allowed kind carries an
// allowed tag at this frame.
bool env_clause_holds(const SceneTags& tags, int actor, const EnvConstraint& ec, int frame) {
  const auto& elements = tags.scene->map_elements;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    if (ec.element_kinds.count(elements[e].kind) == 0) continue;
    if (ec.tags.count(tags.env[actor][e][frame]) > 0) return true;
  }
  return false;
}

// Smallest element id satisfying the shared-element clause at this frame;
// nullopt when none does.
std::optional<int> shared_element_witness(const SceneTags& tags, int host, int guest,
                                          const SharedElementConstraint& sc, int frame) {
  const auto& elements = tags.scene->map_elements;
  std::optional<int> best;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    if (elements[e].kind != sc.kind) continue;
    if (sc.host_tags.count(tags.env[host][e][frame]) == 0) continue;
    if (sc.guest_tags.count(tags.env[guest][e][frame]) == 0) continue;
    const int idx = static_cast<int>(e);
    if (!best || elements[idx].element_id < elements[*best].element_id) best = idx;
  }
  return best;
}

bool role_clauses_hold(const SceneTags& tags, int actor, const RoleConstraint& rc, int frame) {
  if (rc.longitudinal && rc.longitudinal->count(tags.longitudinal[actor][frame]) == 0) {
    return false;
  }
  if (rc.lateral && rc.lateral->count(tags.lateral[actor][frame]) == 0) return false;
  if (rc.env_interaction && !env_clause_holds(tags, actor, *rc.env_interaction, frame)) {
    return false;
  }
  return true;
}

bool pair_clauses_hold(const SceneTags& tags, int host, int guest, const PairConstraint& pc,
                       int frame) {
  const FramePairTags& pt = tags.pair_tags(host, guest, frame);
  if (pc.interaction) {
    if (!pt.valid) return false;
    bool any = false;
    for (PairInteractionFlag f : *pc.interaction) {
      if (f == PairInteractionFlag::kCloseProximity && pt.close_proximity) any = true;
      if (f == PairInteractionFlag::kEstimatedCollision && pt.estimated_collision) any = true;
    }
    if (!any) return false;
  }
  if (pc.bearing && pc.bearing->count(pt.bearing) == 0) return false;
  if (pc.relative_heading && pc.relative_heading->count(pt.relative_heading) == 0) return false;
  return true;
}

}  // namespace

std::vector<ScenarioInstance> match_category(const SceneTags& tags,
                                             const ScenarioCategory& category) {
  std::vector<ScenarioInstance> instances;
  const int n_actors = tags.actor_count();
  const int n_frames = tags.scene->frame_count;
  const double ts = tags.sample_period_s;

  std::vector<char> conj(n_frames);
  for (int h = 0; h < n_actors; ++h) {
    if (!type_allowed(category.host.actor_type, tags.scene->actors[h].actor_type)) continue;
    for (int g = 0; g < n_actors; ++g) {
      if (g == h) continue;
      if (!type_allowed(category.guest.actor_type, tags.scene->actors[g].actor_type)) continue;

      for (int k = 0; k < n_frames; ++k) {
        bool ok = role_clauses_hold(tags, h, category.host, k) &&
                  role_clauses_hold(tags, g, category.guest, k) &&
                  pair_clauses_hold(tags, h, g, category.pair, k);
        if (ok && category.shared_element) {
          ok = shared_element_witness(tags, h, g, *category.shared_element, k).has_value();
        }
        conj[k] = ok ? 1 : 0;
      }

      for (int k = 0; k < n_frames;) {
        if (!conj[k]) {
          ++k;
          continue;
        }
        int end = k;
        while (end + 1 < n_frames && conj[end + 1]) ++end;
        const double duration = (end - k + 1) * ts;
        if (duration + 1e-12 >= category.min_duration_s) {
          ScenarioInstance inst;
          inst.category_id = category.category_id;
          inst.scene_id = tags.scene->scene_id;
          inst.host_actor_id = tags.scene->actors[h].actor_id;
          inst.guest_actor_id = tags.scene->actors[g].actor_id;
          inst.start_frame = k;
          inst.end_frame = end;
          inst.start_time_s = k * ts;
          inst.end_time_s = end * ts;
          if (category.shared_element) {
            const auto witness =
                shared_element_witness(tags, h, g, *category.shared_element, k);
            if (witness) inst.element_id = tags.scene->map_elements[*witness].element_id;
          }
          instances.push_back(std::move(inst));
        }
        k = end + 1;
      }
    }
  }

  // A category whose host and guest constraints coincide finds every episode
  // twice, once per role assignment; keep the lexicographically smaller one.
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

std::vector<ScenarioInstance> mine(const Scene& scene,
                                   const std::vector<ScenarioCategory>& catalog,
                                   const MinerConfig& config) {
  std::vector<ScenarioInstance> out;
  if (catalog.empty()) return out;
  const SceneTags tags = compute_scene_tags(scene, config);
  for (const ScenarioCategory& category : catalog) {
    std::vector<ScenarioInstance> found = match_category(tags, category);
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end(), instance_less);
  return out;
}

Summary summarize(const std::vector<ScenarioInstance>& instances,
                  const ActorTypeLookup& type_lookup) {
  Summary s;
  s.total = instances.size();
  for (const ScenarioInstance& inst : instances) {
    ++s.category_counts[inst.category_id];
    ++s.per_scene_counts[inst.scene_id];
    std::string host_type = "unknown";
    std::string guest_type = "unknown";
    if (type_lookup) {
      if (const auto t = type_lookup(inst.scene_id, inst.host_actor_id)) {
        host_type = to_string(*t);
      }
      if (const auto t = type_lookup(inst.scene_id, inst.guest_actor_id)) {
        guest_type = to_string(*t);
      }
    }
    ++s.host_type_counts[host_type];
    ++s.guest_type_counts[guest_type];
  }
  if (s.total > 0) {
    for (const auto& [id, count] : s.category_counts) {
      s.category_proportions[id] =
          static_cast<double>(count) / static_cast<double>(s.total);
    }
  }
  return s;
}

std::string summary_to_text(const Summary& summary) {
  std::ostringstream out;
  out << "instances: " << summary.total << "\n";
  for (const auto& [id, count] : summary.category_counts) {
    out << "  " << id << ": " << count;
    const auto it = summary.category_proportions.find(id);
    if (it != summary.category_proportions.end()) {
      out << " (" << 100.0 * it->second << "%)";
    }
    out << "\n";
  }
  out << "scenes with instances: " << summary.per_scene_counts.size() << "\n";
  out << "host types:";
  for (const auto& [type, count] : summary.host_type_counts) {
    out << " " << type << "=" << count;
  }
  out << "\nguest types:";
  for (const auto& [type, count] : summary.guest_type_counts) {
    out << " " << type << "=" << count;
  }
  out << "\n";
  return out.str();
}

}  // namespace scenmine
