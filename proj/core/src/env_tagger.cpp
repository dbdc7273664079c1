#include "scenmine/env_tagger.hpp"

#include <cmath>
#include <limits>
#include <memory>

#include "scenmine/errors.hpp"

namespace scenmine {

double actual_intersection_ratio(const OrientedBox& actor_box, const MapElement& element) {
  if (actor_box.length_m <= 0.0 || actor_box.width_m <= 0.0) {
    throw DegenerateGeometryError("actual_intersection_ratio: non-positive box extent");
  }
  const double box_area = actor_box.length_m * actor_box.width_m;
  const double overlap = box_polygon_intersection_area(actor_box, element.polygon);
  const double ratio = overlap / box_area;
  return std::min(1.0, std::max(0.0, ratio));
}

double extended_intersection_ratio(const MultiPolygon& extended, const MapElement& element) {
  const double ext_area = polygon_area(extended);
  if (ext_area <= 0.0) {
    throw DegenerateGeometryError("extended_intersection_ratio: extended polygon has no area");
  }
  const double overlap = intersection_area(extended, element.polygon);
  return std::min(1.0, std::max(0.0, overlap / ext_area));
}

std::vector<EnvInteractionTag> tag_actor_environment(const PreprocessedTrack& track,
                                                     double length_m, double width_m,
                                                     const MapElement& element,
                                                     const EnvParams& params,
                                                     double sample_period_s,
                                                     CtrvBoxCache* sweep_cache,
                                                     std::vector<EnvFrameTrace>* trace) {
  const int n = static_cast<int>(track.states_filled.size());
  std::vector<EnvInteractionTag> tags(n, EnvInteractionTag::kNotValid);

  std::unique_ptr<CtrvBoxCache> own_cache;
  if (!sweep_cache) {
    own_cache = std::make_unique<CtrvBoxCache>(&track, length_m, width_m, params.t_e_s,
                                               sample_period_s, /*include_start=*/true);
    sweep_cache = own_cache.get();
  }

  const Aabb elem_box = polygon_aabb(element.polygon);
  const double half_diag = 0.5 * std::hypot(length_m, width_m);

  // Pass 1: actual intersection ratio per valid frame.
  std::vector<double> phi_a(n, 0.0);
  for (int k = 0; k < n; ++k) {
    if (!track.frame_valid(k)) continue;
    const ActorState& s = track.states_filled[k];
    if (point_aabb_dist_sq({s.x, s.y}, elem_box) > half_diag * half_diag) continue;  // phi_a = 0
    phi_a[k] = actual_intersection_ratio(OrientedBox{{s.x, s.y}, length_m, width_m, s.yaw},
                                         element);
  }

  if (trace) trace->assign(n, EnvFrameTrace{0.0, std::numeric_limits<double>::quiet_NaN(), 0.0});

  // Pass 2: differences and the Table-of-rules decision per frame.
  for (int k = 0; k < n; ++k) {
    if (!track.frame_valid(k)) continue;

    double delta;
    if (k + 1 < n && track.frame_valid(k + 1)) {
      delta = phi_a[k + 1] - phi_a[k];
    } else if (k > 0 && track.frame_valid(k - 1)) {
      delta = phi_a[k] - phi_a[k - 1];  // final frame reuses the last difference
    } else {
      delta = 0.0;
    }

    EnvInteractionTag tag;
    double phi_e_traced = std::numeric_limits<double>::quiet_NaN();
    if (phi_a[k] > 0.0) {
      if (std::abs(delta) <= params.delta_threshold) {
        tag = EnvInteractionTag::kStaying;
      } else if (delta > params.delta_threshold) {
        tag = EnvInteractionTag::kEntering;
      } else {
        tag = EnvInteractionTag::kLeaving;
      }
    } else {
      // Within-horizon reachability check before any sweep is rolled.
      const ActorState& s = track.states_filled[k];
      const double reach = half_diag + std::abs(track.v_long[k]) * params.t_e_s;
      bool approaching = false;
      if (point_aabb_dist_sq({s.x, s.y}, elem_box) <= reach * reach) {
        // The union's area is not needed to decide the tag: the extended
        // ratio is positive iff some swept footprint overlaps the element.
        constexpr double kAreaEps = 1e-12;
        for (const OrientedBox& b : sweep_cache->at(k)) {
          if (point_aabb_dist_sq(b.center, elem_box) > half_diag * half_diag) continue;
          if (box_polygon_intersection_area(b, element.polygon) > kAreaEps) {
            approaching = true;
            break;
          }
        }
        if (trace && approaching) {
          const MultiPolygon extended = swept_polygon(
              sweep_cache->seed_state(k), OrientedBox{{}, length_m, width_m, 0.0}, params.t_e_s,
              sample_period_s);
          phi_e_traced = extended_intersection_ratio(extended, element);
        } else if (trace) {
          phi_e_traced = 0.0;
        }
      } else if (trace) {
        phi_e_traced = 0.0;
      }
      tag = approaching ? EnvInteractionTag::kApproaching : EnvInteractionTag::kNotRelative;
    }
    tags[k] = tag;
    if (trace) {
      (*trace)[k].phi_a = phi_a[k];
      (*trace)[k].phi_e = phi_e_traced;
      (*trace)[k].delta_phi_a = delta;
    }
  }
  return tags;
}

}  // namespace scenmine
