#ifndef SCENMINE_ENV_TAGGER_HPP_
#define SCENMINE_ENV_TAGGER_HPP_

#include <vector>

#include "scenmine/ctrv_cache.hpp"
#include "scenmine/geometry.hpp"
#include "scenmine/preprocess.hpp"
#include "scenmine/scene.hpp"
#include "scenmine/tags.hpp"

namespace scenmine {

struct EnvParams {
  double t_e_s = 3.0;             // extended-trajectory horizon
  double delta_threshold = 0.01;  // staying band on the ratio difference
};

// Overlap of the actor footprint with the element, normalized by the
// footprint area. Always in [0, 1].
double actual_intersection_ratio(const OrientedBox& actor_box, const MapElement& element);

// Overlap of the extended trajectory polygon with the element, normalized by
// the polygon's own area.
double extended_intersection_ratio(const MultiPolygon& extended, const MapElement& element);

// Optional per-frame trace for CSV dumps. phi_e is only evaluated on frames
// where the rules consult it; elsewhere it is NaN.
struct EnvFrameTrace {
  double phi_a = 0.0;
  double phi_e = 0.0;
  double delta_phi_a = 0.0;
};

// One tag per frame for this (actor, element) pair. `sweep_cache` may be
// shared across elements; pass nullptr to let the call build its own.
// When `trace` is non-null the true extended ratio is computed for every
// consulted frame (slower; meant for debugging dumps).
std::vector<EnvInteractionTag> tag_actor_environment(const PreprocessedTrack& track,
                                                     double length_m, double width_m,
                                                     const MapElement& element,
                                                     const EnvParams& params,
                                                     double sample_period_s,
                                                     CtrvBoxCache* sweep_cache = nullptr,
                                                     std::vector<EnvFrameTrace>* trace = nullptr);

}  // namespace scenmine

#endif  // SCENMINE_ENV_TAGGER_HPP_
