#ifndef SCENMINE_INTERACTION_TAGGER_HPP_
#define SCENMINE_INTERACTION_TAGGER_HPP_

#include <vector>

#include "scenmine/ctrv_cache.hpp"
#include "scenmine/geometry.hpp"
#include "scenmine/preprocess.hpp"
#include "scenmine/tags.hpp"

namespace scenmine {

struct InteractionParams {
  double beta = 2.0;   // bounding-box expansion factor
  double t_p_s = 5.0;  // prediction horizon
  // Collision requires the two predicted boxes to overlap at the same
  // prediction step. The relaxed reading accepts overlap between any pair of
  // steps.
  bool time_aligned = true;
};

// Same center and yaw, length and width scaled by beta.
OrientedBox expanded_box(const OrientedBox& b, double beta);

bool tag_close_proximity(const ActorState& state_i, double length_i, double width_i,
                         const ActorState& state_j, double length_j, double width_j,
                         double beta);

// Predicted footprints at prediction steps 1..T_p/Ts (the current frame is
// not part of the sequence).
std::vector<OrientedBox> predict_boxes(const CtrvState& state, double length_m, double width_m,
                                       double t_p_s, double sample_period_s);

bool tag_estimated_collision(const PreprocessedTrack& track_i, double length_i, double width_i,
                             const PreprocessedTrack& track_j, double length_j, double width_j,
                             int frame, const InteractionParams& params,
                             double sample_period_s);

// Angle from the host heading to the guest heading, binned per quadrant with
// half-open upper-inclusive bounds.
RelativeHeadingTag relative_heading_tag(double psi_host, double psi_guest);

// Angle from the host heading to the host->guest center ray, same bins.
// Coincident centers yield not_valid.
BearingTag bearing_tag(const ActorState& host, const Vec2& guest_center);

struct FramePairTags {
  bool valid = false;
  bool close_proximity = false;
  bool estimated_collision = false;
  RelativeHeadingTag relative_heading = RelativeHeadingTag::kNotValid;
  BearingTag bearing = BearingTag::kNotValid;
};

// Full timeline for the ordered pair (host = i, guest = j).
std::vector<FramePairTags> tag_actor_pair(const PreprocessedTrack& track_i, double length_i,
                                          double width_i, const PreprocessedTrack& track_j,
                                          double length_j, double width_j,
                                          const InteractionParams& params,
                                          double sample_period_s);

// Both ordered views in one pass; the symmetric predicates are computed once.
// Rollout caches may be shared across pairs; pass nullptr to roll locally.
struct PairTagSeries {
  std::vector<FramePairTags> host_i;  // host = i, guest = j
  std::vector<FramePairTags> host_j;  // host = j, guest = i
};

PairTagSeries tag_actor_pair_both(const PreprocessedTrack& track_i, double length_i,
                                  double width_i, const PreprocessedTrack& track_j,
                                  double length_j, double width_j,
                                  const InteractionParams& params, double sample_period_s,
                                  CtrvBoxCache* rollout_i = nullptr,
                                  CtrvBoxCache* rollout_j = nullptr);

}  // namespace scenmine

#endif  // SCENMINE_INTERACTION_TAGGER_HPP_
