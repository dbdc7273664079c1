#include "scenmine/interaction_tagger.hpp"

#include <cmath>
#include <memory>

namespace scenmine {
namespace {

int angle_bin(double theta) {
  // 0: (-0.25pi, 0.25pi], 1: (0.25pi, 0.75pi], 2: (-0.75pi, -0.25pi], 3: rest
  if (theta > -0.25 * M_PI && theta <= 0.25 * M_PI) return 0;
  if (theta > 0.25 * M_PI && theta <= 0.75 * M_PI) return 1;
  if (theta > -0.75 * M_PI && theta <= -0.25 * M_PI) return 2;
  return 3;
}

bool same_step_overlap(const std::vector<OrientedBox>& a, const std::vector<OrientedBox>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const double reach = 0.5 * (std::hypot(a[k].length_m, a[k].width_m) +
                                std::hypot(b[k].length_m, b[k].width_m));
    if ((a[k].center - b[k].center).norm_sq() > reach * reach) continue;
    if (obb_intersect(a[k], b[k])) return true;
  }
  return false;
}

// A non-turning actor's prediction is a fixed box translating at constant
// velocity; its rollout never needs to materialize.
struct StraightMotion {
  Vec2 start;
  Vec2 velocity;
  OrientedBox box;  // center ignored, moved per step
};

// Prediction instants k_p = 1..T_p/Ts plus a fractional endpoint when the
// horizon is not a step multiple; matches the box sequence of swept_boxes.
struct PredictionGrid {
  int whole_steps;
  int count;
  double step_s;
  double horizon_s;

  PredictionGrid(double t_p_s, double ts)
      : whole_steps(static_cast<int>(std::floor(t_p_s / ts + 1e-9))),
        count(whole_steps + ((whole_steps * ts < t_p_s - 1e-9) ? 1 : 0)),
        step_s(ts),
        horizon_s(t_p_s) {}

  double time_at(int k) const { return k < whole_steps ? (k + 1) * step_s : horizon_s; }
};

bool same_step_overlap_mixed(const std::vector<OrientedBox>& curved,
                             const StraightMotion& straight, const PredictionGrid& grid) {
  const double r_straight = 0.5 * std::hypot(straight.box.length_m, straight.box.width_m);
  const int n = std::min(static_cast<int>(curved.size()), grid.count);
  for (int k = 0; k < n; ++k) {
    const Vec2 c = straight.start + straight.velocity * grid.time_at(k);
    const double reach = r_straight + 0.5 * std::hypot(curved[k].length_m, curved[k].width_m);
    if ((curved[k].center - c).norm_sq() > reach * reach) continue;
    OrientedBox b = straight.box;
    b.center = c;
    if (obb_intersect(curved[k], b)) return true;
  }
  return false;
}

bool same_step_overlap_straight(const StraightMotion& a, const StraightMotion& b,
                                const PredictionGrid& grid) {
  const double reach = 0.5 * std::hypot(a.box.length_m, a.box.width_m) +
                       0.5 * std::hypot(b.box.length_m, b.box.width_m);
  for (int k = 0; k < grid.count; ++k) {
    const double t = grid.time_at(k);
    const Vec2 ca = a.start + a.velocity * t;
    const Vec2 cb = b.start + b.velocity * t;
    if ((ca - cb).norm_sq() > reach * reach) continue;
    OrientedBox ba = a.box;
    ba.center = ca;
    OrientedBox bb = b.box;
    bb.center = cb;
    if (obb_intersect(ba, bb)) return true;
  }
  return false;
}

bool any_step_overlap(const std::vector<OrientedBox>& a, const std::vector<OrientedBox>& b) {
  for (const OrientedBox& ba : a) {
    const double ra = 0.5 * std::hypot(ba.length_m, ba.width_m);
    for (const OrientedBox& bb : b) {
      const double reach = ra + 0.5 * std::hypot(bb.length_m, bb.width_m);
      if ((ba.center - bb.center).norm_sq() > reach * reach) continue;
      if (obb_intersect(ba, bb)) return true;
    }
  }
  return false;
}

}  // namespace

OrientedBox expanded_box(const OrientedBox& b, double beta) {
  return OrientedBox{b.center, b.length_m * beta, b.width_m * beta, b.yaw};
}

bool tag_close_proximity(const ActorState& state_i, double length_i, double width_i,
                         const ActorState& state_j, double length_j, double width_j,
                         double beta) {
  const OrientedBox bi{{state_i.x, state_i.y}, length_i * beta, width_i * beta, state_i.yaw};
  const OrientedBox bj{{state_j.x, state_j.y}, length_j * beta, width_j * beta, state_j.yaw};
  return obb_intersect(bi, bj);
}

std::vector<OrientedBox> predict_boxes(const CtrvState& state, double length_m, double width_m,
                                       double t_p_s, double sample_period_s) {
  std::vector<OrientedBox> boxes =
      swept_boxes(state, OrientedBox{{}, length_m, width_m, 0.0}, t_p_s, sample_period_s);
  boxes.erase(boxes.begin());  // prediction starts at step 1
  return boxes;
}

bool tag_estimated_collision(const PreprocessedTrack& track_i, double length_i, double width_i,
                             const PreprocessedTrack& track_j, double length_j, double width_j,
                             int frame, const InteractionParams& params,
                             double sample_period_s) {
  if (!track_i.frame_valid(frame) || !track_j.frame_valid(frame)) return false;
  const ActorState& si = track_i.states_filled[frame];
  const ActorState& sj = track_j.states_filled[frame];

  const double half_diag_i = 0.5 * std::hypot(length_i, width_i);
  const double half_diag_j = 0.5 * std::hypot(length_j, width_j);
  const double travel = (std::abs(track_i.v_long[frame]) + std::abs(track_j.v_long[frame])) *
                        params.t_p_s;
  const double reach = travel + half_diag_i + half_diag_j;
  if ((Vec2{si.x, si.y} - Vec2{sj.x, sj.y}).norm_sq() > reach * reach) return false;

  const CtrvState seed_i{si.x, si.y, si.yaw, track_i.v_long[frame], track_i.yaw_rate[frame]};
  const CtrvState seed_j{sj.x, sj.y, sj.yaw, track_j.v_long[frame], track_j.yaw_rate[frame]};
  const std::vector<OrientedBox> bi =
      predict_boxes(seed_i, length_i, width_i, params.t_p_s, sample_period_s);
  const std::vector<OrientedBox> bj =
      predict_boxes(seed_j, length_j, width_j, params.t_p_s, sample_period_s);
  return params.time_aligned ? same_step_overlap(bi, bj) : any_step_overlap(bi, bj);
}

RelativeHeadingTag relative_heading_tag(double psi_host, double psi_guest) {
  switch (angle_bin(wrap_angle(psi_guest - psi_host))) {
    case 0: return RelativeHeadingTag::kSame;
    case 1: return RelativeHeadingTag::kLeft;
    case 2: return RelativeHeadingTag::kRight;
    default: return RelativeHeadingTag::kOpposite;
  }
}

BearingTag bearing_tag(const ActorState& host, const Vec2& guest_center) {
  const Vec2 d = guest_center - Vec2{host.x, host.y};
  if (d.norm_sq() < 1e-18) return BearingTag::kNotValid;
  switch (angle_bin(wrap_angle(std::atan2(d.y, d.x) - host.yaw))) {
    case 0: return BearingTag::kFront;
    case 1: return BearingTag::kLeft;
    case 2: return BearingTag::kRight;
    default: return BearingTag::kBack;
  }
}

PairTagSeries tag_actor_pair_both(const PreprocessedTrack& track_i, double length_i,
                                  double width_i, const PreprocessedTrack& track_j,
                                  double length_j, double width_j,
                                  const InteractionParams& params, double sample_period_s,
                                  CtrvBoxCache* rollout_i, CtrvBoxCache* rollout_j) {
  const int n = static_cast<int>(track_i.states_filled.size());
  PairTagSeries out;
  out.host_i.resize(n);
  out.host_j.resize(n);

  std::unique_ptr<CtrvBoxCache> own_i, own_j;
  if (!rollout_i) {
    own_i = std::make_unique<CtrvBoxCache>(&track_i, length_i, width_i, params.t_p_s,
                                           sample_period_s, /*include_start=*/false);
    rollout_i = own_i.get();
  }
  if (!rollout_j) {
    own_j = std::make_unique<CtrvBoxCache>(&track_j, length_j, width_j, params.t_p_s,
                                           sample_period_s, /*include_start=*/false);
    rollout_j = own_j.get();
  }

  const double half_diag_i = 0.5 * std::hypot(length_i, width_i);
  const double half_diag_j = 0.5 * std::hypot(length_j, width_j);

  for (int k = 0; k < n; ++k) {
    if (!track_i.frame_valid(k) || !track_j.frame_valid(k)) continue;
    const ActorState& si = track_i.states_filled[k];
    const ActorState& sj = track_j.states_filled[k];

    FramePairTags& ti = out.host_i[k];
    FramePairTags& tj = out.host_j[k];
    ti.valid = tj.valid = true;

    ti.relative_heading = relative_heading_tag(si.yaw, sj.yaw);
    tj.relative_heading = relative_heading_tag(sj.yaw, si.yaw);
    ti.bearing = bearing_tag(si, {sj.x, sj.y});
    tj.bearing = bearing_tag(sj, {si.x, si.y});

    const Vec2 gap = Vec2{si.x, si.y} - Vec2{sj.x, sj.y};
    const double dist_sq = gap.norm_sq();

    // Neither predicate can fire past this bound; skip all geometry.
    const double travel =
        (std::abs(track_i.v_long[k]) + std::abs(track_j.v_long[k])) * params.t_p_s;
    const double max_reach =
        std::max(params.beta * (half_diag_i + half_diag_j), travel + half_diag_i + half_diag_j);
    if (dist_sq > max_reach * max_reach) continue;

    bool close = false;
    const double prox_reach = params.beta * (half_diag_i + half_diag_j);
    if (dist_sq <= prox_reach * prox_reach) {
      close = tag_close_proximity(si, length_i, width_i, sj, length_j, width_j, params.beta);
    }

    bool collision = false;
    const double pred_reach = travel + half_diag_i + half_diag_j;
    if (dist_sq <= pred_reach * pred_reach) {
      const Vec2 vel_i{track_i.v_long[k] * track_i.heading_cos[k],
                       track_i.v_long[k] * track_i.heading_sin[k]};
      const Vec2 vel_j{track_j.v_long[k] * track_j.heading_cos[k],
                       track_j.v_long[k] * track_j.heading_sin[k]};

      bool possible = true;
      // Near-straight pairs admit a closed-form bound on the closest approach
      // of the predicted centers; no rollout when they can never meet. The
      // margin absorbs the curvature left below the omega cutoff.
      constexpr double kStraightOmega = 1e-3;
      constexpr double kCurvatureMargin = 0.5;
      if (std::abs(track_i.yaw_rate[k]) <= kStraightOmega &&
          std::abs(track_j.yaw_rate[k]) <= kStraightOmega) {
        const Vec2 w = vel_i - vel_j;
        double t_star = 0.0;
        if (w.norm_sq() > 0.0) {
          t_star = std::clamp(-gap.dot(w) / w.norm_sq(), 0.0, params.t_p_s);
        }
        const double closest = (gap + w * t_star).norm();
        possible = closest <= half_diag_i + half_diag_j + kCurvatureMargin;
      }
      if (possible && params.time_aligned) {
        // Below the CTRV straight-line cutoff the rollout is a translating
        // box; walk it analytically instead of materializing it.
        const bool straight_i = std::abs(track_i.yaw_rate[k]) <= kCtrvOmegaEps;
        const bool straight_j = std::abs(track_j.yaw_rate[k]) <= kCtrvOmegaEps;
        const PredictionGrid grid(params.t_p_s, sample_period_s);
        const StraightMotion motion_i{{si.x, si.y}, vel_i,
                                      OrientedBox{{}, length_i, width_i, si.yaw}};
        const StraightMotion motion_j{{sj.x, sj.y}, vel_j,
                                      OrientedBox{{}, length_j, width_j, sj.yaw}};
        if (straight_i && straight_j) {
          collision = same_step_overlap_straight(motion_i, motion_j, grid);
        } else if (straight_i) {
          collision = same_step_overlap_mixed(rollout_j->at(k), motion_i, grid);
        } else if (straight_j) {
          collision = same_step_overlap_mixed(rollout_i->at(k), motion_j, grid);
        } else {
          collision = same_step_overlap(rollout_i->at(k), rollout_j->at(k));
        }
      } else if (possible) {
        collision = any_step_overlap(rollout_i->at(k), rollout_j->at(k));
      }
    }

    ti.close_proximity = tj.close_proximity = close;
    ti.estimated_collision = tj.estimated_collision = collision;
  }
  return out;
}

std::vector<FramePairTags> tag_actor_pair(const PreprocessedTrack& track_i, double length_i,
                                          double width_i, const PreprocessedTrack& track_j,
                                          double length_j, double width_j,
                                          const InteractionParams& params,
                                          double sample_period_s) {
  return tag_actor_pair_both(track_i, length_i, width_i, track_j, length_j, width_j, params,
                             sample_period_s)
      .host_i;
}

}  // namespace scenmine
