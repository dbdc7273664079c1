#ifndef SCENMINE_MOTION_TAGGER_HPP_
#define SCENMINE_MOTION_TAGGER_HPP_

#include <cmath>
#include <vector>

#include "scenmine/preprocess.hpp"
#include "scenmine/tags.hpp"

namespace scenmine {

struct MotionParams {
  double alpha = 0.01;              // standstill/reversing band factor
  double lambda_psi = M_PI / 4.0;   // total heading change for a turn, rad
  double t_d_s = 0.0;               // longest turn duration; 0 = scene duration
  double lambda_a = 0.2;            // accel/decel threshold, m/s^2
  double min_activity_s = 0.5;      // shortest accel/decel episode
  double turn_merge_gap_s = 0.3;    // sub-threshold dips shorter than this merge

  double lambda_omega(double scene_duration_s) const {
    const double td = t_d_s > 0.0 ? t_d_s : scene_duration_s;
    return lambda_psi / td;
  }
};

// Per-frame longitudinal activity. Precedence: not_valid, then reversing
// (v*Ts < -alpha*l), then standing_still (|v|*Ts <= alpha*l), then
// accelerating/decelerating episodes on the smoothed acceleration with
// min-duration and gap-absorbing hysteresis, else cruising.
std::vector<LongitudinalTag> tag_longitudinal(const PreprocessedTrack& track, double l_actor,
                                              const MotionParams& params,
                                              double sample_period_s);

// Per-frame lateral activity. A frame with yaw rate above lambda_omega stages
// a potential turn; the episode runs to the first frame back below the
// threshold and is kept when the accumulated heading change exceeds
// lambda_psi. Right turns mirror with flipped signs.
std::vector<LateralTag> tag_lateral(const PreprocessedTrack& track, const MotionParams& params,
                                    double sample_period_s);

}  // namespace scenmine

#endif  // SCENMINE_MOTION_TAGGER_HPP_
