#ifndef SCENMINE_PREPROCESS_HPP_
#define SCENMINE_PREPROCESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "scenmine/scene.hpp"

namespace scenmine {

struct PreprocessOptions {
  // When false the track passes through untouched: no gap filling, no
  // smoothing. Frames stay exactly as measured.
  bool enabled = true;
  // Assumed measurement noise of the longitudinal velocity; drives the
  // smoothing-spline penalty.
  double noise_sigma = 0.3;  // m/s
};

struct PreprocessedTrack {
  std::string actor_id;
  int first_valid = -1;
  int last_valid = -1;
  std::vector<ActorState> states_filled;
  std::vector<std::uint8_t> validity_mask;
  std::vector<double> yaw_rate;    // rad/s, wrapped difference over Ts
  std::vector<double> v_long_raw;  // m/s
  std::vector<double> v_long;      // m/s, smoothed
  // Heading unit vector per frame; taggers consume it on hot paths.
  std::vector<double> heading_cos;
  std::vector<double> heading_sin;

  bool frame_valid(int k) const {
    return k >= 0 && k < static_cast<int>(validity_mask.size()) && validity_mask[k] != 0;
  }
};

// Linear interpolation of x, y, vx, vy across interior gaps; yaw follows the
// shortest angular path. Frames before the first and after the last valid
// frame are left invalid.
void interpolate_gaps(const ActorTrack& track, std::vector<ActorState>* states_filled,
                      std::vector<std::uint8_t>* validity_mask);

// omega(k+1) = wrap(yaw(k+1) - yaw(k)) / Ts, computed wherever both frames
// are valid; the first valid frame repeats its successor's value.
std::vector<double> compute_yaw_rate(const std::vector<ActorState>& states, double sample_period_s);

// v_long(k) = cos(yaw) * vx + sin(yaw) * vy.
std::vector<double> compute_v_long(const std::vector<ActorState>& states);

// Smoothing-spline fit over the contiguous valid window [first_valid,
// last_valid]; frames outside are copied through.
std::vector<double> smooth_v_long(const std::vector<double>& v_long_raw, double sample_period_s,
                                  int first_valid, int last_valid, double noise_sigma);

PreprocessedTrack preprocess_track(const ActorTrack& track, double sample_period_s,
                                   const PreprocessOptions& opts = {});

}  // namespace scenmine

#endif  // SCENMINE_PREPROCESS_HPP_
