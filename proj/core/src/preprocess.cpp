#include "scenmine/preprocess.hpp"

#include <cmath>

#include "scenmine/geometry.hpp"
#include "scenmine/smoothing_spline.hpp"

namespace scenmine {

void interpolate_gaps(const ActorTrack& track, std::vector<ActorState>* states_filled,
                      std::vector<std::uint8_t>* validity_mask) {
  const int n = static_cast<int>(track.states.size());
  *states_filled = track.states;
  validity_mask->assign(n, 0);

  const int first = track.first_valid_frame();
  const int last = track.last_valid_frame();
  if (first < 0) return;

  for (int k = first; k <= last; ++k) (*validity_mask)[k] = 1;

  int prev = first;
  for (int k = first + 1; k <= last; ++k) {
    if (!track.states[k].valid) continue;
    if (k > prev + 1) {
      const ActorState& a = track.states[prev];
      const ActorState& b = track.states[k];
      const double dyaw = wrap_angle(b.yaw - a.yaw);
      for (int g = prev + 1; g < k; ++g) {
        const double t = static_cast<double>(g - prev) / static_cast<double>(k - prev);
        ActorState& s = (*states_filled)[g];
        s.valid = true;
        s.x = a.x + (b.x - a.x) * t;
        s.y = a.y + (b.y - a.y) * t;
        s.vx = a.vx + (b.vx - a.vx) * t;
        s.vy = a.vy + (b.vy - a.vy) * t;
        s.yaw = wrap_angle(a.yaw + dyaw * t);
      }
    }
    prev = k;
  }
}

std::vector<double> compute_yaw_rate(const std::vector<ActorState>& states,
                                     double sample_period_s) {
  const int n = static_cast<int>(states.size());
  std::vector<double> omega(n, 0.0);
  int first_computed = -1;
  for (int k = 0; k + 1 < n; ++k) {
    if (!states[k].valid || !states[k + 1].valid) continue;
    omega[k + 1] = wrap_angle(states[k + 1].yaw - states[k].yaw) / sample_period_s;
    if (first_computed < 0) first_computed = k + 1;
  }
  // Extend to the first valid frame so the series covers the whole window.
  if (first_computed > 0 && states[first_computed - 1].valid) {
    omega[first_computed - 1] = omega[first_computed];
  }
  return omega;
}

std::vector<double> compute_v_long(const std::vector<ActorState>& states) {
  std::vector<double> v(states.size(), 0.0);
  for (std::size_t k = 0; k < states.size(); ++k) {
    const ActorState& s = states[k];
    if (!s.valid) continue;
    v[k] = std::cos(s.yaw) * s.vx + std::sin(s.yaw) * s.vy;
  }
  return v;
}

std::vector<double> smooth_v_long(const std::vector<double>& v_long_raw, double sample_period_s,
                                  int first_valid, int last_valid, double noise_sigma) {
  std::vector<double> out = v_long_raw;
  if (first_valid < 0 || last_valid <= first_valid) return out;
  const std::vector<double> window(v_long_raw.begin() + first_valid,
                                   v_long_raw.begin() + last_valid + 1);
  const std::vector<double> smoothed = smooth_series(window, sample_period_s, noise_sigma);
  for (std::size_t i = 0; i < smoothed.size(); ++i) {
    out[first_valid + static_cast<int>(i)] = smoothed[i];
  }
  return out;
}

PreprocessedTrack preprocess_track(const ActorTrack& track, double sample_period_s,
                                   const PreprocessOptions& opts) {
  PreprocessedTrack out;
  out.actor_id = track.actor_id;
  out.first_valid = track.first_valid_frame();
  out.last_valid = track.last_valid_frame();

  if (opts.enabled) {
    interpolate_gaps(track, &out.states_filled, &out.validity_mask);
  } else {
    out.states_filled = track.states;
    out.validity_mask.assign(track.states.size(), 0);
    for (std::size_t k = 0; k < track.states.size(); ++k) {
      out.validity_mask[k] = track.states[k].valid ? 1 : 0;
    }
  }

  out.yaw_rate = compute_yaw_rate(out.states_filled, sample_period_s);
  out.v_long_raw = compute_v_long(out.states_filled);
  if (opts.enabled) {
    out.v_long = smooth_v_long(out.v_long_raw, sample_period_s, out.first_valid, out.last_valid,
                               opts.noise_sigma);
  } else {
    out.v_long = out.v_long_raw;
  }

  out.heading_cos.resize(out.states_filled.size(), 1.0);
  out.heading_sin.resize(out.states_filled.size(), 0.0);
  for (std::size_t k = 0; k < out.states_filled.size(); ++k) {
    if (!out.states_filled[k].valid) continue;
    out.heading_cos[k] = std::cos(out.states_filled[k].yaw);
    out.heading_sin[k] = std::sin(out.states_filled[k].yaw);
  }
  return out;
}

}  // namespace scenmine
