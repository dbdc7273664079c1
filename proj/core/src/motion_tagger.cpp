#include "scenmine/motion_tagger.hpp"

#include <algorithm>
#include <cmath>

namespace scenmine {
namespace {

// Frame classes before episode extraction.
enum class Band : unsigned char { kInvalid, kReversing, kStanding, kForward };

struct Episode {
  int dir = 0;  // +1 accelerating / turning left, -1 decelerating / turning right
  int start = 0;
  int end = 0;  // inclusive
};

}  // namespace

std::vector<LongitudinalTag> tag_longitudinal(const PreprocessedTrack& track, double l_actor,
                                              const MotionParams& params,
                                              double sample_period_s) {
  const int n = static_cast<int>(track.v_long.size());
  std::vector<LongitudinalTag> tags(n, LongitudinalTag::kNotValid);
  const double band = params.alpha * l_actor;

  std::vector<Band> cls(n, Band::kInvalid);
  for (int k = 0; k < n; ++k) {
    if (!track.frame_valid(k)) continue;
    const double v_ts = track.v_long[k] * sample_period_s;
    if (v_ts < -band) {
      cls[k] = Band::kReversing;
      tags[k] = LongitudinalTag::kReversing;
    } else if (std::abs(v_ts) <= band) {
      cls[k] = Band::kStanding;
      tags[k] = LongitudinalTag::kStandingStill;
    } else {
      cls[k] = Band::kForward;
      tags[k] = LongitudinalTag::kCruising;
    }
  }

  // Forward difference of the smoothed longitudinal velocity; frames without
  // a valid successor reuse the previous difference.
  std::vector<double> accel(n, 0.0);
  for (int k = 0; k < n; ++k) {
    if (!track.frame_valid(k)) continue;
    if (k + 1 < n && track.frame_valid(k + 1)) {
      accel[k] = (track.v_long[k + 1] - track.v_long[k]) / sample_period_s;
    } else if (k > 0 && track.frame_valid(k - 1)) {
      accel[k] = accel[k - 1];
    }
  }

  const int min_frames = std::max(1, static_cast<int>(std::ceil(
                                          params.min_activity_s / sample_period_s - 1e-9)));

  // Per maximal run of forward frames: threshold the acceleration, absorb
  // short sub-threshold gaps between same-sign stretches, then keep episodes
  // that last long enough.
  int run_start = 0;
  while (run_start < n) {
    if (cls[run_start] != Band::kForward) {
      ++run_start;
      continue;
    }
    int run_end = run_start;
    while (run_end + 1 < n && cls[run_end + 1] == Band::kForward) ++run_end;

    for (int dir : {+1, -1}) {
      std::vector<Episode> stretches;
      int k = run_start;
      while (k <= run_end) {
        const double a = accel[k] * dir;
        if (a > params.lambda_a) {
          int e = k;
          while (e + 1 <= run_end && accel[e + 1] * dir > params.lambda_a) ++e;
          stretches.push_back({dir, k, e});
          k = e + 1;
        } else {
          ++k;
        }
      }
      // Absorb gaps shorter than the min episode length, provided the gap
      // stays sub-threshold for the opposite sign too.
      std::vector<Episode> merged;
      for (const Episode& s : stretches) {
        if (!merged.empty()) {
          const int gap_start = merged.back().end + 1;
          const int gap_len = s.start - gap_start;
          bool absorb = gap_len < min_frames;
          for (int g = gap_start; absorb && g < s.start; ++g) {
            if (std::abs(accel[g]) > params.lambda_a) absorb = false;
          }
          if (absorb) {
            merged.back().end = s.end;
            continue;
          }
        }
        merged.push_back(s);
      }
      for (const Episode& ep : merged) {
        if (ep.end - ep.start + 1 < min_frames) continue;
        const LongitudinalTag tag =
            dir > 0 ? LongitudinalTag::kAccelerating : LongitudinalTag::kDecelerating;
        for (int f = ep.start; f <= ep.end; ++f) tags[f] = tag;
      }
    }
    run_start = run_end + 1;
  }
  return tags;
}

std::vector<LateralTag> tag_lateral(const PreprocessedTrack& track, const MotionParams& params,
                                    double sample_period_s) {
  const int n = static_cast<int>(track.yaw_rate.size());
  std::vector<LateralTag> tags(n, LateralTag::kNotValid);
  for (int k = 0; k < n; ++k) {
    if (track.frame_valid(k)) tags[k] = LateralTag::kGoingStraight;
  }

  const double duration = n * sample_period_s;
  const double lambda_omega = params.lambda_omega(duration);
  const auto& omega = track.yaw_rate;

  auto valid = [&](int k) { return track.frame_valid(k); };

  std::vector<Episode> episodes;
  int k = 0;
  while (k < n) {
    if (!valid(k)) {
      ++k;
      continue;
    }
    int dir = 0;
    if (omega[k] > lambda_omega) {
      dir = +1;
    } else if (omega[k] < -lambda_omega) {
      dir = -1;
    }
    if (dir == 0) {
      ++k;
      continue;
    }
    // Potential episode start; the end is the nearest frame back below the
    // threshold (or the last valid frame of the run).
    int end = k;
    while (end + 1 < n && valid(end + 1) && omega[end + 1] * dir >= lambda_omega) ++end;
    const bool ends_below_threshold = end + 1 < n && valid(end + 1);
    if (ends_below_threshold) ++end;  // include the sub-threshold end frame
    double heading_change = 0.0;
    for (int f = k; f <= end; ++f) heading_change += omega[f];
    heading_change *= sample_period_s;
    if (heading_change * dir > params.lambda_psi) {
      episodes.push_back({dir, k, end});
    }
    // The sub-threshold end frame may start an opposite-direction episode;
    // re-examine it. A run that ended at the series boundary cannot.
    k = ends_below_threshold ? std::max(end, k + 1) : end + 1;
  }

  // Same-direction episodes separated by a short sub-threshold dip merge.
  const int merge_frames =
      static_cast<int>(std::floor(params.turn_merge_gap_s / sample_period_s + 1e-9));
  std::vector<Episode> merged;
  for (const Episode& ep : episodes) {
    if (!merged.empty() && merged.back().dir == ep.dir && ep.start > merged.back().end &&
        ep.start - merged.back().end - 1 < merge_frames) {
      bool gap_subthreshold = true;
      for (int g = merged.back().end + 1; g < ep.start; ++g) {
        if (std::abs(omega[g]) > lambda_omega) gap_subthreshold = false;
      }
      if (gap_subthreshold) {
        merged.back().end = ep.end;
        continue;
      }
    }
    merged.push_back(ep);
  }

  int claimed_through = -1;
  for (const Episode& ep : merged) {
    const LateralTag tag = ep.dir > 0 ? LateralTag::kTurningLeft : LateralTag::kTurningRight;
    for (int f = std::max(ep.start, claimed_through + 1); f <= ep.end; ++f) {
      if (valid(f)) tags[f] = tag;
    }
    claimed_through = std::max(claimed_through, ep.end);
  }
  return tags;
}

}  // namespace scenmine
