#ifndef SCENMINE_CTRV_CACHE_HPP_
#define SCENMINE_CTRV_CACHE_HPP_

#include <cstdint>
#include <vector>

#include "scenmine/geometry.hpp"
#include "scenmine/preprocess.hpp"

namespace scenmine {

// Lazily rolled CTRV box sequences, one per frame of a track. Built once per
// actor and shared read-only wherever the same horizon is needed (all map
// elements of a scene, all pair partners).
class CtrvBoxCache {
 public:
  CtrvBoxCache(const PreprocessedTrack* track, double length_m, double width_m,
               double horizon_s, double step_s, bool include_start)
      : track_(track),
        length_m_(length_m),
        width_m_(width_m),
        horizon_s_(horizon_s),
        step_s_(step_s),
        include_start_(include_start),
        boxes_(track->states_filled.size()),
        computed_(track->states_filled.size(), 0) {}

  CtrvState seed_state(int frame) const {
    const ActorState& s = track_->states_filled[frame];
    return CtrvState{s.x, s.y, s.yaw, track_->v_long[frame], track_->yaw_rate[frame]};
  }

  const std::vector<OrientedBox>& at(int frame) {
    if (!computed_[frame]) {
      std::vector<OrientedBox> seq =
          swept_boxes(seed_state(frame), OrientedBox{{}, length_m_, width_m_, 0.0}, horizon_s_,
                      step_s_);
      if (!include_start_) seq.erase(seq.begin());
      boxes_[frame] = std::move(seq);
      computed_[frame] = 1;
    }
    return boxes_[frame];
  }

  double length_m() const { return length_m_; }
  double width_m() const { return width_m_; }

 private:
  const PreprocessedTrack* track_;
  double length_m_;
  double width_m_;
  double horizon_s_;
  double step_s_;
  bool include_start_;
  std::vector<std::vector<OrientedBox>> boxes_;
  std::vector<std::uint8_t> computed_;
};

}  // namespace scenmine

#endif  // SCENMINE_CTRV_CACHE_HPP_
