#ifndef SCENMINE_TAGS_HPP_
#define SCENMINE_TAGS_HPP_

#include <optional>
#include <string>
#include <vector>

namespace scenmine {

enum class LongitudinalTag : unsigned char {
  kAccelerating,
  kDecelerating,
  kCruising,
  kStandingStill,
  kReversing,
  kNotValid,
};

enum class LateralTag : unsigned char {
  kTurningLeft,
  kTurningRight,
  kGoingStraight,
  kNotValid,
};

enum class EnvInteractionTag : unsigned char {
  kNotRelative,
  kApproaching,
  kEntering,
  kStaying,
  kLeaving,
  kNotValid,
};

// Pairwise interaction flags; close proximity and estimated collision are
// independent, an empty set renders as "not_relative".
enum class PairInteractionFlag : unsigned char {
  kCloseProximity = 1,
  kEstimatedCollision = 2,
};

enum class RelativeHeadingTag : unsigned char {
  kSame,
  kLeft,
  kRight,
  kOpposite,
  kNotValid,
};

enum class BearingTag : unsigned char {
  kFront,
  kLeft,
  kRight,
  kBack,
  kNotValid,
};

const char* to_string(LongitudinalTag t);
const char* to_string(LateralTag t);
const char* to_string(EnvInteractionTag t);
const char* to_string(RelativeHeadingTag t);
const char* to_string(BearingTag t);

std::optional<LongitudinalTag> longitudinal_tag_from_string(const std::string& s);
std::optional<LateralTag> lateral_tag_from_string(const std::string& s);
std::optional<EnvInteractionTag> env_tag_from_string(const std::string& s);
std::optional<RelativeHeadingTag> heading_tag_from_string(const std::string& s);
std::optional<BearingTag> bearing_tag_from_string(const std::string& s);

// Inclusive frame interval carrying one tag value (stored as the enum's
// underlying integer so one type serves every tag class).
struct TagInterval {
  int tag = 0;
  int start_frame = 0;
  int end_frame = 0;  // inclusive
};

// Run-length encodes a per-frame tag series into sorted, non-overlapping
// intervals that jointly cover 0..K-1.
template <typename Tag>
std::vector<TagInterval> intervals_from_frames(const std::vector<Tag>& frames) {
  std::vector<TagInterval> out;
  const int n = static_cast<int>(frames.size());
  int start = 0;
  for (int k = 1; k <= n; ++k) {
    if (k == n || frames[k] != frames[start]) {
      out.push_back({static_cast<int>(frames[start]), start, k - 1});
      start = k;
    }
  }
  return out;
}

// Checks the TagInterval invariants: sorted, disjoint, covering 0..K-1.
bool intervals_partition_frames(const std::vector<TagInterval>& intervals, int frame_count);

}  // namespace scenmine

#endif  // SCENMINE_TAGS_HPP_
