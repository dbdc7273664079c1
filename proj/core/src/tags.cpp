#include "scenmine/tags.hpp"

namespace scenmine {

const char* to_string(LongitudinalTag t) {
  switch (t) {
    case LongitudinalTag::kAccelerating: return "accelerating";
    case LongitudinalTag::kDecelerating: return "decelerating";
    case LongitudinalTag::kCruising: return "cruising";
    case LongitudinalTag::kStandingStill: return "standing_still";
    case LongitudinalTag::kReversing: return "reversing";
    case LongitudinalTag::kNotValid: return "not_valid";
  }
  return "not_valid";
}

const char* to_string(LateralTag t) {
  switch (t) {
    case LateralTag::kTurningLeft: return "turning_left";
    case LateralTag::kTurningRight: return "turning_right";
    case LateralTag::kGoingStraight: return "going_straight";
    case LateralTag::kNotValid: return "not_valid";
  }
  return "not_valid";
}

const char* to_string(EnvInteractionTag t) {
  switch (t) {
    case EnvInteractionTag::kNotRelative: return "not_relative";
    case EnvInteractionTag::kApproaching: return "approaching";
    case EnvInteractionTag::kEntering: return "entering";
    case EnvInteractionTag::kStaying: return "staying";
    case EnvInteractionTag::kLeaving: return "leaving";
    case EnvInteractionTag::kNotValid: return "not_valid";
  }
  return "not_valid";
}

const char* to_string(RelativeHeadingTag t) {
  switch (t) {
    case RelativeHeadingTag::kSame: return "same";
    case RelativeHeadingTag::kLeft: return "left";
    case RelativeHeadingTag::kRight: return "right";
    case RelativeHeadingTag::kOpposite: return "opposite";
    case RelativeHeadingTag::kNotValid: return "not_valid";
  }
  return "not_valid";
}

const char* to_string(BearingTag t) {
  switch (t) {
    case BearingTag::kFront: return "front";
    case BearingTag::kLeft: return "left";
    case BearingTag::kRight: return "right";
    case BearingTag::kBack: return "back";
    case BearingTag::kNotValid: return "not_valid";
  }
  return "not_valid";
}

std::optional<LongitudinalTag> longitudinal_tag_from_string(const std::string& s) {
  if (s == "accelerating") return LongitudinalTag::kAccelerating;
  if (s == "decelerating") return LongitudinalTag::kDecelerating;
  if (s == "cruising") return LongitudinalTag::kCruising;
  if (s == "standing_still") return LongitudinalTag::kStandingStill;
  if (s == "reversing") return LongitudinalTag::kReversing;
  if (s == "not_valid") return LongitudinalTag::kNotValid;
  return std::nullopt;
}

std::optional<LateralTag> lateral_tag_from_string(const std::string& s) {
  if (s == "turning_left") return LateralTag::kTurningLeft;
  if (s == "turning_right") return LateralTag::kTurningRight;
  if (s == "going_straight") return LateralTag::kGoingStraight;
  if (s == "not_valid") return LateralTag::kNotValid;
  return std::nullopt;
}

std::optional<EnvInteractionTag> env_tag_from_string(const std::string& s) {
  if (s == "not_relative") return EnvInteractionTag::kNotRelative;
  if (s == "approaching") return EnvInteractionTag::kApproaching;
  if (s == "entering") return EnvInteractionTag::kEntering;
  if (s == "staying") return EnvInteractionTag::kStaying;
  if (s == "leaving") return EnvInteractionTag::kLeaving;
  if (s == "not_valid") return EnvInteractionTag::kNotValid;
  return std::nullopt;
}

std::optional<RelativeHeadingTag> heading_tag_from_string(const std::string& s) {
  if (s == "same") return RelativeHeadingTag::kSame;
  if (s == "left") return RelativeHeadingTag::kLeft;
  if (s == "right") return RelativeHeadingTag::kRight;
  if (s == "opposite") return RelativeHeadingTag::kOpposite;
  if (s == "not_valid") return RelativeHeadingTag::kNotValid;
  return std::nullopt;
}

std::optional<BearingTag> bearing_tag_from_string(const std::string& s) {
  if (s == "front") return BearingTag::kFront;
  if (s == "left") return BearingTag::kLeft;
  if (s == "right") return BearingTag::kRight;
  if (s == "back") return BearingTag::kBack;
  if (s == "not_valid") return BearingTag::kNotValid;
  return std::nullopt;
}

bool intervals_partition_frames(const std::vector<TagInterval>& intervals, int frame_count) {
  int expected_start = 0;
  for (const TagInterval& iv : intervals) {
    if (iv.start_frame != expected_start) return false;
    if (iv.end_frame < iv.start_frame) return false;
    expected_start = iv.end_frame + 1;
  }
  return expected_start == frame_count;
}

}  // namespace scenmine
