#ifndef SCENMINE_SCENE_HPP_
#define SCENMINE_SCENE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "scenmine/geometry.hpp"

namespace scenmine {

enum class ActorType { kVehicle, kPedestrian, kCyclist, kOther };

const char* to_string(ActorType t);
std::optional<ActorType> actor_type_from_string(const std::string& s);

enum class MapElementKind { kCrosswalk, kLane, kIntersection, kSpeedBump, kDriveway, kOther };

const char* to_string(MapElementKind k);
std::optional<MapElementKind> element_kind_from_string(const std::string& s);

struct ActorState {
  bool valid = false;
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;  // radians, in (-pi, pi]
  double vx = 0.0;
  double vy = 0.0;
};

struct ActorTrack {
  std::string actor_id;
  ActorType actor_type = ActorType::kOther;
  double length_m = 0.0;
  double width_m = 0.0;
  std::vector<ActorState> states;  // one per frame

  int first_valid_frame() const;
  int last_valid_frame() const;
};

// Raw geometry as found in the input file, kept so scenes round-trip.
struct SourceGeometry {
  bool is_polyline = false;
  std::vector<Vec2> points;
  double width_m = 0.0;  // only meaningful for polylines
};

struct MapElement {
  std::string element_id;
  MapElementKind kind = MapElementKind::kOther;
  Polygon polygon;  // normalized, CCW, simple
  SourceGeometry source_geometry;
};

struct Scene {
  std::string scene_id;
  double sample_period_s = 0.1;
  int frame_count = 0;
  std::vector<ActorTrack> actors;
  std::vector<MapElement> map_elements;

  double duration_s() const { return frame_count * sample_period_s; }
  const ActorTrack* find_actor(const std::string& id) const;
  const MapElement* find_element(const std::string& id) const;
};

// Polyline corridors get miter joins up to this multiple of the half-width,
// beveled beyond it.
inline constexpr double kMiterLimitFactor = 4.0;

// Polygon input: CCW-reordered copy. Polyline input: corridor of the given
// width centered on the line, miter joins, flat caps.
Polygon normalize_map_element(const SourceGeometry& raw);

// Throws ValidationError / EmptySceneError when an invariant fails; the
// message names the offending actor or element.
void validate_scene(const Scene& scene);

}  // namespace scenmine

#endif  // SCENMINE_SCENE_HPP_
