#include "scenmine/scene.hpp"

#include <cmath>
#include <set>
#include <string>

#include "scenmine/errors.hpp"

namespace scenmine {

const char* to_string(ActorType t) {
  switch (t) {
    case ActorType::kVehicle: return "vehicle";
    case ActorType::kPedestrian: return "pedestrian";
    case ActorType::kCyclist: return "cyclist";
    case ActorType::kOther: return "other";
  }
  return "other";
}

std::optional<ActorType> actor_type_from_string(const std::string& s) {
  if (s == "vehicle") return ActorType::kVehicle;
  if (s == "pedestrian") return ActorType::kPedestrian;
  if (s == "cyclist") return ActorType::kCyclist;
  if (s == "other") return ActorType::kOther;
  return std::nullopt;
}

const char* to_string(MapElementKind k) {
  switch (k) {
    case MapElementKind::kCrosswalk: return "crosswalk";
    case MapElementKind::kLane: return "lane";
    case MapElementKind::kIntersection: return "intersection";
    case MapElementKind::kSpeedBump: return "speed_bump";
    case MapElementKind::kDriveway: return "driveway";
    case MapElementKind::kOther: return "other";
  }
  return "other";
}

std::optional<MapElementKind> element_kind_from_string(const std::string& s) {
  if (s == "crosswalk") return MapElementKind::kCrosswalk;
  if (s == "lane") return MapElementKind::kLane;
  if (s == "intersection") return MapElementKind::kIntersection;
  if (s == "speed_bump") return MapElementKind::kSpeedBump;
  if (s == "driveway") return MapElementKind::kDriveway;
  if (s == "other") return MapElementKind::kOther;
  return std::nullopt;
}

int ActorTrack::first_valid_frame() const {
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].valid) return static_cast<int>(k);
  }
  return -1;
}

int ActorTrack::last_valid_frame() const {
  for (std::size_t k = states.size(); k > 0; --k) {
    if (states[k - 1].valid) return static_cast<int>(k - 1);
  }
  return -1;
}

const ActorTrack* Scene::find_actor(const std::string& id) const {
  for (const ActorTrack& a : actors) {
    if (a.actor_id == id) return &a;
  }
  return nullptr;
}

const MapElement* Scene::find_element(const std::string& id) const {
  for (const MapElement& e : map_elements) {
    if (e.element_id == id) return &e;
  }
  return nullptr;
}

namespace {

Polygon buffer_polyline(const std::vector<Vec2>& pts, double width) {
  const double half = 0.5 * width;
  const std::size_t n = pts.size();

  // Unit direction of each segment; zero-length segments were rejected by the
  // caller.
  std::vector<Vec2> dirs(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Vec2 d = pts[i + 1] - pts[i];
    const double len = d.norm();
    dirs[i] = {d.x / len, d.y / len};
  }

  auto left_normal = [](const Vec2& d) { return Vec2{-d.y, d.x}; };

  // Offset points along one side; `sign` is +1 for the left side, -1 for the
  // right side.
  auto offset_side = [&](double sign) {
    std::vector<Vec2> side;
    side.push_back(pts.front() + left_normal(dirs.front()) * (sign * half));
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const Vec2 n0 = left_normal(dirs[i - 1]) * sign;
      const Vec2 n1 = left_normal(dirs[i]) * sign;
      const Vec2 bisector{n0.x + n1.x, n0.y + n1.y};
      const double b_len_sq = bisector.norm_sq();
      if (b_len_sq < 1e-18) {
        // 180 degree fold: bevel with the two plain offsets.
        side.push_back(pts[i] + n0 * half);
        side.push_back(pts[i] + n1 * half);
        continue;
      }
      // Miter point: offset along the bisector so both offset lines meet.
      const double cos_half = std::sqrt(std::max(0.0, 0.5 * (1.0 + n0.dot(n1))));
      const double miter_len = (cos_half > 1e-9) ? half / cos_half : kMiterLimitFactor * half + 1.0;
      if (miter_len <= kMiterLimitFactor * half) {
        const double inv = 1.0 / std::sqrt(b_len_sq);
        side.push_back(pts[i] + Vec2{bisector.x * inv, bisector.y * inv} * miter_len);
      } else {
        side.push_back(pts[i] + n0 * half);
        side.push_back(pts[i] + n1 * half);
      }
    }
    side.push_back(pts.back() + left_normal(dirs.back()) * (sign * half));
    return side;
  };

  const std::vector<Vec2> left = offset_side(+1.0);
  std::vector<Vec2> right = offset_side(-1.0);

  // Right side forward, left side backward: CCW ring with flat caps.
  Polygon out;
  out.vertices.reserve(left.size() + right.size());
  for (auto it = right.begin(); it != right.end(); ++it) out.vertices.push_back(*it);
  for (auto it = left.rbegin(); it != left.rend(); ++it) out.vertices.push_back(*it);
  if (!is_ccw(out)) out = reversed(out);
  return out;
}

}  // namespace

Polygon normalize_map_element(const SourceGeometry& raw) {
  if (!raw.is_polyline) {
    if (raw.points.size() < 3) {
      throw DegenerateGeometryError("polygon needs at least 3 vertices");
    }
    Polygon p{raw.points};
    if (std::abs(signed_area(p)) <= 0.0) {
      throw DegenerateGeometryError("polygon has zero area (collinear vertices)");
    }
    if (!is_ccw(p)) p = reversed(p);
    if (!polygon_is_simple(p)) {
      throw DegenerateGeometryError("polygon is self-intersecting");
    }
    return p;
  }

  if (raw.points.size() < 2) {
    throw DegenerateGeometryError("polyline needs at least 2 points");
  }
  if (raw.width_m <= 0.0) {
    throw DegenerateGeometryError("polyline width must be positive");
  }
  std::vector<Vec2> pts;
  pts.push_back(raw.points.front());
  for (std::size_t i = 1; i < raw.points.size(); ++i) {
    if ((raw.points[i] - pts.back()).norm_sq() > 1e-18) {
      pts.push_back(raw.points[i]);
    }
  }
  if (pts.size() < 2) {
    throw DegenerateGeometryError("polyline has zero length");
  }
  Polygon corridor = buffer_polyline(pts, raw.width_m);
  if (!polygon_is_simple(corridor)) {
    throw DegenerateGeometryError("buffered polyline self-intersects; simplify the polyline");
  }
  return corridor;
}

void validate_scene(const Scene& scene) {
  if (scene.sample_period_s <= 0.0) {
    throw ValidationError("scene '" + scene.scene_id + "': sample_period_s must be > 0");
  }
  if (scene.frame_count < 2) {
    throw ValidationError("scene '" + scene.scene_id + "': frame_count must be >= 2");
  }
  if (scene.actors.empty()) {
    throw EmptySceneError(scene.scene_id);
  }

  std::set<std::string> actor_ids;
  for (const ActorTrack& a : scene.actors) {
    const std::string where = "actor '" + a.actor_id + "'";
    if (!actor_ids.insert(a.actor_id).second) {
      throw ValidationError("duplicate actor_id '" + a.actor_id + "'");
    }
    if (a.length_m <= 0.0 || a.width_m <= 0.0) {
      throw ValidationError(where + ": length_m and width_m must be > 0");
    }
    if (static_cast<int>(a.states.size()) != scene.frame_count) {
      throw ValidationError(where + ": states has length " + std::to_string(a.states.size()) +
                            ", expected frame_count " + std::to_string(scene.frame_count));
    }
    if (a.first_valid_frame() < 0) {
      throw ValidationError(where + ": no valid state");
    }
    for (std::size_t k = 0; k < a.states.size(); ++k) {
      const ActorState& s = a.states[k];
      if (!s.valid) continue;
      const double fields[5] = {s.x, s.y, s.yaw, s.vx, s.vy};
      for (double f : fields) {
        if (!std::isfinite(f)) {
          throw ValidationError(where + ".states[" + std::to_string(k) + "]: non-finite value");
        }
      }
      if (s.yaw <= -M_PI - 1e-12 || s.yaw > M_PI + 1e-12) {
        throw ValidationError(where + ".states[" + std::to_string(k) +
                              "].yaw: outside (-pi, pi]");
      }
    }
  }

  std::set<std::string> element_ids;
  for (const MapElement& e : scene.map_elements) {
    if (!element_ids.insert(e.element_id).second) {
      throw ValidationError("duplicate element_id '" + e.element_id + "'");
    }
    const std::string where = "map_element '" + e.element_id + "'";
    if (e.polygon.vertices.size() < 3) {
      throw ValidationError(where + ": polygon has fewer than 3 vertices");
    }
    if (signed_area(e.polygon) <= 0.0) {
      throw ValidationError(where + ": polygon must be CCW with positive area");
    }
    if (!polygon_is_simple(e.polygon)) {
      throw ValidationError(where + ": polygon is self-intersecting");
    }
  }
}

}  // namespace scenmine
