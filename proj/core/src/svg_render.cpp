#include "scenmine/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "scenmine/errors.hpp"
#include "scenmine/geometry.hpp"

namespace scenmine {
namespace {

struct Bounds {
  double min_x = std::numeric_limits<double>::max();
  double min_y = std::numeric_limits<double>::max();
  double max_x = std::numeric_limits<double>::lowest();
  double max_y = std::numeric_limits<double>::lowest();

  void add(double x, double y) {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

class Canvas {
 public:
  Canvas(const Bounds& b, double scale) : b_(b), scale_(scale) {}

  double x(double wx) const { return (wx - b_.min_x) * scale_ + kPad; }
  double y(double wy) const { return (b_.max_y - wy) * scale_ + kPad; }  // y grows upward
  double width() const { return (b_.max_x - b_.min_x) * scale_ + 2 * kPad; }
  double height() const { return (b_.max_y - b_.min_y) * scale_ + 2 * kPad; }

  static constexpr double kPad = 24.0;

 private:
  Bounds b_;
  double scale_;
};

void polygon_path(std::ostringstream& out, const Canvas& c, const Polygon& poly,
                  const std::string& cls) {
  out << "  <polygon class=\"" << cls << "\" points=\"";
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    if (i) out << " ";
    out << fmt(c.x(poly.vertices[i].x)) << "," << fmt(c.y(poly.vertices[i].y));
  }
  out << "\"/>\n";
}

void trajectory_path(std::ostringstream& out, const Canvas& c, const ActorTrack& actor,
                     int start, int end, const std::string& cls) {
  out << "  <polyline class=\"" << cls << "\" points=\"";
  bool first = true;
  for (int k = start; k <= end; ++k) {
    const ActorState& s = actor.states[k];
    if (!s.valid) continue;
    if (!first) out << " ";
    out << fmt(c.x(s.x)) << "," << fmt(c.y(s.y));
    first = false;
  }
  out << "\"/>\n";
}

}  // namespace

std::string render_scenario_svg(const Scene& scene, const ScenarioInstance& instance) {
  if (instance.scene_id != scene.scene_id) {
    throw UnknownSceneError(instance.scene_id);
  }
  const ActorTrack* host = scene.find_actor(instance.host_actor_id);
  if (!host) throw UnknownActorError(instance.host_actor_id);
  const ActorTrack* guest = scene.find_actor(instance.guest_actor_id);
  if (!guest) throw UnknownActorError(instance.guest_actor_id);

  const int last_frame = scene.frame_count - 1;
  const int start = std::clamp(instance.start_frame, 0, last_frame);
  const int end = std::clamp(instance.end_frame, 0, last_frame);

  Bounds bounds;
  for (const MapElement& e : scene.map_elements) {
    for (const Vec2& v : e.polygon.vertices) bounds.add(v.x, v.y);
  }
  for (const ActorTrack* actor : {host, guest}) {
    for (int k = start; k <= end; ++k) {
      if (actor->states[k].valid) bounds.add(actor->states[k].x, actor->states[k].y);
    }
  }
  if (bounds.min_x > bounds.max_x) bounds.add(0.0, 0.0);
  bounds.add(bounds.min_x - 5.0, bounds.min_y - 5.0);
  bounds.add(bounds.max_x + 5.0, bounds.max_y + 5.0);

  const double extent = std::max(bounds.max_x - bounds.min_x, bounds.max_y - bounds.min_y);
  const double scale = extent > 0.0 ? 640.0 / extent : 1.0;
  const Canvas canvas(bounds, scale);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(canvas.width())
      << "\" height=\"" << fmt(canvas.height() + 40.0) << "\">\n";
  out << "  <style>\n"
         "    .map-lane { fill: #dddddd; stroke: #999999; stroke-width: 1; }\n"
         "    .map-crosswalk { fill: #f3e2b3; stroke: #b89b52; stroke-width: 1; }\n"
         "    .map-other { fill: #e8e8e8; stroke: #aaaaaa; stroke-width: 1; }\n"
         "    .traj-decoy { fill: none; stroke: #bbbbbb; stroke-width: 1; }\n"
         "    .traj-host { fill: none; stroke: #1f77b4; stroke-width: 2.5; }\n"
         "    .traj-guest { fill: none; stroke: #d62728; stroke-width: 2.5; }\n"
         "    .box-host { fill: none; stroke: #1f77b4; stroke-width: 1.5; }\n"
         "    .box-guest { fill: none; stroke: #d62728; stroke-width: 1.5; }\n"
         "    .legend { font: 13px monospace; fill: #222222; }\n"
         "  </style>\n";

  for (const MapElement& e : scene.map_elements) {
    std::string cls = "map-other";
    if (e.kind == MapElementKind::kLane) cls = "map-lane";
    if (e.kind == MapElementKind::kCrosswalk) cls = "map-crosswalk";
    polygon_path(out, canvas, e.polygon, cls);
  }

  for (const ActorTrack& actor : scene.actors) {
    if (actor.actor_id == host->actor_id || actor.actor_id == guest->actor_id) continue;
    trajectory_path(out, canvas, actor, 0, last_frame, "traj-decoy");
  }

  trajectory_path(out, canvas, *host, start, end, "traj-host");
  trajectory_path(out, canvas, *guest, start, end, "traj-guest");

  for (const auto& [actor, cls] :
       {std::pair<const ActorTrack*, const char*>{host, "box-host"},
        std::pair<const ActorTrack*, const char*>{guest, "box-guest"}}) {
    for (int k : {start, end}) {
      const ActorState& s = actor->states[k];
      if (!s.valid) continue;
      polygon_path(out, canvas,
                   box_polygon(OrientedBox{{s.x, s.y}, actor->length_m, actor->width_m, s.yaw}),
                   cls);
    }
  }

  out << "  <text class=\"legend\" x=\"10\" y=\"" << fmt(canvas.height() + 16.0) << "\">"
      << instance.category_id << " " << scene.scene_id << " host=" << host->actor_id
      << " guest=" << guest->actor_id << " frames=[" << start << "," << end << "]</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace scenmine
