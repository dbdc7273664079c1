#ifndef SCENMINE_SCENE_IO_HPP_
#define SCENMINE_SCENE_IO_HPP_

#include <string>

#include "scenmine/scene.hpp"

namespace scenmine {

struct SceneParseOptions {
  // Applied to lane polylines that carry no width of their own; map data
  // with lane centers often omits it.
  double lane_width_default = 4.0;
};

// Parses one scene from interchange-format text, normalizes polyline map
// elements to corridor polygons, and validates every invariant.
// Throws SyntaxError, ValidationError, EmptySceneError, DegenerateGeometryError.
Scene parse_scene(const std::string& text, const SceneParseOptions& opts = {});

// Inverse of parse_scene up to float formatting: IDs and enums round-trip
// bit-exact, numeric fields to full double precision.
std::string serialize_scene(const Scene& scene);

Scene load_scene_file(const std::string& path, const SceneParseOptions& opts = {});
void save_scene_file(const Scene& scene, const std::string& path);

}  // namespace scenmine

#endif  // SCENMINE_SCENE_IO_HPP_
