#include "scenmine/scene_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scenmine/errors.hpp"

namespace scenmine {
namespace {

using Json = nlohmann::ordered_json;

double require_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SyntaxError(path + " must be a number");
  return j.get<double>();
}

std::string require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SyntaxError(path + " must be a string");
  return j.get<std::string>();
}

const Json& require_key(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw SyntaxError(path + " is missing key '" + key + "'");
  return *it;
}

std::vector<Vec2> parse_points(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SyntaxError(path + " must be an array of [x,y] pairs");
  std::vector<Vec2> pts;
  pts.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& pt = j[i];
    if (!pt.is_array() || pt.size() != 2) {
      throw SyntaxError(path + "[" + std::to_string(i) + "] must be an [x,y] pair");
    }
    pts.push_back({require_number(pt[0], path + ".x"), require_number(pt[1], path + ".y")});
  }
  return pts;
}

ActorTrack parse_actor(const Json& j, std::size_t index) {
  const std::string path = "actors[" + std::to_string(index) + "]";
  if (!j.is_object()) throw SyntaxError(path + " must be an object");

  ActorTrack a;
  a.actor_id = require_string(require_key(j, "actor_id", path), path + ".actor_id");
  const std::string type_name =
      require_string(require_key(j, "actor_type", path), path + ".actor_type");
  const auto type = actor_type_from_string(type_name);
  if (!type) throw SyntaxError(path + ".actor_type: unknown actor type '" + type_name + "'");
  a.actor_type = *type;
  a.length_m = require_number(require_key(j, "length_m", path), path + ".length_m");
  a.width_m = require_number(require_key(j, "width_m", path), path + ".width_m");

  const Json& states = require_key(j, "states", path);
  if (!states.is_array()) throw SyntaxError(path + ".states must be an array");
  a.states.reserve(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    const std::string spath = path + ".states[" + std::to_string(k) + "]";
    const Json& js = states[k];
    if (!js.is_object()) throw SyntaxError(spath + " must be an object");
    ActorState s;
    const Json& valid = require_key(js, "valid", spath);
    if (!valid.is_boolean()) throw SyntaxError(spath + ".valid must be a boolean");
    s.valid = valid.get<bool>();
    s.x = require_number(require_key(js, "x", spath), spath + ".x");
    s.y = require_number(require_key(js, "y", spath), spath + ".y");
    s.yaw = require_number(require_key(js, "yaw", spath), spath + ".yaw");
    s.vx = require_number(require_key(js, "vx", spath), spath + ".vx");
    s.vy = require_number(require_key(js, "vy", spath), spath + ".vy");
    a.states.push_back(s);
  }
  return a;
}

MapElement parse_element(const Json& j, std::size_t index, const SceneParseOptions& opts) {
  const std::string path = "map_elements[" + std::to_string(index) + "]";
  if (!j.is_object()) throw SyntaxError(path + " must be an object");

  MapElement e;
  e.element_id = require_string(require_key(j, "element_id", path), path + ".element_id");
  const std::string kind_name = require_string(require_key(j, "kind", path), path + ".kind");
  const auto kind = element_kind_from_string(kind_name);
  if (!kind) throw SyntaxError(path + ".kind: unknown element kind '" + kind_name + "'");
  e.kind = *kind;

  const bool has_polygon = j.contains("polygon");
  const bool has_polyline = j.contains("polyline");
  if (has_polygon == has_polyline) {
    throw SyntaxError(path + " must have exactly one of 'polygon' or 'polyline'");
  }
  if (has_polygon) {
    e.source_geometry.is_polyline = false;
    e.source_geometry.points = parse_points(j["polygon"], path + ".polygon");
  } else {
    e.source_geometry.is_polyline = true;
    e.source_geometry.points = parse_points(j["polyline"], path + ".polyline");
    if (j.contains("width_m")) {
      e.source_geometry.width_m = require_number(j["width_m"], path + ".width_m");
    } else {
      e.source_geometry.width_m = opts.lane_width_default;
    }
  }
  try {
    e.polygon = normalize_map_element(e.source_geometry);
  } catch (const DegenerateGeometryError& err) {
    throw ValidationError(path + " ('" + e.element_id + "'): " + err.what());
  }
  return e;
}

Json points_to_json(const std::vector<Vec2>& pts) {
  Json arr = Json::array();
  for (const Vec2& p : pts) arr.push_back(Json::array({p.x, p.y}));
  return arr;
}

}  // namespace

Scene parse_scene(const std::string& text, const SceneParseOptions& opts) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what());
  }
  if (!j.is_object()) throw SyntaxError("top level must be an object");

  Scene scene;
  scene.scene_id = require_string(require_key(j, "scene_id", "scene"), "scene_id");
  scene.sample_period_s =
      require_number(require_key(j, "sample_period_s", "scene"), "sample_period_s");
  const Json& fc = require_key(j, "frame_count", "scene");
  if (!fc.is_number_integer()) throw SyntaxError("frame_count must be an integer");
  scene.frame_count = fc.get<int>();

  const Json& actors = require_key(j, "actors", "scene");
  if (!actors.is_array()) throw SyntaxError("actors must be an array");
  scene.actors.reserve(actors.size());
  for (std::size_t i = 0; i < actors.size(); ++i) {
    scene.actors.push_back(parse_actor(actors[i], i));
  }

  if (j.contains("map_elements")) {
    const Json& elements = j["map_elements"];
    if (!elements.is_array()) throw SyntaxError("map_elements must be an array");
    scene.map_elements.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      scene.map_elements.push_back(parse_element(elements[i], i, opts));
    }
  }

  validate_scene(scene);
  return scene;
}

std::string serialize_scene(const Scene& scene) {
  Json j;
  j["scene_id"] = scene.scene_id;
  j["sample_period_s"] = scene.sample_period_s;
  j["frame_count"] = scene.frame_count;

  Json actors = Json::array();
  for (const ActorTrack& a : scene.actors) {
    Json ja;
    ja["actor_id"] = a.actor_id;
    ja["actor_type"] = to_string(a.actor_type);
    ja["length_m"] = a.length_m;
    ja["width_m"] = a.width_m;
    Json states = Json::array();
    for (const ActorState& s : a.states) {
      Json js;
      js["valid"] = s.valid;
      js["x"] = s.x;
      js["y"] = s.y;
      js["yaw"] = s.yaw;
      js["vx"] = s.vx;
      js["vy"] = s.vy;
      states.push_back(std::move(js));
    }
    ja["states"] = std::move(states);
    actors.push_back(std::move(ja));
  }
  j["actors"] = std::move(actors);

  Json elements = Json::array();
  for (const MapElement& e : scene.map_elements) {
    Json je;
    je["element_id"] = e.element_id;
    je["kind"] = to_string(e.kind);
    if (e.source_geometry.is_polyline) {
      je["polyline"] = points_to_json(e.source_geometry.points);
      je["width_m"] = e.source_geometry.width_m;
    } else {
      je["polygon"] = points_to_json(e.source_geometry.points);
    }
    elements.push_back(std::move(je));
  }
  j["map_elements"] = std::move(elements);

  return j.dump(2) + "\n";
}

Scene load_scene_file(const std::string& path, const SceneParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open scene file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str(), opts);
}

void save_scene_file(const Scene& scene, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SyntaxError("cannot open '" + path + "' for writing");
  out << serialize_scene(scene);
}

}  // namespace scenmine
