#include "scenmine/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scenmine/errors.hpp"

namespace scenmine {
namespace {

using Json = nlohmann::json;

template <typename Tag, typename Parser>
std::set<Tag> parse_tag_set(const Json& j, const std::string& path, Parser parse) {
  if (!j.is_array()) throw SyntaxError(path + " must be an array of tag names");
  if (j.empty()) throw SyntaxError(path + " must not be empty (omit the key for a wildcard)");
  std::set<Tag> out;
  for (const Json& item : j) {
    if (!item.is_string()) throw SyntaxError(path + " entries must be strings");
    const auto tag = parse(item.get<std::string>());
    if (!tag) throw UnknownTagError(item.get<std::string>());
    out.insert(*tag);
  }
  return out;
}

std::optional<PairInteractionFlag> interaction_flag_from_string(const std::string& s) {
  if (s == "close_proximity") return PairInteractionFlag::kCloseProximity;
  if (s == "estimated_collision") return PairInteractionFlag::kEstimatedCollision;
  return std::nullopt;
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> known,
                         const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw SyntaxError(path + ": unknown key '" + it.key() + "'");
  }
}

RoleConstraint parse_role(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SyntaxError(path + " must be an object");
  reject_unknown_keys(j, {"actor_type", "longitudinal", "lateral", "env_interaction"}, path);
  RoleConstraint rc;
  if (j.contains("actor_type")) {
    rc.actor_type =
        parse_tag_set<ActorType>(j["actor_type"], path + ".actor_type", actor_type_from_string);
  }
  if (j.contains("longitudinal")) {
    rc.longitudinal = parse_tag_set<LongitudinalTag>(j["longitudinal"], path + ".longitudinal",
                                                     longitudinal_tag_from_string);
  }
  if (j.contains("lateral")) {
    rc.lateral =
        parse_tag_set<LateralTag>(j["lateral"], path + ".lateral", lateral_tag_from_string);
  }
  if (j.contains("env_interaction")) {
    const Json& je = j["env_interaction"];
    if (!je.is_object()) throw SyntaxError(path + ".env_interaction must be an object");
    reject_unknown_keys(je, {"element_kinds", "tags"}, path + ".env_interaction");
    EnvConstraint ec;
    if (!je.contains("element_kinds") || !je.contains("tags")) {
      throw SyntaxError(path + ".env_interaction needs 'element_kinds' and 'tags'");
    }
    ec.element_kinds = parse_tag_set<MapElementKind>(
        je["element_kinds"], path + ".env_interaction.element_kinds", element_kind_from_string);
    ec.tags = parse_tag_set<EnvInteractionTag>(je["tags"], path + ".env_interaction.tags",
                                               env_tag_from_string);
    rc.env_interaction = std::move(ec);
  }
  return rc;
}

PairConstraint parse_pair(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SyntaxError(path + " must be an object");
  reject_unknown_keys(j, {"interaction", "bearing", "relative_heading"}, path);
  PairConstraint pc;
  if (j.contains("interaction")) {
    pc.interaction = parse_tag_set<PairInteractionFlag>(j["interaction"], path + ".interaction",
                                                        interaction_flag_from_string);
  }
  if (j.contains("bearing")) {
    pc.bearing =
        parse_tag_set<BearingTag>(j["bearing"], path + ".bearing", bearing_tag_from_string);
  }
  if (j.contains("relative_heading")) {
    pc.relative_heading = parse_tag_set<RelativeHeadingTag>(
        j["relative_heading"], path + ".relative_heading", heading_tag_from_string);
  }
  return pc;
}

ScenarioCategory parse_category(const Json& j, std::size_t index) {
  const std::string path = "categories[" + std::to_string(index) + "]";
  if (!j.is_object()) throw SyntaxError(path + " must be an object");
  reject_unknown_keys(j, {"category_id", "host", "guest", "pair", "shared_element",
                          "min_duration_s"},
                      path);

  ScenarioCategory cat;
  if (!j.contains("category_id") || !j["category_id"].is_string()) {
    throw SyntaxError(path + ".category_id must be a string");
  }
  cat.category_id = j["category_id"].get<std::string>();
  if (j.contains("host")) cat.host = parse_role(j["host"], path + ".host");
  if (j.contains("guest")) cat.guest = parse_role(j["guest"], path + ".guest");
  if (j.contains("pair")) cat.pair = parse_pair(j["pair"], path + ".pair");
  if (j.contains("shared_element")) {
    const Json& js = j["shared_element"];
    if (!js.is_object()) throw SyntaxError(path + ".shared_element must be an object");
    reject_unknown_keys(js, {"kind", "host_tags", "guest_tags"}, path + ".shared_element");
    SharedElementConstraint sc;
    if (!js.contains("kind") || !js["kind"].is_string()) {
      throw SyntaxError(path + ".shared_element.kind must be a string");
    }
    const auto kind = element_kind_from_string(js["kind"].get<std::string>());
    if (!kind) throw UnknownTagError(js["kind"].get<std::string>());
    sc.kind = *kind;
    if (!js.contains("host_tags") || !js.contains("guest_tags")) {
      throw SyntaxError(path + ".shared_element needs 'host_tags' and 'guest_tags'");
    }
    sc.host_tags = parse_tag_set<EnvInteractionTag>(
        js["host_tags"], path + ".shared_element.host_tags", env_tag_from_string);
    sc.guest_tags = parse_tag_set<EnvInteractionTag>(
        js["guest_tags"], path + ".shared_element.guest_tags", env_tag_from_string);
    cat.shared_element = std::move(sc);
  }
  if (j.contains("min_duration_s")) {
    if (!j["min_duration_s"].is_number()) {
      throw SyntaxError(path + ".min_duration_s must be a number");
    }
    cat.min_duration_s = j["min_duration_s"].get<double>();
    if (cat.min_duration_s < 0.0) throw SyntaxError(path + ".min_duration_s must be >= 0");
  }
  return cat;
}

}  // namespace

std::vector<ScenarioCategory> load_catalog(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what());
  }
  std::vector<ScenarioCategory> catalog;
  if (j.is_object()) {
    catalog.push_back(parse_category(j, 0));
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      catalog.push_back(parse_category(j[i], i));
    }
  } else {
    throw SyntaxError("catalog must be a JSON array of categories");
  }
  std::set<std::string> ids;
  for (const ScenarioCategory& cat : catalog) {
    if (!ids.insert(cat.category_id).second) {
      throw DuplicateCategoryIdError(cat.category_id);
    }
  }
  return catalog;
}

std::vector<ScenarioCategory> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open catalog file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog(buf.str());
}

const std::string& builtin_catalog_json() {
  static const std::string kJson = R"JSON([
  {
    "category_id": "SC1",
    "host": {
      "actor_type": ["vehicle"],
      "lateral": ["turning_left"]
    },
    "guest": {
      "actor_type": ["vehicle"],
      "lateral": ["going_straight"]
    },
    "pair": {
      "interaction": ["estimated_collision"],
      "relative_heading": ["opposite"]
    }
  },
  {
    "category_id": "SC2",
    "host": {
      "actor_type": ["vehicle"],
      "longitudinal": ["accelerating", "decelerating", "cruising"],
      "lateral": ["going_straight"]
    },
    "guest": {
      "actor_type": ["cyclist"],
      "longitudinal": ["accelerating", "decelerating", "cruising"],
      "lateral": ["going_straight"]
    },
    "pair": {
      "interaction": ["close_proximity"],
      "bearing": ["left", "right"],
      "relative_heading": ["same"]
    }
  },
  {
    "category_id": "SC3",
    "host": {
      "actor_type": ["vehicle"]
    },
    "guest": {
      "actor_type": ["pedestrian"]
    },
    "pair": {
      "interaction": ["estimated_collision"]
    },
    "shared_element": {
      "kind": "lane",
      "host_tags": ["staying", "entering"],
      "guest_tags": ["entering", "staying"]
    }
  }
])JSON";
  return kJson;
}

const std::vector<ScenarioCategory>& builtin_catalog() {
  static const std::vector<ScenarioCategory> kCatalog = load_catalog(builtin_catalog_json());
  return kCatalog;
}

}  // namespace scenmine
