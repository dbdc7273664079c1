#ifndef SCENMINE_CATALOG_HPP_
#define SCENMINE_CATALOG_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scenmine/scene.hpp"
#include "scenmine/tags.hpp"

namespace scenmine {

// Absent sets are wildcards and impose no constraint.

struct EnvConstraint {
  std::set<MapElementKind> element_kinds;
  std::set<EnvInteractionTag> tags;

  bool operator==(const EnvConstraint&) const = default;
};

struct RoleConstraint {
  std::optional<std::set<ActorType>> actor_type;
  std::optional<std::set<LongitudinalTag>> longitudinal;
  std::optional<std::set<LateralTag>> lateral;
  std::optional<EnvConstraint> env_interaction;

  bool operator==(const RoleConstraint&) const = default;
};

struct PairConstraint {
  std::optional<std::set<PairInteractionFlag>> interaction;
  std::optional<std::set<BearingTag>> bearing;
  std::optional<std::set<RelativeHeadingTag>> relative_heading;

  bool operator==(const PairConstraint&) const = default;
};

// Both roles must carry their tags on one and the same element; a plain
// per-role environment constraint cannot express that.
struct SharedElementConstraint {
  MapElementKind kind = MapElementKind::kLane;
  std::set<EnvInteractionTag> host_tags;
  std::set<EnvInteractionTag> guest_tags;

  bool operator==(const SharedElementConstraint&) const = default;
};

struct ScenarioCategory {
  std::string category_id;
  RoleConstraint host;
  RoleConstraint guest;
  PairConstraint pair;
  std::optional<SharedElementConstraint> shared_element;
  double min_duration_s = 0.0;
};

// Parses a catalog file: a JSON array of category objects (a single object
// is accepted as a one-element catalog).
// Throws SyntaxError, UnknownTagError, DuplicateCategoryIdError.
std::vector<ScenarioCategory> load_catalog(const std::string& text);

std::vector<ScenarioCategory> load_catalog_file(const std::string& path);

// The built-in SC1/SC2/SC3 catalog, parsed from builtin_catalog_json().
const std::vector<ScenarioCategory>& builtin_catalog();
const std::string& builtin_catalog_json();

}  // namespace scenmine

#endif  // SCENMINE_CATALOG_HPP_
