#ifndef SCENMINE_SVG_RENDER_HPP_
#define SCENMINE_SVG_RENDER_HPP_

#include <string>

#include "scenmine/miner.hpp"
#include "scenmine/scene.hpp"

namespace scenmine {

// One extracted scenario as a standalone SVG: map-element outlines, the host
// and guest trajectories over the instance interval with bounding boxes at
// the first and last frame, other actors dimmed, and a small legend. Output
// bytes are deterministic for identical inputs.
// Throws UnknownSceneError / UnknownActorError when the record does not
// belong to the scene.
std::string render_scenario_svg(const Scene& scene, const ScenarioInstance& instance);

}  // namespace scenmine

#endif  // SCENMINE_SVG_RENDER_HPP_
