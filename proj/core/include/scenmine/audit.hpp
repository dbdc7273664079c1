#ifndef SCENMINE_AUDIT_HPP_
#define SCENMINE_AUDIT_HPP_

#include <vector>

#include "scenmine/miner.hpp"

namespace scenmine {

// Exhaustive reference evaluator for the category matcher. Works from
// run-length-encoded tag timelines and literally tests every (ordered pair,
// frame window) for full-window satisfaction and maximality, instead of
// scanning runs. Slow on purpose; it exists to audit the matcher and the
// synthetic ground truth.
std::vector<ScenarioInstance> brute_force_match(const SceneTags& tags,
                                                const ScenarioCategory& category);

std::vector<ScenarioInstance> brute_force_mine(const Scene& scene,
                                               const std::vector<ScenarioCategory>& catalog,
                                               const MinerConfig& config);

}  // namespace scenmine

#endif  // SCENMINE_AUDIT_HPP_
