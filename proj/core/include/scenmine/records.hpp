#ifndef SCENMINE_RECORDS_HPP_
#define SCENMINE_RECORDS_HPP_

#include <string>
#include <vector>

#include "scenmine/miner.hpp"

namespace scenmine {

// One scenario record as a single JSON line (no trailing newline).
std::string instance_to_json_line(const ScenarioInstance& instance);

// Throws SyntaxError on malformed lines.
ScenarioInstance parse_instance_line(const std::string& line);

// Reads a JSON-lines record file; blank lines are skipped.
std::vector<ScenarioInstance> load_records_file(const std::string& path);

void save_records_file(const std::vector<ScenarioInstance>& instances,
                       const std::string& path);

}  // namespace scenmine

#endif  // SCENMINE_RECORDS_HPP_
