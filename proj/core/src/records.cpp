#include "scenmine/records.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scenmine/errors.hpp"

namespace scenmine {

using Json = nlohmann::ordered_json;

std::string instance_to_json_line(const ScenarioInstance& instance) {
  Json j;
  j["category_id"] = instance.category_id;
  j["scene_id"] = instance.scene_id;
  j["host_actor_id"] = instance.host_actor_id;
  j["guest_actor_id"] = instance.guest_actor_id;
  j["start_frame"] = instance.start_frame;
  j["end_frame"] = instance.end_frame;
  j["start_time_s"] = instance.start_time_s;
  j["end_time_s"] = instance.end_time_s;
  if (instance.element_id) {
    j["element_id"] = *instance.element_id;
  } else {
    j["element_id"] = nullptr;
  }
  return j.dump();
}

ScenarioInstance parse_instance_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("scenario record: ") + e.what());
  }
  if (!j.is_object()) throw SyntaxError("scenario record must be an object");
  ScenarioInstance inst;
  try {
    inst.category_id = j.at("category_id").get<std::string>();
    inst.scene_id = j.at("scene_id").get<std::string>();
    inst.host_actor_id = j.at("host_actor_id").get<std::string>();
    inst.guest_actor_id = j.at("guest_actor_id").get<std::string>();
    inst.start_frame = j.at("start_frame").get<int>();
    inst.end_frame = j.at("end_frame").get<int>();
    inst.start_time_s = j.at("start_time_s").get<double>();
    inst.end_time_s = j.at("end_time_s").get<double>();
    if (j.contains("element_id") && !j["element_id"].is_null()) {
      inst.element_id = j["element_id"].get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("scenario record: ") + e.what());
  }
  return inst;
}

std::vector<ScenarioInstance> load_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open record file '" + path + "'");
  std::vector<ScenarioInstance> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_instance_line(line));
  }
  return out;
}

void save_records_file(const std::vector<ScenarioInstance>& instances,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SyntaxError("cannot open '" + path + "' for writing");
  for (const ScenarioInstance& inst : instances) {
    out << instance_to_json_line(inst) << "\n";
  }
}

}  // namespace scenmine
