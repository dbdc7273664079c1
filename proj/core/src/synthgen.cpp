#include "scenmine/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "scenmine/audit.hpp"
#include "scenmine/errors.hpp"
#include "scenmine/geometry.hpp"
#include "scenmine/records.hpp"
#include "scenmine/rng.hpp"
#include "scenmine/scene_io.hpp"

namespace scenmine {
namespace {

constexpr double kLaneWidth = 3.5;

// Rolls a controlled actor frame by frame. The controller sets speed and yaw
// rate for the step following frame k.
std::vector<ActorState> roll_states(int frames, double ts, Vec2 pos, double yaw,
                                    const std::function<void(int, double&, double&)>& control) {
  std::vector<ActorState> states(frames);
  CtrvState s{pos.x, pos.y, yaw, 0.0, 0.0};
  for (int k = 0; k < frames; ++k) {
    double v = 0.0, omega = 0.0;
    control(k, v, omega);
    states[k].valid = true;
    states[k].x = s.x;
    states[k].y = s.y;
    states[k].yaw = s.yaw;
    states[k].vx = v * std::cos(s.yaw);
    states[k].vy = v * std::sin(s.yaw);
    s.v = v;
    s.omega = omega;
    s = ctrv_step(s, ts);
  }
  return states;
}

ActorTrack make_actor(std::string id, ActorType type, double length, double width,
                      std::vector<ActorState> states) {
  ActorTrack a;
  a.actor_id = std::move(id);
  a.actor_type = type;
  a.length_m = length;
  a.width_m = width;
  a.states = std::move(states);
  return a;
}

ActorTrack constant_velocity_actor(const std::string& id, ActorType type, double length,
                                   double width, Vec2 start, double yaw, double speed,
                                   int frames, double ts) {
  return make_actor(id, type, length, width,
                    roll_states(frames, ts, start, yaw, [speed](int, double& v, double& w) {
                      v = speed;
                      w = 0.0;
                    }));
}

MapElement make_lane(const std::string& id, Vec2 a, Vec2 b, double width) {
  MapElement e;
  e.element_id = id;
  e.kind = MapElementKind::kLane;
  e.source_geometry.is_polyline = true;
  e.source_geometry.points = {a, b};
  e.source_geometry.width_m = width;
  e.polygon = normalize_map_element(e.source_geometry);
  return e;
}

MapElement make_rect_element(const std::string& id, MapElementKind kind, Vec2 lo, Vec2 hi) {
  MapElement e;
  e.element_id = id;
  e.kind = kind;
  e.source_geometry.is_polyline = false;
  e.source_geometry.points = {{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}};
  e.polygon = normalize_map_element(e.source_geometry);
  return e;
}

// Background population: lone cruisers on a strip far north of the scripted
// action, optionally with lane/crosswalk elements under them. They add the
// bulk pairwise work of a corpus-scale scene without touching the plot.
void add_background(Scene* scene, Rng& rng, const SynthParams& params) {
  const int frames = params.frame_count;
  const double ts = params.sample_period_s;
  for (int i = 0; i < params.extra_actors; ++i) {
    const double y = 200.0 + 40.0 * i;
    const double x0 = rng.uniform(-40.0, -20.0);
    const double v = rng.uniform(5.0, 12.0);
    scene->actors.push_back(constant_velocity_actor("BG" + std::to_string(i + 1),
                                                    ActorType::kVehicle, 4.5, 2.0, {x0, y}, 0.0,
                                                    v, frames, ts));
  }
  for (int i = 0; i < params.extra_elements; ++i) {
    const double y = 200.0 + 40.0 * i;
    if (i % 2 == 0) {
      scene->map_elements.push_back(
          make_lane("bg_lane" + std::to_string(i + 1), {-60.0, y}, {80.0, y}, 4.0));
    } else {
      const double x = rng.uniform(-10.0, 30.0);
      scene->map_elements.push_back(make_rect_element("bg_cw" + std::to_string(i + 1),
                                                      MapElementKind::kCrosswalk,
                                                      {x - 1.5, y - 8.0}, {x + 1.5, y + 8.0}));
    }
  }
}

// Left-turning vehicle; shared by SC1 and the negative scene's lone turner.
ActorTrack left_turner(const std::string& id, Rng& rng, const SynthParams& params, Vec2 origin,
                       double* v_out, double* omega_out, int* turn_start_frame,
                       double* y_turn_start) {
  const int frames = params.frame_count;
  const double ts = params.sample_period_s;
  const double v = rng.uniform(5.5, 6.5);
  const double omega = rng.uniform(0.45, 0.55);
  const int k_turn = static_cast<int>(std::lround(rng.uniform(1.5, 2.2) / ts));
  const int turn_frames = static_cast<int>(std::lround((M_PI / 2.0) / (omega * ts)));
  const double y_a = origin.y - 4.0 + rng.uniform(-1.0, 1.0);
  const Vec2 start{origin.x + 1.75, y_a - v * (k_turn * ts)};

  *v_out = v;
  *omega_out = omega;
  *turn_start_frame = k_turn;
  *y_turn_start = y_a;

  return make_actor(id, ActorType::kVehicle, 4.5, 2.0,
                    roll_states(frames, ts, start, M_PI / 2.0,
                                [=](int k, double& vel, double& w) {
                                  vel = v;
                                  w = (k >= k_turn && k < k_turn + turn_frames) ? omega : 0.0;
                                }));
}

Scene build_sc1(Rng& rng, const SynthParams& params, std::vector<std::string>* decoys) {
  const int frames = params.frame_count;
  const double ts = params.sample_period_s;
  Scene scene;
  scene.sample_period_s = ts;
  scene.frame_count = frames;

  double v_h = 0.0, omega = 0.0, y_a = 0.0;
  int k_turn = 0;
  scene.actors.push_back(left_turner("V1", rng, params, {0.0, 0.0}, &v_h, &omega, &k_turn, &y_a));

  // Oncoming vehicle timed onto the host's lane crossing.
  const double r = v_h / omega;
  const double tau_cross = std::acos(1.0 - 3.5 / r) / omega;
  const double y_cross = y_a + r * std::sin(omega * tau_cross);
  const double t_cross = k_turn * ts + tau_cross;
  const double v_g = rng.uniform(7.5, 8.5);
  const double delta = rng.uniform(-0.3, 0.3);
  const double y_g0 = y_cross + v_g * (t_cross + delta);
  scene.actors.push_back(constant_velocity_actor("V2", ActorType::kVehicle, 4.5, 2.0,
                                                 {-1.75, y_g0}, -M_PI / 2.0, v_g, frames, ts));

  // Standing cyclist beside the host's post-turn lane: close proximity with a
  // standing-still actor matches nothing.
  const double y_post = y_a + r;
  const double x_cyc = -r - 1.75 - rng.uniform(3.0, 8.0);
  const double y_cyc = y_post + 2.2 + rng.uniform(0.0, 0.3);
  scene.actors.push_back(make_actor("C1", ActorType::kCyclist, 1.8, 0.8,
                                    roll_states(frames, ts, {x_cyc, y_cyc}, M_PI,
                                                [](int, double& v, double& w) {
                                                  v = 0.0;
                                                  w = 0.0;
                                                })));
  decoys->push_back("V1-C1: host passes a standing cyclist in close proximity");

  // Pedestrian on the east sidewalk, parallel to traffic.
  const double x_ped = 5.5 + rng.uniform(0.0, 1.0);
  scene.actors.push_back(constant_velocity_actor("P1", ActorType::kPedestrian, 0.6, 0.6,
                                                 {x_ped, -12.0 + rng.uniform(-2.0, 0.0)},
                                                 M_PI / 2.0, 1.2, frames, ts));
  decoys->push_back("P1: sidewalk pedestrian near the host approach, no conflict");

  scene.map_elements.push_back(make_lane("lane_north", {1.75, -45.0}, {1.75, 45.0}, kLaneWidth));
  scene.map_elements.push_back(make_lane("lane_south", {-1.75, 45.0}, {-1.75, -45.0}, kLaneWidth));
  scene.map_elements.push_back(make_lane("lane_west", {45.0, y_post}, {-45.0, y_post}, kLaneWidth));
  scene.map_elements.push_back(make_rect_element("crosswalk1", MapElementKind::kCrosswalk,
                                                 {-5.25, -8.5 + rng.uniform(-0.5, 0.5)},
                                                 {5.25, -6.5 + rng.uniform(-0.3, 0.3)}));
  return scene;
}

Scene build_sc2(Rng& rng, const SynthParams& params, std::vector<std::string>* decoys) {
  const int frames = params.frame_count;
  const double ts = params.sample_period_s;
  Scene scene;
  scene.sample_period_s = ts;
  scene.frame_count = frames;

  const double v_v = rng.uniform(7.5, 8.5);
  const double v_c = rng.uniform(3.5, 4.5);
  const double t_abeam = rng.uniform(4.5, 6.0);
  const double x_v0 = -30.0;
  const double x_c0 = x_v0 + (v_v - v_c) * t_abeam;
  const double y_c = -2.2 + rng.uniform(-0.1, 0.1);

  scene.actors.push_back(constant_velocity_actor("V1", ActorType::kVehicle, 4.5, 2.0,
                                                 {x_v0, 0.0}, 0.0, v_v, frames, ts));
  scene.actors.push_back(constant_velocity_actor("C1", ActorType::kCyclist, 1.8, 0.8,
                                                 {x_c0, y_c}, 0.0, v_c, frames, ts));

  scene.actors.push_back(constant_velocity_actor("V2", ActorType::kVehicle, 4.5, 2.0,
                                                 {30.0, 3.5 + rng.uniform(0.0, 0.2)}, M_PI,
                                                 8.0, frames, ts));
  decoys->push_back("V1-V2: opposite-direction pass in close proximity, straight lanes");

  scene.actors.push_back(constant_velocity_actor("P1", ActorType::kPedestrian, 0.6, 0.6,
                                                 {10.0, -6.0 - rng.uniform(0.0, 1.0)}, M_PI,
                                                 1.2, frames, ts));
  decoys->push_back("P1: sidewalk pedestrian, never on a lane");

  scene.map_elements.push_back(make_lane("lane_east", {-45.0, 0.0}, {60.0, 0.0}, kLaneWidth));
  scene.map_elements.push_back(make_lane("lane_west", {60.0, 3.5}, {-45.0, 3.5}, kLaneWidth));
  const double x_cw = 38.0 + rng.uniform(0.0, 4.0);
  scene.map_elements.push_back(make_rect_element("crosswalk1", MapElementKind::kCrosswalk,
                                                 {x_cw - 1.0, -6.0}, {x_cw + 1.0, 6.0}));
  return scene;
}

Scene build_sc3(Rng& rng, const SynthParams& params, std::vector<std::string>* decoys) {
  const int frames = params.frame_count;
  const double ts = params.sample_period_s;
  Scene scene;
  scene.sample_period_s = ts;
  scene.frame_count = frames;

  const double v_v = rng.uniform(6.5, 7.5);
  const double v_p = rng.uniform(1.3, 1.5);
  const double decel = 4.0 + rng.uniform(-0.3, 0.3);
  const double x_c = -5.0 + rng.uniform(-0.5, 0.5);

  // Brake to a stop short of the crossing point; the pedestrian is timed so
  // both would reach it together if the vehicle kept its speed.
  const double stop_margin = 0.5 * 4.5 + 0.3 + 1.5;
  const double x_stop = x_c - stop_margin;
  const double brake_dist = v_v * v_v / (2.0 * decel);
  const double t_b = rng.uniform(1.9, 2.4);
  const int k_b = static_cast<int>(std::lround(t_b / ts));
  const double x_v0 = x_stop - brake_dist - v_v * (k_b * ts);
  const double tau_veh0 = (x_c - x_v0) / v_v;
  const double tau_ped0 = tau_veh0 + rng.uniform(-0.2, 0.2);
  const double y_p0 = -v_p * tau_ped0;

  scene.actors.push_back(make_actor(
      "V1", ActorType::kVehicle, 4.5, 2.0,
      roll_states(frames, ts, {x_v0, 0.0}, 0.0, [=](int k, double& v, double& w) {
        w = 0.0;
        v = k < k_b ? v_v : std::max(0.0, v_v - decel * ((k - k_b) * ts));
      })));
  scene.actors.push_back(constant_velocity_actor("P1", ActorType::kPedestrian, 0.6, 0.6,
                                                 {x_c, y_p0}, M_PI / 2.0, v_p, frames, ts));

  // Westbound vehicle on the second lane passes the crossing point well ahead
  // of the pedestrian: paths intersect, occupancy never aligns in time.
  const double v_2 = 8.0 + rng.uniform(-0.5, 0.5);
  const double t_p6 = (6.0 - y_p0) / v_p;
  const double t_pass = t_p6 - rng.uniform(1.7, 2.2);
  const double x_v2_0 = x_c + v_2 * t_pass;
  scene.actors.push_back(constant_velocity_actor("V2", ActorType::kVehicle, 4.5, 2.0,
                                                 {x_v2_0, 6.0}, M_PI, v_2, frames, ts));
  decoys->push_back("V2-P1: crossing paths with a time offset, never on collision course");

  scene.actors.push_back(constant_velocity_actor("C1", ActorType::kCyclist, 1.8, 0.8,
                                                 {-20.0, 10.5 + rng.uniform(0.0, 0.5)}, 0.0,
                                                 4.0, frames, ts));
  decoys->push_back("C1: cyclist clear of all lanes and actors");

  scene.map_elements.push_back(make_lane("lane_east", {-45.0, 0.0}, {45.0, 0.0}, 4.0));
  scene.map_elements.push_back(make_lane("lane_west", {45.0, 6.0}, {-45.0, 6.0}, 4.0));
  scene.map_elements.push_back(make_rect_element("crosswalk1", MapElementKind::kCrosswalk,
                                                 {x_c - 1.0, -8.0}, {x_c + 1.0, 8.0}));
  return scene;
}

Scene build_negative(Rng& rng, const SynthParams& params, std::vector<std::string>* decoys) {
  const int frames = params.frame_count;
  const double ts = params.sample_period_s;
  Scene scene;
  scene.sample_period_s = ts;
  scene.frame_count = frames;

  // Cell 0: lone left turner.
  double v_h = 0.0, omega = 0.0, y_a = 0.0;
  int k_turn = 0;
  scene.actors.push_back(left_turner("V1", rng, params, {0.0, 0.0}, &v_h, &omega, &k_turn, &y_a));
  decoys->push_back("V1: left turn with no conflicting actor");

  // Cell 1: opposite-direction straight pass on separate lanes.
  scene.actors.push_back(constant_velocity_actor("V2", ActorType::kVehicle, 4.5, 2.0,
                                                 {120.0 - 30.0, 0.0}, 0.0,
                                                 rng.uniform(7.0, 9.0), frames, ts));
  scene.actors.push_back(constant_velocity_actor("V3", ActorType::kVehicle, 4.5, 2.0,
                                                 {120.0 + 30.0, 3.5}, M_PI,
                                                 rng.uniform(7.0, 9.0), frames, ts));
  decoys->push_back("V2-V3: opposite-direction pass, close proximity only");

  // Cell 2: vehicle and cyclist parallel at a safe lateral distance.
  scene.actors.push_back(constant_velocity_actor("V4", ActorType::kVehicle, 4.5, 2.0,
                                                 {240.0 - 30.0, 0.0}, 0.0, 7.0, frames, ts));
  scene.actors.push_back(constant_velocity_actor("C1", ActorType::kCyclist, 1.8, 0.8,
                                                 {240.0 - 12.0, -4.2 - rng.uniform(0.0, 0.5)},
                                                 0.0, 4.0, frames, ts));
  decoys->push_back("V4-C1: parallel courses outside the proximity envelope");

  // Cell 3: pedestrian and vehicle share a lane region with offset timing, or
  // the pedestrian keeps clear of the lane entirely.
  const double x_cell3 = 360.0;
  const double v5 = rng.uniform(7.5, 8.5);
  const double t_pass = rng.uniform(1.5, 2.0);
  const double x_conflict = x_cell3 + rng.uniform(-5.0, 5.0);
  scene.actors.push_back(constant_velocity_actor("V5", ActorType::kVehicle, 4.5, 2.0,
                                                 {x_conflict - v5 * t_pass, 0.0}, 0.0, v5,
                                                 frames, ts));
  if (rng.bernoulli(0.5)) {
    const double v_p = rng.uniform(1.3, 1.5);
    const double t_cross = t_pass + rng.uniform(3.0, 4.0);
    scene.actors.push_back(constant_velocity_actor("P1", ActorType::kPedestrian, 0.6, 0.6,
                                                   {x_conflict, -v_p * t_cross}, M_PI / 2.0,
                                                   v_p, frames, ts));
    decoys->push_back("V5-P1: pedestrian crosses the lane seconds after the vehicle passed");
  } else {
    scene.actors.push_back(constant_velocity_actor("P1", ActorType::kPedestrian, 0.6, 0.6,
                                                   {x_conflict - 15.0, -4.0}, 0.0, 1.3, frames,
                                                   ts));
    decoys->push_back("V5-P1: pedestrian walks beside the lane, never on it");
  }

  scene.map_elements.push_back(make_lane("lane_c1e", {90.0, 0.0}, {150.0, 0.0}, kLaneWidth));
  scene.map_elements.push_back(make_lane("lane_c1w", {150.0, 3.5}, {90.0, 3.5}, kLaneWidth));
  scene.map_elements.push_back(make_lane("lane_c2", {210.0, 0.0}, {270.0, 0.0}, kLaneWidth));
  scene.map_elements.push_back(make_lane("lane_c3", {330.0, 0.0}, {390.0, 0.0}, 4.0));
  scene.map_elements.push_back(make_rect_element("crosswalk_c3", MapElementKind::kCrosswalk,
                                                 {x_conflict - 1.0, -6.0},
                                                 {x_conflict + 1.0, 6.0}));
  return scene;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::string format_scene_id(const std::string& prefix, std::uint64_t seed) {
  std::ostringstream id;
  id << prefix << "-";
  std::string digits = std::to_string(seed);
  while (digits.size() < 6) digits.insert(digits.begin(), '0');
  id << digits;
  return id.str();
}

void check_duration(const SynthParams& params) {
  if (params.frame_count * params.sample_period_s < 8.5) {
    throw GenerationFailedError("scene duration must be at least 8.5 s");
  }
  if (params.sample_period_s <= 0.0 || params.frame_count < 2) {
    throw GenerationFailedError("invalid sample period or frame count");
  }
}

}  // namespace

GroundTruth generate_scene(const std::string& category_id, std::uint64_t seed,
                           const SynthParams& params) {
  check_duration(params);
  Scene (*builder)(Rng&, const SynthParams&, std::vector<std::string>*) = nullptr;
  if (category_id == "SC1") builder = build_sc1;
  if (category_id == "SC2") builder = build_sc2;
  if (category_id == "SC3") builder = build_sc3;
  if (!builder) throw GenerationFailedError("unknown category '" + category_id + "'");

  std::string last_problem;
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    Rng rng(mix_seed(seed, attempt));
    GroundTruth gt;
    gt.scene = builder(rng, params, &gt.decoys);
    add_background(&gt.scene, rng, params);
    gt.scene.scene_id = format_scene_id(category_id, seed);
    validate_scene(gt.scene);

    const std::vector<ScenarioInstance> found =
        brute_force_mine(gt.scene, builtin_catalog(), params.miner);
    if (found.size() != 1) {
      last_problem = "expected exactly 1 instance, found " + std::to_string(found.size());
      continue;
    }
    const ScenarioInstance& inst = found.front();
    if (inst.category_id != category_id || inst.host_actor_id != "V1" ||
        inst.end_frame - inst.start_frame + 1 < 3) {
      last_problem = "planted instance came out as " + inst.category_id + " " +
                     inst.host_actor_id + "-" + inst.guest_actor_id;
      continue;
    }
    gt.planted = found;
    return gt;
  }
  throw GenerationFailedError(category_id + " seed " + std::to_string(seed) + ": " +
                              last_problem);
}

GroundTruth generate_negative_scene(std::uint64_t seed, const SynthParams& params) {
  check_duration(params);
  std::string last_problem;
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    Rng rng(mix_seed(seed, attempt + 101));
    GroundTruth gt;
    gt.scene = build_negative(rng, params, &gt.decoys);
    add_background(&gt.scene, rng, params);
    gt.scene.scene_id = format_scene_id("NEG", seed);
    validate_scene(gt.scene);

    const std::vector<ScenarioInstance> found =
        brute_force_mine(gt.scene, builtin_catalog(), params.miner);
    if (found.empty()) return gt;
    last_problem = "accidental match: " + found.front().category_id + " " +
                   found.front().host_actor_id + "-" + found.front().guest_actor_id;
  }
  throw GenerationFailedError("negative seed " + std::to_string(seed) + ": " + last_problem);
}

Scene corrupt_scene(const Scene& scene, std::uint64_t seed, double gap_rate,
                    double noise_sigma) {
  if (gap_rate < 0.0 || gap_rate >= 1.0) {
    throw ValidationError("corrupt_scene: gap_rate must be in [0, 1)");
  }
  if (noise_sigma < 0.0) {
    throw ValidationError("corrupt_scene: noise_sigma must be >= 0");
  }
  Scene out = scene;
  Rng rng(mix_seed(seed, 0xC0'44'EEULL));
  for (ActorTrack& actor : out.actors) {
    const int first = actor.first_valid_frame();
    const int last = actor.last_valid_frame();
    for (int k = 0; k < static_cast<int>(actor.states.size()); ++k) {
      ActorState& s = actor.states[k];
      if (!s.valid) continue;
      if (k > first && k < last && gap_rate > 0.0 && rng.bernoulli(gap_rate)) {
        s.valid = false;
        continue;
      }
      if (noise_sigma > 0.0) {
        s.vx += rng.normal(0.0, noise_sigma);
        s.vy += rng.normal(0.0, noise_sigma);
      }
    }
  }
  return out;
}

void write_ground_truth(const GroundTruth& gt, const std::string& scene_path,
                        const std::string& sidecar_path) {
  save_scene_file(gt.scene, scene_path);
  save_records_file(gt.planted, sidecar_path);
}

}  // namespace scenmine
