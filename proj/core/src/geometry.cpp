#include "scenmine/geometry.hpp"

#include <algorithm>
#include <cmath>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "scenmine/errors.hpp"

namespace bg = boost::geometry;

namespace scenmine {
namespace {

using BgPoint = bg::model::d2::point_xy<double>;
using BgPolygon = bg::model::polygon<BgPoint, /*ClockWise=*/false, /*Closed=*/true>;
using BgMultiPolygon = bg::model::multi_polygon<BgPolygon>;

BgPolygon to_bg(const Polygon& p) {
  BgPolygon out;
  out.outer().reserve(p.vertices.size() + 1);
  for (const Vec2& v : p.vertices) {
    out.outer().emplace_back(v.x, v.y);
  }
  if (!p.vertices.empty()) {
    out.outer().emplace_back(p.vertices.front().x, p.vertices.front().y);
  }
  bg::correct(out);
  return out;
}

Polygon ring_to_polygon(const BgPolygon::ring_type& ring, bool make_ccw) {
  Polygon p;
  std::size_t n = ring.size();
  if (n > 0 && bg::equals(ring.front(), ring.back())) {
    --n;  // drop the closing duplicate
  }
  p.vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.vertices.emplace_back(bg::get<0>(ring[i]), bg::get<1>(ring[i]));
  }
  if (make_ccw && !is_ccw(p)) {
    p = reversed(p);
  }
  return p;
}

// Attaches each hole to the part that contains it, then hands the result to
// Boost.Geometry.
BgMultiPolygon to_bg(const MultiPolygon& mp) {
  BgMultiPolygon out;
  out.reserve(mp.parts.size());
  for (const Polygon& part : mp.parts) {
    out.push_back(to_bg(part));
  }
  for (const Polygon& hole : mp.holes) {
    if (hole.vertices.empty()) continue;
    for (std::size_t i = 0; i < mp.parts.size(); ++i) {
      if (point_in_polygon(hole.vertices.front(), mp.parts[i])) {
        auto& rings = out[i].inners();
        rings.emplace_back();
        auto& ring = rings.back();
        ring.reserve(hole.vertices.size() + 1);
        for (const Vec2& v : hole.vertices) {
          ring.emplace_back(v.x, v.y);
        }
        ring.emplace_back(hole.vertices.front().x, hole.vertices.front().y);
        bg::correct(out[i]);
        break;
      }
    }
  }
  return out;
}

MultiPolygon from_bg(const BgMultiPolygon& bmp) {
  MultiPolygon out;
  for (const BgPolygon& poly : bmp) {
    Polygon part = ring_to_polygon(poly.outer(), /*make_ccw=*/true);
    if (part.vertices.size() >= 3 && std::abs(signed_area(part)) > 0.0) {
      out.parts.push_back(std::move(part));
    }
    for (const auto& inner : poly.inners()) {
      Polygon hole = ring_to_polygon(inner, /*make_ccw=*/true);
      if (hole.vertices.size() >= 3 && std::abs(signed_area(hole)) > 0.0) {
        out.holes.push_back(std::move(hole));
      }
    }
  }
  return out;
}

void require_valid_polygon(const Polygon& p, const char* who) {
  if (p.vertices.size() < 3) {
    throw DegenerateGeometryError(std::string(who) + ": polygon with fewer than 3 vertices");
  }
}

double bg_intersection_area(const BgPolygon& a, const BgPolygon& b) {
  BgMultiPolygon overlap;
  bg::intersection(a, b, overlap);
  return bg::area(overlap);
}

}  // namespace

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

double signed_area(const Polygon& p) {
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  if (n < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    acc += v[j].cross(v[i]);
  }
  return 0.5 * acc;
}

double polygon_area(const Polygon& p) {
  require_valid_polygon(p, "polygon_area");
  return std::abs(signed_area(p));
}

double polygon_area(const MultiPolygon& mp) {
  double acc = 0.0;
  for (const Polygon& part : mp.parts) acc += polygon_area(part);
  for (const Polygon& hole : mp.holes) acc -= polygon_area(hole);
  return acc;
}

bool is_ccw(const Polygon& p) { return signed_area(p) > 0.0; }

Polygon reversed(const Polygon& p) {
  Polygon out = p;
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

namespace {

int orient_sign(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double d = (b - a).cross(c - a);
  if (d > 0.0) return 1;
  if (d < 0.0) return -1;
  return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Any contact between the closed segments [a,b] and [c,d].
bool segments_touch(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const int o1 = orient_sign(a, b, c);
  const int o2 = orient_sign(a, b, d);
  const int o3 = orient_sign(c, d, a);
  const int o4 = orient_sign(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace

bool polygon_is_simple(const Polygon& p) {
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    if (a.x == b.x && a.y == b.y) return false;  // zero-length edge
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(a, b, v[j], v[(j + 1) % n])) return false;
    }
  }
  // Reject spikes: consecutive edges folding back onto each other.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = v[(i + n - 1) % n];
    const Vec2& cur = v[i];
    const Vec2& next = v[(i + 1) % n];
    if (orient_sign(prev, cur, next) == 0 && (next - cur).dot(prev - cur) > 0.0) {
      return false;
    }
  }
  return true;
}

bool point_in_polygon(const Vec2& pt, const Polygon& p) {
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y > pt.y) != (v[j].y > pt.y)) {
      const double x_cross = v[j].x + (v[i].x - v[j].x) * (pt.y - v[j].y) / (v[i].y - v[j].y);
      if (pt.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

Vec2 polygon_centroid(const Polygon& p) {
  Vec2 acc;
  if (p.vertices.empty()) return acc;
  for (const Vec2& v : p.vertices) acc = acc + v;
  return acc * (1.0 / static_cast<double>(p.vertices.size()));
}

double polygon_circumradius(const Polygon& p, const Vec2& center) {
  double r_sq = 0.0;
  for (const Vec2& v : p.vertices) {
    r_sq = std::max(r_sq, (v - center).norm_sq());
  }
  return std::sqrt(r_sq);
}

Aabb polygon_aabb(const Polygon& p) {
  Aabb box{{0.0, 0.0}, {0.0, 0.0}};
  if (p.vertices.empty()) return box;
  box.lo = box.hi = p.vertices.front();
  for (const Vec2& v : p.vertices) {
    box.lo.x = std::min(box.lo.x, v.x);
    box.lo.y = std::min(box.lo.y, v.y);
    box.hi.x = std::max(box.hi.x, v.x);
    box.hi.y = std::max(box.hi.y, v.y);
  }
  return box;
}

double point_aabb_dist_sq(const Vec2& pt, const Aabb& box) {
  const double dx = std::max({box.lo.x - pt.x, 0.0, pt.x - box.hi.x});
  const double dy = std::max({box.lo.y - pt.y, 0.0, pt.y - box.hi.y});
  return dx * dx + dy * dy;
}

double intersection_area(const Polygon& a, const Polygon& b) {
  require_valid_polygon(a, "intersection_area");
  require_valid_polygon(b, "intersection_area");
  return bg_intersection_area(to_bg(a), to_bg(b));
}

double intersection_area(const MultiPolygon& a, const Polygon& b) {
  require_valid_polygon(b, "intersection_area");
  BgMultiPolygon overlap;
  bg::intersection(to_bg(a), to_bg(b), overlap);
  return bg::area(overlap);
}

double intersection_area(const Polygon& a, const MultiPolygon& b) {
  return intersection_area(b, a);
}

double intersection_area(const MultiPolygon& a, const MultiPolygon& b) {
  BgMultiPolygon overlap;
  bg::intersection(to_bg(a), to_bg(b), overlap);
  return bg::area(overlap);
}

bool polygons_intersect(const Polygon& a, const Polygon& b) {
  require_valid_polygon(a, "polygons_intersect");
  require_valid_polygon(b, "polygons_intersect");
  return bg::intersects(to_bg(a), to_bg(b));
}

bool obb_intersect(const OrientedBox& a, const OrientedBox& b) {
  const Vec2 t = b.center - a.center;
  const Vec2 ua{std::cos(a.yaw), std::sin(a.yaw)};
  const Vec2 va{-ua.y, ua.x};
  const Vec2 ub{std::cos(b.yaw), std::sin(b.yaw)};
  const Vec2 vb{-ub.y, ub.x};
  const double ha_l = 0.5 * a.length_m, ha_w = 0.5 * a.width_m;
  const double hb_l = 0.5 * b.length_m, hb_w = 0.5 * b.width_m;

  const Vec2 axes[4] = {ua, va, ub, vb};
  for (const Vec2& axis : axes) {
    const double ra = ha_l * std::abs(ua.dot(axis)) + ha_w * std::abs(va.dot(axis));
    const double rb = hb_l * std::abs(ub.dot(axis)) + hb_w * std::abs(vb.dot(axis));
    if (std::abs(t.dot(axis)) > ra + rb) return false;
  }
  return true;
}

namespace {

// Keeps the part of `in` on the left of the directed line a -> a+d. Returns
// the output vertex count; each clip adds at most one vertex.
std::size_t clip_halfplane(const Vec2* in, std::size_t n, Vec2* out, const Vec2& a,
                           const Vec2& d) {
  std::size_t m = 0;
  if (n == 0) return 0;
  Vec2 prev = in[n - 1];
  double prev_side = d.cross(prev - a);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& cur = in[i];
    const double cur_side = d.cross(cur - a);
    if (cur_side >= 0.0) {
      if (prev_side < 0.0) {
        const double t = prev_side / (prev_side - cur_side);
        out[m++] = prev + (cur - prev) * t;
      }
      out[m++] = cur;
    } else if (prev_side >= 0.0) {
      const double t = prev_side / (prev_side - cur_side);
      out[m++] = prev + (cur - prev) * t;
    }
    prev = cur;
    prev_side = cur_side;
  }
  return m;
}

double chain_area(const Vec2* v, std::size_t n) {
  if (n < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    acc += v[j].cross(v[i]);
  }
  return 0.5 * std::abs(acc);
}

constexpr std::size_t kClipStackCap = 64;

}  // namespace

double box_polygon_intersection_area(const OrientedBox& box, const Polygon& p) {
  const Vec2 u{std::cos(box.yaw), std::sin(box.yaw)};
  const Vec2 v{-u.y, u.x};
  const Vec2 hu = u * (0.5 * box.length_m);
  const Vec2 hv = v * (0.5 * box.width_m);
  const Vec2 corners[4] = {box.center - hu - hv, box.center + hu - hv, box.center + hu + hv,
                           box.center - hu + hv};

  const std::size_t n_in = p.vertices.size();
  if (n_in + 8 > kClipStackCap) {
    // Rare large polygons take the generic path.
    return intersection_area(box_polygon(box), p);
  }
  Vec2 buf_a[kClipStackCap];
  Vec2 buf_b[kClipStackCap];
  std::copy(p.vertices.begin(), p.vertices.end(), buf_a);
  Vec2* work = buf_a;
  Vec2* next = buf_b;
  std::size_t count = n_in;
  for (std::size_t i = 0; i < 4 && count > 0; ++i) {
    const Vec2& a = corners[i];
    const Vec2 d = corners[(i + 1) % 4] - a;
    count = clip_halfplane(work, count, next, a, d);
    std::swap(work, next);
  }
  return chain_area(work, count);
}

MultiPolygon union_polygons(const std::vector<Polygon>& parts) {
  BgMultiPolygon acc;
  for (const Polygon& part : parts) {
    require_valid_polygon(part, "union_polygons");
    BgMultiPolygon merged;
    bg::union_(acc, to_bg(part), merged);
    acc = std::move(merged);
  }
  return from_bg(acc);
}

Polygon box_polygon(const OrientedBox& b) {
  const Vec2 u{std::cos(b.yaw), std::sin(b.yaw)};
  const Vec2 v{-u.y, u.x};
  const Vec2 hu = u * (0.5 * b.length_m);
  const Vec2 hv = v * (0.5 * b.width_m);
  Polygon p;
  p.vertices = {b.center - hu - hv, b.center + hu - hv, b.center + hu + hv,
                b.center - hu + hv};
  return p;
}

CtrvState ctrv_step(const CtrvState& s, double tau) {
  if (tau <= 0.0) return s;
  CtrvState n = s;
  if (std::abs(s.omega) <= kCtrvOmegaEps) {
    n.x = s.x + s.v * tau * std::cos(s.yaw);
    n.y = s.y + s.v * tau * std::sin(s.yaw);
    return n;
  }
  // (v/w)(sin(psi+w*tau) - sin(psi)) rewritten through the half-angle so the
  // expression stays finite as w -> 0.
  const double half = 0.5 * s.omega * tau;
  const double sinc = std::sin(half) / half;
  const double mid = s.yaw + half;
  n.x = s.x + s.v * tau * sinc * std::cos(mid);
  n.y = s.y + s.v * tau * sinc * std::sin(mid);
  n.yaw = wrap_angle(s.yaw + s.omega * tau);
  return n;
}

std::vector<OrientedBox> swept_boxes(const CtrvState& s, const OrientedBox& box,
                                     double horizon, double step) {
  if (horizon <= 0.0 || step <= 0.0) {
    throw DegenerateGeometryError("swept_boxes: horizon and step must be positive");
  }
  std::vector<OrientedBox> boxes;
  const int n_steps = static_cast<int>(std::floor(horizon / step + 1e-9));
  boxes.reserve(static_cast<std::size_t>(n_steps) + 2);
  CtrvState cur = s;
  boxes.push_back(OrientedBox{{cur.x, cur.y}, box.length_m, box.width_m, cur.yaw});
  for (int k = 1; k <= n_steps; ++k) {
    cur = ctrv_step(cur, step);
    boxes.push_back(OrientedBox{{cur.x, cur.y}, box.length_m, box.width_m, cur.yaw});
  }
  const double covered = n_steps * step;
  if (covered < horizon - 1e-9) {
    cur = ctrv_step(cur, horizon - covered);
    boxes.push_back(OrientedBox{{cur.x, cur.y}, box.length_m, box.width_m, cur.yaw});
  }
  return boxes;
}

MultiPolygon swept_polygon(const CtrvState& s, const OrientedBox& box, double horizon,
                           double step) {
  const std::vector<OrientedBox> boxes = swept_boxes(s, box, horizon, step);
  std::vector<Polygon> footprints;
  footprints.reserve(boxes.size());
  for (const OrientedBox& b : boxes) {
    footprints.push_back(box_polygon(b));
  }
  return union_polygons(footprints);
}

bool sweep_touches(const CtrvState& s, const OrientedBox& box, double horizon, double step,
                   const Polygon& p) {
  constexpr double kAreaEps = 1e-12;
  const Vec2 target_center = polygon_centroid(p);
  const double target_radius = polygon_circumradius(p, target_center);
  const double box_radius = 0.5 * std::hypot(box.length_m, box.width_m);
  for (const OrientedBox& b : swept_boxes(s, box, horizon, step)) {
    const double reach = box_radius + target_radius;
    if ((b.center - target_center).norm_sq() > reach * reach) continue;
    if (box_polygon_intersection_area(b, p) > kAreaEps) return true;
  }
  return false;
}

}  // namespace scenmine
