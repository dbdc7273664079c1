// Independent reference implementations used to check the library. Nothing
// here may call the code paths it verifies.

#ifndef SCENMINE_TESTS_ORACLES_HPP_
#define SCENMINE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "scenmine/geometry.hpp"

namespace oracles {

using scenmine::OrientedBox;
using scenmine::Polygon;
using scenmine::Vec2;

// Winding-number point-in-polygon (the library uses crossing counts).
inline bool point_in_polygon_winding(const Vec2& pt, const Polygon& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  int winding = 0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = v[j];
    const Vec2& b = v[i];
    const double cross = (b.x - a.x) * (pt.y - a.y) - (pt.x - a.x) * (b.y - a.y);
    if (a.y <= pt.y) {
      if (b.y > pt.y && cross > 0.0) ++winding;
    } else {
      if (b.y <= pt.y && cross < 0.0) --winding;
    }
  }
  return winding != 0;
}

inline bool point_in_obb(const Vec2& pt, const OrientedBox& box) {
  const double c = std::cos(box.yaw);
  const double s = std::sin(box.yaw);
  const Vec2 d = pt - box.center;
  const double local_x = c * d.x + s * d.y;
  const double local_y = -s * d.x + c * d.y;
  return std::abs(local_x) <= 0.5 * box.length_m && std::abs(local_y) <= 0.5 * box.width_m;
}

struct SampleBox {
  double min_x, min_y, max_x, max_y;
  double area() const { return (max_x - min_x) * (max_y - min_y); }
};

inline SampleBox bounding_box(const Polygon& p) {
  SampleBox b{p.vertices[0].x, p.vertices[0].y, p.vertices[0].x, p.vertices[0].y};
  for (const Vec2& v : p.vertices) {
    b.min_x = std::min(b.min_x, v.x);
    b.min_y = std::min(b.min_y, v.y);
    b.max_x = std::max(b.max_x, v.x);
    b.max_y = std::max(b.max_y, v.y);
  }
  return b;
}

inline SampleBox merge(const SampleBox& a, const SampleBox& b) {
  return {std::min(a.min_x, b.min_x), std::min(a.min_y, b.min_y), std::max(a.max_x, b.max_x),
          std::max(a.max_y, b.max_y)};
}

inline SampleBox intersect(const SampleBox& a, const SampleBox& b) {
  return {std::max(a.min_x, b.min_x), std::max(a.min_y, b.min_y), std::min(a.max_x, b.max_x),
          std::min(a.max_y, b.max_y)};
}

// Monte-Carlo area of a membership predicate over a sampling box.
template <typename Member>
double mc_area(const SampleBox& box, std::size_t samples, std::uint64_t seed, Member member) {
  if (box.max_x <= box.min_x || box.max_y <= box.min_y) return 0.0;
  std::mt19937_64 gen(seed);
  auto uniform01 = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vec2 pt{box.min_x + (box.max_x - box.min_x) * uniform01(),
                  box.min_y + (box.max_y - box.min_y) * uniform01()};
    if (member(pt)) ++hits;
  }
  return box.area() * static_cast<double>(hits) / static_cast<double>(samples);
}

inline double mc_intersection_area(const Polygon& a, const Polygon& b, std::size_t samples,
                                   std::uint64_t seed) {
  const SampleBox box = intersect(bounding_box(a), bounding_box(b));
  return mc_area(box, samples, seed, [&](const Vec2& pt) {
    return point_in_polygon_winding(pt, a) && point_in_polygon_winding(pt, b);
  });
}

inline double mc_union_area(const std::vector<Polygon>& parts, std::size_t samples,
                            std::uint64_t seed) {
  SampleBox box = bounding_box(parts.front());
  for (const Polygon& p : parts) box = merge(box, bounding_box(p));
  return mc_area(box, samples, seed, [&](const Vec2& pt) {
    for (const Polygon& p : parts) {
      if (point_in_polygon_winding(pt, p)) return true;
    }
    return false;
  });
}

inline double mc_obb_union_area(const std::vector<OrientedBox>& boxes, std::size_t samples,
                                std::uint64_t seed) {
  std::vector<Polygon> parts;
  parts.reserve(boxes.size());
  for (const OrientedBox& b : boxes) parts.push_back(scenmine::box_polygon(b));
  SampleBox box = bounding_box(parts.front());
  for (const Polygon& p : parts) box = merge(box, bounding_box(p));
  return mc_area(box, samples, seed, [&](const Vec2& pt) {
    for (const OrientedBox& b : boxes) {
      if (point_in_obb(pt, b)) return true;
    }
    return false;
  });
}

// Convex polygon from the hull of random points in a disc.
inline Polygon random_convex_polygon(std::mt19937_64& gen, const Vec2& center, double radius) {
  auto uniform01 = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  std::vector<Vec2> pts;
  for (int i = 0; i < 12; ++i) {
    const double ang = 2.0 * M_PI * uniform01();
    const double r = radius * std::sqrt(uniform01());
    pts.push_back({center.x + r * std::cos(ang), center.y + r * std::sin(ang)});
  }
  // Gift wrapping.
  std::size_t start = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x < pts[start].x || (pts[i].x == pts[start].x && pts[i].y < pts[start].y)) {
      start = i;
    }
  }
  std::vector<Vec2> hull;
  std::size_t cur = start;
  do {
    hull.push_back(pts[cur]);
    std::size_t next = (cur + 1) % pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double turn = (pts[next] - pts[cur]).cross(pts[i] - pts[cur]);
      if (turn > 0.0) next = i;
    }
    cur = next;
  } while (cur != start && hull.size() <= pts.size());
  return Polygon{hull};
}

// Box overlap decided by corner containment plus edge crossings; independent
// from the library's separating-axis test.
inline bool boxes_overlap_reference(const OrientedBox& a, const OrientedBox& b) {
  const Polygon pa = scenmine::box_polygon(a);
  const Polygon pb = scenmine::box_polygon(b);
  for (const Vec2& v : pa.vertices) {
    if (point_in_obb(v, b)) return true;
  }
  for (const Vec2& v : pb.vertices) {
    if (point_in_obb(v, a)) return true;
  }
  auto orient = [](const Vec2& p, const Vec2& q, const Vec2& r) {
    const double d = (q - p).cross(r - p);
    return (d > 0.0) - (d < 0.0);
  };
  auto on_seg = [](const Vec2& p, const Vec2& q, const Vec2& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
  };
  for (int i = 0; i < 4; ++i) {
    const Vec2& p1 = pa.vertices[i];
    const Vec2& p2 = pa.vertices[(i + 1) % 4];
    for (int j = 0; j < 4; ++j) {
      const Vec2& q1 = pb.vertices[j];
      const Vec2& q2 = pb.vertices[(j + 1) % 4];
      const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
      const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
      if (o1 != o2 && o3 != o4) return true;
      if (o1 == 0 && on_seg(p1, p2, q1)) return true;
      if (o2 == 0 && on_seg(p1, p2, q2)) return true;
      if (o3 == 0 && on_seg(q1, q2, p1)) return true;
      if (o4 == 0 && on_seg(q1, q2, p2)) return true;
    }
  }
  return false;
}

// Fixed-state CTRV rollout by brute force: tiny RK4 steps of the kinematic
// ODE, no closed form.
inline scenmine::CtrvState rk4_ctrv(const scenmine::CtrvState& s, double tau, int substeps) {
  double x = s.x, y = s.y, psi = s.yaw;
  const double h = tau / substeps;
  for (int i = 0; i < substeps; ++i) {
    auto fx = [&](double p) { return s.v * std::cos(p); };
    auto fy = [&](double p) { return s.v * std::sin(p); };
    const double k1x = fx(psi), k1y = fy(psi);
    const double k2x = fx(psi + 0.5 * h * s.omega), k2y = fy(psi + 0.5 * h * s.omega);
    const double k3x = k2x, k3y = k2y;  // psi-dot is constant
    const double k4x = fx(psi + h * s.omega), k4y = fy(psi + h * s.omega);
    x += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    y += h / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
    psi += h * s.omega;
  }
  scenmine::CtrvState out = s;
  out.x = x;
  out.y = y;
  out.yaw = scenmine::wrap_angle(psi);
  return out;
}

// Time-aligned collision by plain stepping: both actors advanced with the
// reference integrator, overlap decided by the reference box test.
inline bool collision_rollout_reference(const scenmine::CtrvState& si, double li, double wi,
                                        const scenmine::CtrvState& sj, double lj, double wj,
                                        double t_p, double ts) {
  const int steps = static_cast<int>(std::floor(t_p / ts + 1e-9));
  for (int k = 1; k <= steps; ++k) {
    const scenmine::CtrvState a = rk4_ctrv(si, k * ts, 8 * k);
    const scenmine::CtrvState b = rk4_ctrv(sj, k * ts, 8 * k);
    if (boxes_overlap_reference(OrientedBox{{a.x, a.y}, li, wi, a.yaw},
                                OrientedBox{{b.x, b.y}, lj, wj, b.yaw})) {
      return true;
    }
  }
  return false;
}

}  // namespace oracles

#endif  // SCENMINE_TESTS_ORACLES_HPP_
