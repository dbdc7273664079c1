#ifndef SCENMINE_GEOMETRY_HPP_
#define SCENMINE_GEOMETRY_HPP_

#include <cmath>
#include <vector>

namespace scenmine {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }
};

// Simple planar polygon, vertices in counter-clockwise order, implicitly
// closed. No holes.
struct Polygon {
  std::vector<Vec2> vertices;

  Polygon() = default;
  explicit Polygon(std::vector<Vec2> v) : vertices(std::move(v)) {}
  std::size_t size() const { return vertices.size(); }
};

// Union results. `parts` are pairwise interior-disjoint simple CCW polygons.
// `holes` are regions enclosed by parts but not covered (a swept ring that
// closes on itself); they are subtracted in all area queries. Empty in every
// practical sweep shorter than a full circle.
struct MultiPolygon {
  std::vector<Polygon> parts;
  std::vector<Polygon> holes;

  bool empty() const { return parts.empty(); }
};

// Axis of `length_m` runs along `yaw`.
struct OrientedBox {
  Vec2 center;
  double length_m = 0.0;
  double width_m = 0.0;
  double yaw = 0.0;
};

// State vector of the constant turn rate and velocity model.
struct CtrvState {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;
  double v = 0.0;      // longitudinal speed, m/s
  double omega = 0.0;  // yaw rate, rad/s
};

// Below this turn rate the straight-line limit of the CTRV step is used.
inline constexpr double kCtrvOmegaEps = 1e-4;

// Maps any angle to (-pi, pi].
double wrap_angle(double a);

double signed_area(const Polygon& p);
double polygon_area(const Polygon& p);
double polygon_area(const MultiPolygon& mp);
bool is_ccw(const Polygon& p);
Polygon reversed(const Polygon& p);

// True iff no two non-adjacent edges intersect and no vertices coincide.
bool polygon_is_simple(const Polygon& p);

bool point_in_polygon(const Vec2& pt, const Polygon& p);

// Smallest circle center/radius queries used for pruning.
Vec2 polygon_centroid(const Polygon& p);
double polygon_circumradius(const Polygon& p, const Vec2& center);

struct Aabb {
  Vec2 lo;
  Vec2 hi;
};

Aabb polygon_aabb(const Polygon& p);

// Squared distance from a point to the box (0 inside).
double point_aabb_dist_sq(const Vec2& pt, const Aabb& box);

double intersection_area(const Polygon& a, const Polygon& b);
double intersection_area(const MultiPolygon& a, const Polygon& b);
double intersection_area(const Polygon& a, const MultiPolygon& b);
double intersection_area(const MultiPolygon& a, const MultiPolygon& b);

// Boundary touches count as intersecting.
bool polygons_intersect(const Polygon& a, const Polygon& b);

// Exact separating-axis test for two oriented boxes; touching counts.
// Equivalent to polygons_intersect(box_polygon(a), box_polygon(b)).
bool obb_intersect(const OrientedBox& a, const OrientedBox& b);

// Area of box ∩ polygon by clipping the polygon against the box's four
// half-planes. Works for any simple polygon; much cheaper than the general
// boolean op.
double box_polygon_intersection_area(const OrientedBox& box, const Polygon& p);

MultiPolygon union_polygons(const std::vector<Polygon>& parts);

// 4-vertex CCW rectangle footprint of the box.
Polygon box_polygon(const OrientedBox& b);

CtrvState ctrv_step(const CtrvState& s, double tau);

// Union of the box footprint rolled forward with CTRV at `step` intervals up
// to `horizon` (both endpoints included).
MultiPolygon swept_polygon(const CtrvState& s, const OrientedBox& box, double horizon,
                           double step);

// The box footprints that swept_polygon unions, in time order.
std::vector<OrientedBox> swept_boxes(const CtrvState& s, const OrientedBox& box,
                                     double horizon, double step);

// True iff any swept box intersects `p` with positive area. Shares the sign
// of intersection_area(swept_polygon(...), p) without building the union.
bool sweep_touches(const CtrvState& s, const OrientedBox& box, double horizon, double step,
                   const Polygon& p);

}  // namespace scenmine

#endif  // SCENMINE_GEOMETRY_HPP_
