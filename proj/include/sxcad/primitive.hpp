#pragma once

#include <variant>
#include <vector>

#include "sxcad/geom.hpp"

namespace sxcad {

struct Segment {
  Vec2 a, b;
  bool operator==(const Segment&) const = default;
};

// Three-point arc: start, a point on the arc between the endpoints, end.
struct ArcPrim {
  Vec2 a, m, b;
  bool operator==(const ArcPrim&) const = default;
};

struct CirclePrim {
  Vec2 c;
  double r = 0.0;
  bool ccw = true;  // traversal direction as a loop boundary
  bool operator==(const CirclePrim&) const = default;
};

using Primitive2D = std::variant<Segment, ArcPrim, CirclePrim>;

// Derived circular geometry of an arc. `sweep` is the positive central
// angle covered when walking from `a0` in direction `ccw`.
struct ArcGeom {
  Vec2 center;
  double r = 0.0;
  double a0 = 0.0;
  double sweep = 0.0;
  bool ccw = true;
};

bool arc_collinear(const ArcPrim& arc);
ArcGeom arc_geom(const ArcPrim& arc);

Vec2 prim_start(const Primitive2D& p);
Vec2 prim_end(const Primitive2D& p);
Vec2 prim_point_at(const Primitive2D& p, double t);  // t in [0,1]
Vec2 prim_tangent_at(const Primitive2D& p, double t);
double prim_length(const Primitive2D& p);
Aabb2 prim_bbox(const Primitive2D& p);
double prim_distance(const Primitive2D& p, Vec2 q);
Primitive2D prim_reversed(const Primitive2D& p);

// Polygonization with bounded chordal error; returns points from t=0 to t=1
// inclusive. Closed circles return their start point at both ends.
std::vector<Vec2> prim_polygonize(const Primitive2D& p, double chord_tol);

// true if angle theta lies on the swept span (inclusive endpoints)
bool angle_on_arc(const ArcGeom& g, double theta);

// Intersections of two primitives, as points. Tolerance is used for
// near-tangent and endpoint coincidence decisions.
std::vector<Vec2> prim_intersect(const Primitive2D& a, const Primitive2D& b, double eps);

}  // namespace sxcad
