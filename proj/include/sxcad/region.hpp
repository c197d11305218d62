#pragma once

#include <vector>

#include "sxcad/profile.hpp"
#include "sxcad/primitive.hpp"

namespace sxcad {

enum class BoolOp { Union, Cut };

// Planar region bounded by oriented polygon rings (material left of travel:
// outer rings ccw, holes cw). Every vertex remembers the exact source
// primitive its outgoing edge was discretized from, so arcs and circles can
// be re-fitted exactly after booleans.
struct Region2D {
  struct Vertex {
    Vec2 p;
    int prim = -1;  // index into prims for the edge starting here
  };
  struct Ring {
    std::vector<Vertex> v;
  };

  std::vector<Ring> rings;
  std::vector<Primitive2D> prims;

  bool empty() const { return rings.empty(); }
  Aabb2 bbox() const;
  double polygon_area() const;  // signed, all rings
};

struct RegionOptions {
  double chord_tol = 0.05;  // max chordal error when discretizing curves
};

// Region from one closed primitive chain (assumed closed, becomes a single
// ring; orientation kept as given).
Region2D region_from_loop(const Loop& loop, const RegionOptions& opt);

// Pointwise boolean: union adds the shape, cut subtracts it. Throws
// EmptyResult when nothing remains and BooleanFailure when the boundary
// cannot be stitched.
Region2D apply_boolean(const Region2D& region, const Region2D& shape, BoolOp op,
                       const RegionOptions& opt);

// Recovers exact boundary loops (segments/arcs/circles) from the polygonized
// rings using provenance tags. Outer flags are set from ring orientation.
std::vector<Loop> extract_boundary_loops(const Region2D& region, const RegionOptions& opt);

// even-odd containment over all rings
bool region_contains(const Region2D& region, Vec2 p);

}  // namespace sxcad
