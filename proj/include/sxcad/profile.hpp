#pragma once

#include <vector>

#include "sxcad/primitive.hpp"

namespace sxcad {

// Closed chain of primitives. Outer loops run counterclockwise (positive
// signed area), inner hole loops clockwise.
struct Loop {
  std::vector<Primitive2D> prims;
  bool is_outer = true;
  bool operator==(const Loop&) const = default;
};

struct Profile {
  Loop outer;
  std::vector<Loop> inners;
  bool operator==(const Profile&) const = default;
};

double loop_signed_area(const Loop& loop);
double loop_length_min(const Loop& loop);
Aabb2 loop_bbox(const Loop& loop);
Aabb2 profile_bbox(const Profile& profile);
double profile_area(const Profile& profile);
Loop loop_reversed(const Loop& loop);

// Even-odd crossing parity of a horizontal ray from p; boundary not handled
// here (callers decide with a proximity test first).
bool point_in_loop_parity(const Loop& loop, Vec2 p);

double loop_distance(const Loop& loop, Vec2 p);

// true iff p is inside outer and outside all inner loops; points within eps
// of the boundary count as inside. eps < 0 makes the test strict instead.
bool point_in_profile(const Profile& profile, Vec2 p, double eps);

struct TopologyOptions {
  double min_len = 0.0;   // reject primitives shorter than this
  double eps = 1e-9;      // coincidence tolerance
};

// Checks loop validity (primitive lengths, self/pairwise intersection,
// nonzero area), groups loops into profiles by containment, and normalizes
// orientations. Throws CadError on violations.
std::vector<Profile> validate_topology(std::vector<Loop> loops, const TopologyOptions& opt);

// Containment grouping only (throws on loops that fit nowhere).
std::vector<Profile> group_loops_into_profiles(std::vector<Loop> loops, double eps);

}  // namespace sxcad
