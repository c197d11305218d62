#include "sxcad/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sxcad/error.hpp"

namespace sxcad {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ccw_delta(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d < 0) d += kTwoPi;
  return d;
}
}  // namespace

double loop_signed_area(const Loop& loop) {
  if (loop.prims.size() == 1) {
    if (auto* c = std::get_if<CirclePrim>(&loop.prims[0])) {
      double a = std::numbers::pi * c->r * c->r;
      return c->ccw ? a : -a;
    }
  }
  // shoelace over chord endpoints plus circular-segment corrections
  double area = 0.0;
  for (const auto& p : loop.prims) {
    Vec2 a = prim_start(p), b = prim_end(p);
    area += 0.5 * cross(a, b);
    if (auto* arc = std::get_if<ArcPrim>(&p)) {
      ArcGeom g = arc_geom(*arc);
      double seg = 0.5 * g.r * g.r * (g.sweep - std::sin(g.sweep));
      area += g.ccw ? seg : -seg;
    }
  }
  return area;
}

double loop_length_min(const Loop& loop) {
  double m = std::numeric_limits<double>::max();
  for (const auto& p : loop.prims) m = std::min(m, prim_length(p));
  return m;
}

Aabb2 loop_bbox(const Loop& loop) {
  Aabb2 box;
  for (const auto& p : loop.prims) box.grow(prim_bbox(p));
  return box;
}

Aabb2 profile_bbox(const Profile& profile) { return loop_bbox(profile.outer); }

double profile_area(const Profile& profile) {
  double a = loop_signed_area(profile.outer);
  for (const auto& in : profile.inners) a += loop_signed_area(in);  // inners are negative
  return a;
}

Loop loop_reversed(const Loop& loop) {
  Loop out;
  out.is_outer = loop.is_outer;
  out.prims.reserve(loop.prims.size());
  for (auto it = loop.prims.rbegin(); it != loop.prims.rend(); ++it)
    out.prims.push_back(prim_reversed(*it));
  return out;
}

namespace {

// Crossing counter for the horizontal ray {(x, p.y) : x > p.x}. Arcs and
// circles are split at their y-extrema into y-monotone pieces so the
// half-open endpoint rule applies uniformly.
struct CrossCounter {
  Vec2 p;
  int crossings = 0;

  void segment(Vec2 a, Vec2 b) {
    if ((a.y <= p.y) == (b.y <= p.y)) return;
    double t = (p.y - a.y) / (b.y - a.y);
    if (a.x + t * (b.x - a.x) > p.x) crossings++;
  }

  // monotone circular piece on circle (c, r) between angles t0 and t1
  // walked counterclockwise (t1 = t0 + d, d in (0, pi])
  void mono_arc(Vec2 c, double r, double t0, double t1) {
    double y0 = c.y + r * std::sin(t0);
    double y1 = c.y + r * std::sin(t1);
    if ((y0 <= p.y) == (y1 <= p.y)) return;
    double dy = p.y - c.y;
    double h2 = r * r - dy * dy;
    double h = std::sqrt(std::max(0.0, h2));
    // piece lies entirely in the right half (cos >= 0) or left half
    double mid = 0.5 * (t0 + t1);
    double x = std::cos(mid) >= 0.0 ? c.x + h : c.x - h;
    if (x > p.x) crossings++;
  }

  void arc_span(Vec2 c, double r, double a0, double sweep, bool ccw) {
    // normalize to a ccw walk
    double start = ccw ? a0 : a0 - sweep;
    double remaining = sweep;
    double t = start;
    while (remaining > 1e-15) {
      // next y-extremum strictly ahead of t (angles pi/2 + k*pi)
      double k = std::ceil((t - std::numbers::pi / 2) / std::numbers::pi + 1e-12);
      double next = std::numbers::pi / 2 + k * std::numbers::pi;
      double step = std::min(remaining, next - t);
      if (step < 1e-15) step = std::min(remaining, std::numbers::pi);
      mono_arc(c, r, t, t + step);
      t += step;
      remaining -= step;
    }
  }

  void prim(const Primitive2D& pr) {
    if (auto* s = std::get_if<Segment>(&pr)) {
      segment(s->a, s->b);
    } else if (auto* a = std::get_if<ArcPrim>(&pr)) {
      ArcGeom g = arc_geom(*a);
      arc_span(g.center, g.r, g.a0, g.sweep, g.ccw);
    } else {
      const auto& c = std::get<CirclePrim>(pr);
      arc_span(c.c, c.r, 0.0, kTwoPi, true);
    }
  }
};

}  // namespace

bool point_in_loop_parity(const Loop& loop, Vec2 p) {
  CrossCounter cc{p};
  for (const auto& pr : loop.prims) cc.prim(pr);
  return (cc.crossings & 1) != 0;
}

double loop_distance(const Loop& loop, Vec2 p) {
  double d = std::numeric_limits<double>::max();
  for (const auto& pr : loop.prims) d = std::min(d, prim_distance(pr, p));
  return d;
}

bool point_in_profile(const Profile& profile, Vec2 p, double eps) {
  if (eps > 0.0) {
    if (loop_distance(profile.outer, p) <= eps) return true;
    for (const auto& in : profile.inners)
      if (loop_distance(in, p) <= eps) return true;
  } else if (eps < 0.0) {
    if (loop_distance(profile.outer, p) <= -eps) return false;
    for (const auto& in : profile.inners)
      if (loop_distance(in, p) <= -eps) return false;
  }
  if (!point_in_loop_parity(profile.outer, p)) return false;
  for (const auto& in : profile.inners)
    if (point_in_loop_parity(in, p)) return false;
  return true;
}

namespace {

Vec2 loop_probe_point(const Loop& loop) { return prim_start(loop.prims.front()); }

bool loop_contains_loop(const Loop& outer, const Loop& inner) {
  return point_in_loop_parity(outer, loop_probe_point(inner));
}

void check_loop_intersections(const std::vector<Loop>& loops, double eps) {
  // self-intersection: non-adjacent primitive pairs within a loop
  for (const auto& loop : loops) {
    size_t n = loop.prims.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
        auto hits = prim_intersect(loop.prims[i], loop.prims[j], eps);
        for (Vec2 h : hits) {
          if (adjacent) {
            // shared endpoints are fine
            if (dist(h, prim_end(loop.prims[i])) <= 10 * eps ||
                dist(h, prim_start(loop.prims[i])) <= 10 * eps)
              continue;
          }
          throw CadError(CadError::Kind::IntersectingLoops, "loop self-intersection");
        }
      }
    }
  }
  // pairwise loop intersections
  for (size_t a = 0; a < loops.size(); ++a) {
    for (size_t b = a + 1; b < loops.size(); ++b) {
      Aabb2 ba = loop_bbox(loops[a]), bb = loop_bbox(loops[b]);
      if (ba.min.x > bb.max.x + eps || bb.min.x > ba.max.x + eps ||
          ba.min.y > bb.max.y + eps || bb.min.y > ba.max.y + eps)
        continue;
      for (const auto& pa : loops[a].prims)
        for (const auto& pb : loops[b].prims)
          if (!prim_intersect(pa, pb, eps).empty())
            throw CadError(CadError::Kind::IntersectingLoops, "loops intersect");
    }
  }
}

}  // namespace

std::vector<Profile> group_loops_into_profiles(std::vector<Loop> loops, double eps) {
  (void)eps;
  // orient by current signed area, then assign holes to smallest container
  std::vector<size_t> outers, inners;
  for (size_t i = 0; i < loops.size(); ++i) {
    double a = loop_signed_area(loops[i]);
    bool outer = true;
    for (size_t j = 0; j < loops.size(); ++j) {
      if (i == j) continue;
      if (loop_contains_loop(loops[j], loops[i])) outer = !outer;
    }
    // normalize orientation: outer ccw, inner cw
    if (outer != (a > 0)) loops[i] = loop_reversed(loops[i]);
    loops[i].is_outer = outer;
    (outer ? outers : inners).push_back(i);
  }
  std::vector<Profile> profiles;
  std::vector<size_t> owner_of(loops.size(), SIZE_MAX);
  for (size_t oi = 0; oi < outers.size(); ++oi) {
    Profile pr;
    pr.outer = loops[outers[oi]];
    profiles.push_back(std::move(pr));
  }
  for (size_t idx : inners) {
    double best_area = std::numeric_limits<double>::max();
    size_t best = SIZE_MAX;
    for (size_t oi = 0; oi < outers.size(); ++oi) {
      const Loop& out = loops[outers[oi]];
      if (!loop_contains_loop(out, loops[idx])) continue;
      double a = std::abs(loop_signed_area(out));
      if (a < best_area) {
        best_area = a;
        best = oi;
      }
    }
    if (best == SIZE_MAX)
      throw CadError(CadError::Kind::IntersectingLoops, "hole loop not contained in any outer loop");
    owner_of[idx] = best;
    profiles[best].inners.push_back(loops[idx]);
  }
  return profiles;
}

std::vector<Profile> validate_topology(std::vector<Loop> loops, const TopologyOptions& opt) {
  if (loops.empty()) throw CadError(CadError::Kind::ZeroArea, "no loops");
  for (const auto& loop : loops) {
    if (loop.prims.empty()) throw CadError(CadError::Kind::ZeroArea, "empty loop");
    for (const auto& p : loop.prims) {
      if (prim_length(p) < opt.min_len)
        throw CadError(CadError::Kind::DegeneratePrimitive, "primitive shorter than minimum length");
      if (auto* arc = std::get_if<ArcPrim>(&p))
        if (arc_collinear(*arc))
          throw CadError(CadError::Kind::DegeneratePrimitive, "arc through collinear points");
      if (auto* c = std::get_if<CirclePrim>(&p))
        if (c->r <= 0)
          throw CadError(CadError::Kind::DegeneratePrimitive, "circle with nonpositive radius");
    }
    // closure
    if (loop.prims.size() > 1 || !std::holds_alternative<CirclePrim>(loop.prims[0])) {
      for (size_t i = 0; i < loop.prims.size(); ++i) {
        Vec2 e = prim_end(loop.prims[i]);
        Vec2 s = prim_start(loop.prims[(i + 1) % loop.prims.size()]);
        if (dist(e, s) > std::max(opt.eps, 1e-9))
          throw CadError(CadError::Kind::ZeroArea, "loop chain not closed");
      }
    }
    double area = std::abs(loop_signed_area(loop));
    Aabb2 bb = loop_bbox(loop);
    double d = bb.diameter();
    if (area <= 1e-12 * std::max(1.0, d * d))
      throw CadError(CadError::Kind::ZeroArea, "loop encloses no area");
  }
  check_loop_intersections(loops, opt.eps);
  auto profiles = group_loops_into_profiles(std::move(loops), opt.eps);
  // holes must not nest inside each other
  for (const auto& pr : profiles)
    for (size_t i = 0; i < pr.inners.size(); ++i)
      for (size_t j = 0; j < pr.inners.size(); ++j)
        if (i != j && loop_contains_loop(pr.inners[i], pr.inners[j]))
          throw CadError(CadError::Kind::IntersectingLoops, "nested hole loops");
  return profiles;
}

}  // namespace sxcad
