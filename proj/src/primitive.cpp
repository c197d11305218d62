#include "sxcad/primitive.hpp"

#include <cmath>
#include <numbers>

namespace sxcad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// angle difference walking from `from` to `to` counterclockwise, in [0, 2pi)
double ccw_delta(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d < 0) d += kTwoPi;
  return d;
}

}  // namespace

bool arc_collinear(const ArcPrim& arc) {
  double area2 = std::abs(cross(arc.m - arc.a, arc.b - arc.a));
  double scale = std::max({norm(arc.m - arc.a), norm(arc.b - arc.a), norm(arc.b - arc.m)});
  return area2 <= 1e-12 * scale * scale;
}

ArcGeom arc_geom(const ArcPrim& arc) {
  // circumcenter of (a, m, b)
  Vec2 a = arc.a, m = arc.m, b = arc.b;
  double d = 2.0 * (a.x * (m.y - b.y) + m.x * (b.y - a.y) + b.x * (a.y - m.y));
  double ux = ((a.x * a.x + a.y * a.y) * (m.y - b.y) + (m.x * m.x + m.y * m.y) * (b.y - a.y) +
               (b.x * b.x + b.y * b.y) * (a.y - m.y)) /
              d;
  double uy = ((a.x * a.x + a.y * a.y) * (b.x - m.x) + (m.x * m.x + m.y * m.y) * (a.x - b.x) +
               (b.x * b.x + b.y * b.y) * (m.x - a.x)) /
              d;
  ArcGeom g;
  g.center = {ux, uy};
  g.r = dist(a, g.center);
  g.ccw = cross(m - a, b - m) > 0.0;
  g.a0 = std::atan2(a.y - uy, a.x - ux);
  double a1 = std::atan2(b.y - uy, b.x - ux);
  g.sweep = g.ccw ? ccw_delta(g.a0, a1) : ccw_delta(a1, g.a0);
  if (g.sweep == 0.0) g.sweep = kTwoPi;  // identical endpoints: full turn
  return g;
}

bool angle_on_arc(const ArcGeom& g, double theta) {
  double d = g.ccw ? ccw_delta(g.a0, theta) : ccw_delta(theta, g.a0);
  return d <= g.sweep + 1e-12;
}

Vec2 prim_start(const Primitive2D& p) {
  if (auto* s = std::get_if<Segment>(&p)) return s->a;
  if (auto* a = std::get_if<ArcPrim>(&p)) return a->a;
  const auto& c = std::get<CirclePrim>(p);
  return {c.c.x + c.r, c.c.y};
}

Vec2 prim_end(const Primitive2D& p) {
  if (auto* s = std::get_if<Segment>(&p)) return s->b;
  if (auto* a = std::get_if<ArcPrim>(&p)) return a->b;
  const auto& c = std::get<CirclePrim>(p);
  return {c.c.x + c.r, c.c.y};
}

Vec2 prim_point_at(const Primitive2D& p, double t) {
  if (auto* s = std::get_if<Segment>(&p)) return s->a + t * (s->b - s->a);
  if (auto* a = std::get_if<ArcPrim>(&p)) {
    ArcGeom g = arc_geom(*a);
    double th = g.a0 + (g.ccw ? 1.0 : -1.0) * g.sweep * t;
    return {g.center.x + g.r * std::cos(th), g.center.y + g.r * std::sin(th)};
  }
  const auto& c = std::get<CirclePrim>(p);
  double th = (c.ccw ? 1.0 : -1.0) * kTwoPi * t;
  return {c.c.x + c.r * std::cos(th), c.c.y + c.r * std::sin(th)};
}

Vec2 prim_tangent_at(const Primitive2D& p, double t) {
  if (auto* s = std::get_if<Segment>(&p)) {
    Vec2 d = s->b - s->a;
    double n = norm(d);
    return n > 0 ? (1.0 / n) * d : Vec2{1, 0};
  }
  if (auto* a = std::get_if<ArcPrim>(&p)) {
    ArcGeom g = arc_geom(*a);
    double th = g.a0 + (g.ccw ? 1.0 : -1.0) * g.sweep * t;
    Vec2 radial{std::cos(th), std::sin(th)};
    return g.ccw ? perp(radial) : -1.0 * perp(radial);
  }
  const auto& c = std::get<CirclePrim>(p);
  double th = (c.ccw ? 1.0 : -1.0) * kTwoPi * t;
  Vec2 radial{std::cos(th), std::sin(th)};
  return c.ccw ? perp(radial) : -1.0 * perp(radial);
}

double prim_length(const Primitive2D& p) {
  if (auto* s = std::get_if<Segment>(&p)) return dist(s->a, s->b);
  if (auto* a = std::get_if<ArcPrim>(&p)) {
    ArcGeom g = arc_geom(*a);
    return g.r * g.sweep;
  }
  const auto& c = std::get<CirclePrim>(p);
  return kTwoPi * c.r;
}

Aabb2 prim_bbox(const Primitive2D& p) {
  Aabb2 box;
  if (auto* s = std::get_if<Segment>(&p)) {
    box.grow(s->a);
    box.grow(s->b);
    return box;
  }
  if (auto* a = std::get_if<ArcPrim>(&p)) {
    ArcGeom g = arc_geom(*a);
    box.grow(a->a);
    box.grow(a->b);
    const double axes[4] = {0.0, std::numbers::pi / 2, std::numbers::pi, 3 * std::numbers::pi / 2};
    for (double th : axes)
      if (angle_on_arc(g, th))
        box.grow({g.center.x + g.r * std::cos(th), g.center.y + g.r * std::sin(th)});
    return box;
  }
  const auto& c = std::get<CirclePrim>(p);
  box.grow({c.c.x - c.r, c.c.y - c.r});
  box.grow({c.c.x + c.r, c.c.y + c.r});
  return box;
}

double prim_distance(const Primitive2D& p, Vec2 q) {
  if (auto* s = std::get_if<Segment>(&p)) {
    Vec2 d = s->b - s->a;
    double len2 = dot(d, d);
    double t = len2 > 0 ? std::clamp(dot(q - s->a, d) / len2, 0.0, 1.0) : 0.0;
    return dist(q, s->a + t * d);
  }
  if (auto* a = std::get_if<ArcPrim>(&p)) {
    ArcGeom g = arc_geom(*a);
    double th = std::atan2(q.y - g.center.y, q.x - g.center.x);
    if (angle_on_arc(g, th)) return std::abs(dist(q, g.center) - g.r);
    return std::min(dist(q, a->a), dist(q, a->b));
  }
  const auto& c = std::get<CirclePrim>(p);
  return std::abs(dist(q, c.c) - c.r);
}

Primitive2D prim_reversed(const Primitive2D& p) {
  if (auto* s = std::get_if<Segment>(&p)) return Segment{s->b, s->a};
  if (auto* a = std::get_if<ArcPrim>(&p)) return ArcPrim{a->b, a->m, a->a};
  auto c = std::get<CirclePrim>(p);
  c.ccw = !c.ccw;
  return c;
}

std::vector<Vec2> prim_polygonize(const Primitive2D& p, double chord_tol) {
  std::vector<Vec2> pts;
  if (auto* s = std::get_if<Segment>(&p)) {
    pts.push_back(s->a);
    pts.push_back(s->b);
    return pts;
  }
  double r, sweep;
  if (auto* a = std::get_if<ArcPrim>(&p)) {
    ArcGeom g = arc_geom(*a);
    r = g.r;
    sweep = g.sweep;
  } else {
    r = std::get<CirclePrim>(p).r;
    sweep = kTwoPi;
  }
  double dtheta = kTwoPi;
  if (r > 0 && chord_tol < r) dtheta = 2.0 * std::acos(1.0 - chord_tol / r);
  int n = std::max(sweep >= kTwoPi - 1e-9 ? 16 : 4, (int)std::ceil(sweep / dtheta));
  pts.reserve(n + 1);
  for (int i = 0; i <= n; ++i) pts.push_back(prim_point_at(p, (double)i / n));
  return pts;
}

std::vector<Vec2> prim_intersect(const Primitive2D& a, const Primitive2D& b, double eps) {
  // Segment/segment is the only pair needed exactly; curved primitives are
  // compared through polygonized proxies by the region machinery. This exact
  // version handles all pairs for loop-validation purposes.
  std::vector<Vec2> out;
  auto seg_seg = [&](const Segment& s, const Segment& t) {
    Vec2 r = s.b - s.a, q = t.b - t.a;
    double den = cross(r, q);
    if (std::abs(den) < 1e-14 * std::max(norm(r) * norm(q), 1.0)) return;
    double u = cross(t.a - s.a, q) / den;
    double v = cross(t.a - s.a, r) / den;
    double tol_u = norm(r) > 0 ? eps / norm(r) : 0.0;
    double tol_v = norm(q) > 0 ? eps / norm(q) : 0.0;
    if (u >= -tol_u && u <= 1 + tol_u && v >= -tol_v && v <= 1 + tol_v)
      out.push_back(s.a + u * r);
  };
  auto circle_of = [](const Primitive2D& p, ArcGeom& g) {
    if (auto* arc = std::get_if<ArcPrim>(&p)) {
      g = arc_geom(*arc);
      return true;
    }
    if (auto* c = std::get_if<CirclePrim>(&p)) {
      g = ArcGeom{c->c, c->r, 0.0, kTwoPi, c->ccw};
      return true;
    }
    return false;
  };
  auto on_span = [&](const Primitive2D& p, const ArcGeom& g, Vec2 q) {
    if (std::holds_alternative<CirclePrim>(p)) return true;
    double th = std::atan2(q.y - g.center.y, q.x - g.center.x);
    return angle_on_arc(g, th) || dist(q, prim_start(p)) <= eps || dist(q, prim_end(p)) <= eps;
  };
  auto circle_line = [&](const Primitive2D& cp, const ArcGeom& g, const Segment& s) {
    Vec2 d = s.b - s.a;
    double len2 = dot(d, d);
    if (len2 == 0) return;
    double t0 = dot(g.center - s.a, d) / len2;
    Vec2 foot = s.a + t0 * d;
    double h2 = g.r * g.r - dot(foot - g.center, foot - g.center);
    if (h2 < -eps * g.r) return;
    double h = std::sqrt(std::max(0.0, h2));
    double step = h / std::sqrt(len2);
    for (double t : {t0 - step, t0 + step}) {
      if (t < -eps / std::sqrt(len2) || t > 1 + eps / std::sqrt(len2)) continue;
      Vec2 q = s.a + t * d;
      if (on_span(cp, g, q)) out.push_back(q);
      if (h == 0.0) break;
    }
  };

  ArcGeom ga, gb;
  bool ca = circle_of(a, ga), cb = circle_of(b, gb);
  if (!ca && !cb) {
    seg_seg(std::get<Segment>(a), std::get<Segment>(b));
  } else if (ca && !cb) {
    circle_line(a, ga, std::get<Segment>(b));
  } else if (!ca && cb) {
    circle_line(b, gb, std::get<Segment>(a));
  } else {
    // circle/circle
    double d = dist(ga.center, gb.center);
    if (d < 1e-14) return out;  // concentric: none or infinite
    if (d > ga.r + gb.r + eps || d < std::abs(ga.r - gb.r) - eps) return out;
    double x = (d * d + ga.r * ga.r - gb.r * gb.r) / (2 * d);
    double h2 = ga.r * ga.r - x * x;
    double h = std::sqrt(std::max(0.0, h2));
    Vec2 u = (1.0 / d) * (gb.center - ga.center);
    Vec2 base = ga.center + x * u;
    for (Vec2 q : {base + h * perp(u), base - h * perp(u)}) {
      if (on_span(a, ga, q) && on_span(b, gb, q)) out.push_back(q);
      if (h == 0.0) break;
    }
  }
  return out;
}

}  // namespace sxcad
