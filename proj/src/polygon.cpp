#include "polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace heartlib {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::too_few_vertices: return "TooFewVertices";
    case errc::not_convex: return "NotConvex";
    case errc::degenerate: return "Degenerate";
    case errc::monotonicity_violation: return "MonotonicityViolation";
    case errc::degenerate_triangle: return "DegenerateTriangle";
    case errc::not_obtuse_configuration: return "NotObtuseConfiguration";
    case errc::point_too_close_to_boundary: return "PointTooCloseToBoundary";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

double coordinate_scale(const Chain& chain) {
  double s = 1.0;
  for (const auto& p : chain) s = std::max({s, std::fabs(p.x), std::fabs(p.y)});
  return s;
}

BoundingBox bounding_box(const Chain& chain) {
  if (chain.empty()) fail(errc::internal_error, "bounding box of empty chain");
  BoundingBox b{chain[0].x, chain[0].x, chain[0].y, chain[0].y};
  for (const auto& p : chain) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

ConvexPolygon make_polygon(const std::vector<Point2>& points) {
  if (points.size() < 3) fail(errc::too_few_vertices, "polygon needs at least 3 vertices");
  for (const auto& p : points)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      fail(errc::invalid_argument, "vertex coordinates must be finite");

  double scale = coordinate_scale(points);
  double eps_len = 1e-12 * scale;
  double eps_cross = 1e-12 * scale * scale;

  Chain v;
  v.reserve(points.size());
  for (const auto& p : points)
    if (v.empty() || dist(v.back(), p) > eps_len) v.push_back(p);
  while (v.size() > 1 && dist(v.front(), v.back()) <= eps_len) v.pop_back();
  if (v.size() < 3) fail(errc::degenerate, "fewer than 3 distinct vertices");

  double a2 = 0.0;
  for (size_t i = 0; i < v.size(); ++i) a2 += cross(v[i], v[(i + 1) % v.size()]);
  if (std::fabs(a2) <= 2.0 * eps_cross) fail(errc::degenerate, "polygon has zero area");
  if (a2 < 0.0) std::reverse(v.begin(), v.end());

  bool changed = true;
  while (changed && v.size() > 2) {
    changed = false;
    for (size_t i = 0; i < v.size() && v.size() > 2;) {
      size_t n = v.size();
      Point2 prev = v[(i + n - 1) % n];
      Point2 cur = v[i];
      Point2 next = v[(i + 1) % n];
      if (std::fabs(cross(cur - prev, next - cur)) <= eps_cross && dot(cur - prev, next - cur) > 0.0) {
        v.erase(v.begin() + static_cast<long>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
  if (v.size() < 3) fail(errc::degenerate, "polygon collapses to a segment");

  double turning = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    size_t n = v.size();
    Point2 e0 = v[i] - v[(i + n - 1) % n];
    Point2 e1 = v[(i + 1) % n] - v[i];
    double c = cross(e0, e1);
    if (c <= eps_cross) fail(errc::not_convex, "vertex sequence is not strictly convex");
    turning += std::atan2(c, dot(e0, e1));
  }
  if (std::fabs(turning - 2.0 * kPi) > 1e-6) fail(errc::not_convex, "vertex sequence winds more than once");

  size_t start = 0;
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i].x < v[start].x || (v[i].x == v[start].x && v[i].y < v[start].y)) start = i;
  std::rotate(v.begin(), v.begin() + static_cast<long>(start), v.end());
  return ConvexPolygon{std::move(v)};
}

Point2 reflect_point(Point2 p, const FoldAxis& axis) {
  Point2 w = vec(axis.omega);
  return p + (2.0 * (axis.lambda - dot(p, w))) * w;
}

Chain clip_chain(const Chain& chain, const HalfPlane& hp, double eps) {
  size_t n = chain.size();
  if (n == 0) return {};
  auto depth = [&](Point2 p) { return dot(p, hp.n) - hp.c; };
  if (n == 1) return depth(chain[0]) <= eps ? chain : Chain{};

  Chain out;
  if (n == 2) {
    double da = depth(chain[0]), db = depth(chain[1]);
    if (da <= eps) out.push_back(chain[0]);
    if ((da <= eps) != (db <= eps)) {
      double t = da / (da - db);
      out.push_back(chain[0] + t * (chain[1] - chain[0]));
    }
    if (db <= eps) out.push_back(chain[1]);
  } else {
    out.reserve(n + 2);
    for (size_t i = 0; i < n; ++i) {
      Point2 a = chain[i], b = chain[(i + 1) % n];
      double da = depth(a), db = depth(b);
      bool ina = da <= eps, inb = db <= eps;
      if (ina) out.push_back(a);
      if (ina != inb) {
        double t = da / (da - db);
        out.push_back(a + t * (b - a));
      }
    }
  }

  if (out.size() > 1) {
    double merge = 1e-14 * coordinate_scale(out);
    Chain clean;
    clean.reserve(out.size());
    for (const auto& p : out)
      if (clean.empty() || dist(clean.back(), p) > merge) clean.push_back(p);
    while (clean.size() > 1 && dist(clean.front(), clean.back()) <= merge) clean.pop_back();
    return clean;
  }
  return out;
}

double chain_area(const Chain& chain) {
  if (chain.size() < 3) return 0.0;
  double a2 = 0.0;
  for (size_t i = 0; i < chain.size(); ++i) a2 += cross(chain[i], chain[(i + 1) % chain.size()]);
  return 0.5 * a2;
}

Point2 chain_centroid(const Chain& chain) {
  if (chain.empty()) fail(errc::internal_error, "centroid of empty chain");
  double a2 = 0.0;
  Point2 s{0.0, 0.0};
  for (size_t i = 0; i < chain.size(); ++i) {
    Point2 a = chain[i], b = chain[(i + 1) % chain.size()];
    double c = cross(a, b);
    a2 += c;
    s = s + c * (a + b);
  }
  double scale = coordinate_scale(chain);
  if (std::fabs(a2) <= 1e-30 * scale * scale) {
    Point2 m{0.0, 0.0};
    for (const auto& p : chain) m = m + p;
    return (1.0 / static_cast<double>(chain.size())) * m;
  }
  return (1.0 / (3.0 * a2)) * s;
}

std::pair<Point2, Point2> chain_diameter_pair(const Chain& chain) {
  if (chain.empty()) fail(errc::internal_error, "diameter of empty chain");
  size_t bi = 0, bj = 0;
  double best = -1.0;
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = i; j < chain.size(); ++j) {
      double d2 = norm2(chain[i] - chain[j]);
      if (d2 > best) {
        best = d2;
        bi = i;
        bj = j;
      }
    }
  return {chain[bi], chain[bj]};
}

double chain_diameter(const Chain& chain) {
  auto [a, b] = chain_diameter_pair(chain);
  return dist(a, b);
}

std::pair<double, Point2> area_centroid(const ConvexPolygon& k) {
  return {chain_area(k.vertices), chain_centroid(k.vertices)};
}

double polygon_area(const ConvexPolygon& k) { return chain_area(k.vertices); }
Point2 polygon_centroid(const ConvexPolygon& k) { return chain_centroid(k.vertices); }
double polygon_diameter(const ConvexPolygon& k) { return chain_diameter(k.vertices); }

Chain cap_chain(const ConvexPolygon& k, const FoldAxis& axis) {
  Point2 w = vec(axis.omega);
  return clip_chain(k.vertices, HalfPlane{{-w.x, -w.y}, -axis.lambda});
}

std::optional<ConvexPolygon> clip_cap(const ConvexPolygon& k, const FoldAxis& axis) {
  Chain cap = cap_chain(k, axis);
  double scale = coordinate_scale(k.vertices);
  if (cap.size() < 3 || chain_area(cap) <= 1e-16 * scale * scale) return std::nullopt;
  try {
    return make_polygon(cap);
  } catch (const geometry_error& e) {
    if (e.code() == errc::degenerate) return std::nullopt;
    throw;
  }
}

double support(const Chain& chain, Direction w) {
  if (chain.empty()) fail(errc::internal_error, "support of empty chain");
  Point2 u = vec(w);
  double best = dot(chain[0], u);
  for (const auto& p : chain) best = std::max(best, dot(p, u));
  return best;
}

double support(const ConvexPolygon& k, Direction w) { return support(k.vertices, w); }

std::vector<HalfPlane> edge_planes(const ConvexPolygon& k) {
  std::vector<HalfPlane> planes;
  planes.reserve(k.vertices.size());
  for (size_t i = 0; i < k.vertices.size(); ++i) {
    Point2 a = k.vertices[i], b = k.vertices[(i + 1) % k.vertices.size()];
    Point2 e = b - a;
    double len = norm(e);
    if (len <= 0.0) fail(errc::internal_error, "zero-length polygon edge");
    Point2 n{e.y / len, -e.x / len};
    planes.push_back({n, dot(n, a)});
  }
  return planes;
}

bool contains_point(const std::vector<HalfPlane>& planes, Point2 p, double tol) {
  for (const auto& hp : planes)
    if (dot(p, hp.n) - hp.c > tol) return false;
  return true;
}

bool contains_point(const ConvexPolygon& k, Point2 p, double tol) {
  return contains_point(edge_planes(k), p, tol);
}

bool contains_polygon(const ConvexPolygon& outer, const Chain& inner, double tol) {
  auto planes = edge_planes(outer);
  for (const auto& p : inner)
    if (!contains_point(planes, p, tol)) return false;
  return true;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  Point2 e = b - a;
  double len2 = norm2(e);
  if (len2 <= 0.0) return dist(p, a);
  double t = std::clamp(dot(p - a, e) / len2, 0.0, 1.0);
  return dist(p, a + t * e);
}

double distance_to_chain(const Chain& chain, Point2 p) {
  if (chain.empty()) fail(errc::internal_error, "distance to empty chain");
  if (chain.size() == 1) return dist(p, chain[0]);
  if (chain.size() >= 3) {
    bool inside = true;
    for (size_t i = 0; i < chain.size() && inside; ++i) {
      Point2 a = chain[i], b = chain[(i + 1) % chain.size()];
      if (cross(b - a, p - a) < 0.0) inside = false;
    }
    if (inside) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  size_t edges = chain.size() == 2 ? 1 : chain.size();
  for (size_t i = 0; i < edges; ++i)
    best = std::min(best, point_segment_distance(p, chain[i], chain[(i + 1) % chain.size()]));
  return best;
}

double hausdorff_distance(const Chain& a, const Chain& b) {
  double h = 0.0;
  for (const auto& p : a) h = std::max(h, distance_to_chain(b, p));
  for (const auto& p : b) h = std::max(h, distance_to_chain(a, p));
  return h;
}

double boundary_clearance(const std::vector<HalfPlane>& planes, Point2 p) {
  double c = std::numeric_limits<double>::infinity();
  for (const auto& hp : planes) c = std::min(c, hp.c - dot(p, hp.n));
  return c;
}

RegionSummary classify_chain(const Chain& chain, double tol) {
  if (chain.empty()) fail(errc::internal_error, "classify of empty chain");
  RegionSummary r;
  r.diameter = chain_diameter(chain);
  r.area = std::max(0.0, chain_area(chain));
  if (r.diameter < 10.0 * tol) {
    r.kind = RegionKind::point;
    Point2 m{0.0, 0.0};
    for (const auto& p : chain) m = m + p;
    r.representative = (1.0 / static_cast<double>(chain.size())) * m;
  } else if (r.area < 10.0 * tol * r.diameter) {
    r.kind = RegionKind::segment;
    auto [a, b] = chain_diameter_pair(chain);
    r.representative = 0.5 * (a + b);
  } else {
    r.kind = RegionKind::polygon;
    r.representative = chain_centroid(chain);
  }
  return r;
}

}  // namespace heartlib
