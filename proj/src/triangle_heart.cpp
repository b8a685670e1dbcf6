#include "triangle_heart.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace heartlib {

namespace {
constexpr double kPi = std::numbers::pi;

double interior_angle(Point2 at, Point2 p, Point2 q) {
  Point2 u = p - at, v = q - at;
  return std::atan2(std::fabs(cross(u, v)), dot(u, v));
}

}  // namespace

TriangleGeometry make_triangle(Point2 a, Point2 b, Point2 c) {
  double scale = coordinate_scale({a, b, c});
  if (std::fabs(cross(b - a, c - a)) <= 1e-14 * scale * scale)
    fail(errc::degenerate_triangle, "triangle has (near) zero area");

  Point2 v[3] = {a, b, c};
  double opposite[3] = {dist(b, c), dist(c, a), dist(a, b)};

  // smallest side: its endpoints carry the frame's base, its opposite vertex the apex
  int apex = 0;
  for (int i = 1; i < 3; ++i)
    if (opposite[i] < opposite[apex]) apex = i;
  Point2 pa = v[(apex + 1) % 3], pb = v[(apex + 2) % 3], pc = v[apex];
  if (interior_angle(pa, pb, pc) > interior_angle(pb, pc, pa)) std::swap(pa, pb);

  TriangleGeometry tri;
  tri.A = pa;
  tri.B = pb;
  tri.C = pc;
  tri.alpha = interior_angle(pa, pb, pc);
  tri.beta = interior_angle(pb, pc, pa);
  tri.gamma = interior_angle(pc, pa, pb);

  tri.b = dist(pa, pb);
  Point2 u = (1.0 / tri.b) * (pb - pa);
  tri.t = dot(pc - pa, u);
  tri.h = std::fabs(cross(u, pc - pa));
  return tri;
}

TriangleGeometry make_triangle(double b, double h, double t) {
  if (!(b > 0.0) || !(h > 0.0)) fail(errc::degenerate_triangle, "frame needs b > 0 and h > 0");
  return make_triangle({0.0, 0.0}, {b, 0.0}, {t, h});
}

TriangleKind classify_triangle(const TriangleGeometry& tri) {
  double largest = std::max({tri.alpha, tri.beta, tri.gamma});
  if (std::fabs(largest - 0.5 * kPi) <= 1e-12) return TriangleKind::right;
  return largest > 0.5 * kPi ? TriangleKind::obtuse : TriangleKind::acute;
}

namespace {

struct LabeledTriangle {
  Point2 v[3];
  double ang[3];
  double side[3];  // side[i] joins v[i] and v[(i+1)%3]
};

// clip by the line through `anchor` with unit normal `n`, keeping the side of
// `keep`; a tie keeps only the line itself (both half-planes applied)
void clip_line(Chain& chain, Point2 anchor, Point2 n, const Point2* keep, double eps) {
  double c = dot(anchor, n);
  if (keep) {
    if (dot(*keep, n) > c)
      chain = clip_chain(chain, HalfPlane{{-n.x, -n.y}, -c}, eps);
    else
      chain = clip_chain(chain, HalfPlane{n, c}, eps);
  } else {
    chain = clip_chain(chain, HalfPlane{n, c}, eps);
    chain = clip_chain(chain, HalfPlane{{-n.x, -n.y}, -c}, eps);
  }
}

void apply_bisector(Chain& chain, const LabeledTriangle& lt, int at, double eps_len, double eps_clip) {
  Point2 vv = lt.v[at];
  Point2 p = lt.v[(at + 1) % 3], q = lt.v[(at + 2) % 3];
  double lp = dist(vv, p), lq = dist(vv, q);
  Point2 d = (1.0 / lp) * (p - vv) + (1.0 / lq) * (q - vv);
  Point2 nn = vec(make_direction(-d.y, d.x));
  // fold across the bisector maps the shorter adjacent side onto the longer:
  // the heart stays on the longer side's half
  const Point2* keep = nullptr;
  Point2 longer = lp >= lq ? p : q;
  if (std::fabs(lp - lq) > eps_len) keep = &longer;
  clip_line(chain, vv, nn, keep, eps_clip);
}

void apply_side_axis(Chain& chain, const LabeledTriangle& lt, int side_index, double eps_ang, double eps_clip) {
  Point2 p = lt.v[side_index], q = lt.v[(side_index + 1) % 3];
  Point2 mid = 0.5 * (p + q);
  Point2 u = vec(make_direction(q.x - p.x, q.y - p.y));
  // fold across the axis maps the smaller-angle end onto the larger-angle end
  double ang_p = lt.ang[side_index], ang_q = lt.ang[(side_index + 1) % 3];
  const Point2* keep = nullptr;
  Point2 larger = ang_q >= ang_p ? q : p;
  if (std::fabs(ang_p - ang_q) > eps_ang) keep = &larger;
  clip_line(chain, mid, u, keep, eps_clip);
}

}  // namespace

TriangleHeartExact exact_triangle_heart(const TriangleGeometry& tri, double tol) {
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");

  LabeledTriangle lt;
  lt.v[0] = tri.A;
  lt.v[1] = tri.B;
  lt.v[2] = tri.C;
  if (cross(lt.v[1] - lt.v[0], lt.v[2] - lt.v[0]) < 0.0) std::swap(lt.v[1], lt.v[2]);
  for (int i = 0; i < 3; ++i)
    lt.ang[i] = interior_angle(lt.v[i], lt.v[(i + 1) % 3], lt.v[(i + 2) % 3]);
  for (int i = 0; i < 3; ++i) lt.side[i] = dist(lt.v[i], lt.v[(i + 1) % 3]);

  double scale = coordinate_scale({lt.v[0], lt.v[1], lt.v[2]});
  double eps_ang = 1e-9;
  double eps_len = 1e-9 * scale;
  double eps_clip = 1e-12 * scale;

  Chain chain = {lt.v[0], lt.v[1], lt.v[2]};

  double ang_min = std::min({lt.ang[0], lt.ang[1], lt.ang[2]});
  double ang_max = std::max({lt.ang[0], lt.ang[1], lt.ang[2]});
  for (int i = 0; i < 3; ++i) {
    if (lt.ang[i] <= ang_min + eps_ang) apply_bisector(chain, lt, i, eps_len, eps_clip);
    if (lt.ang[i] >= ang_max - eps_ang) apply_bisector(chain, lt, i, eps_len, eps_clip);
  }

  double side_min = std::min({lt.side[0], lt.side[1], lt.side[2]});
  double side_max = std::max({lt.side[0], lt.side[1], lt.side[2]});
  for (int i = 0; i < 3; ++i) {
    if (lt.side[i] <= side_min + eps_len) apply_side_axis(chain, lt, i, eps_ang, eps_clip);
    if (lt.side[i] >= side_max - eps_len) apply_side_axis(chain, lt, i, eps_ang, eps_clip);
  }
  // the longest side itself bounds the non-acute heart, but the chain started
  // as the triangle, so that edge is already in place

  if (chain.empty()) fail(errc::internal_error, "triangle heart clipped to empty");

  RegionSummary s = classify_chain(chain, tol);
  TriangleHeartExact out;
  out.polygon = std::move(chain);
  out.region_kind = s.kind;
  out.representative = s.representative;
  out.area = s.area;

  if (s.kind != RegionKind::polygon) {
    out.kind = TriangleHeartKind::degenerate_symmetric;
    return out;
  }

  // count distinct corners at the active-constraint tolerance
  Chain merged;
  for (const auto& p : out.polygon)
    if (merged.empty() || dist(merged.back(), p) > 1e-9 * scale) merged.push_back(p);
  while (merged.size() > 1 && dist(merged.front(), merged.back()) <= 1e-9 * scale) merged.pop_back();

  bool acute = classify_triangle(tri) == TriangleKind::acute;
  if (merged.size() >= 5)
    out.kind = TriangleHeartKind::obtuse_pentagon;
  else if (acute)
    out.kind = TriangleHeartKind::acute_quadrangle;
  else
    out.kind = TriangleHeartKind::obtuse_quadrangle;
  return out;
}

TriangleAreas triangle_area_formulas(double b, double h, double t) {
  if (!(b > 0.0) || !(h > 0.0))
    fail(errc::not_obtuse_configuration, "configuration needs b > 0 and h > 0");
  if (!(t > b))
    fail(errc::not_obtuse_configuration, "apex must lie beyond the base (obtuse at B)");
  double bc2 = (t - b) * (t - b) + h * h;
  if (!(b * b <= bc2))
    fail(errc::not_obtuse_configuration, "base must be the smallest side");

  // atan2 forms stay accurate for the tiny apex angles of the sweep
  double beta = std::atan2(h, b - t);                    // obtuse angle at B
  double gamma = std::atan2(b * h, t * (t - b) + h * h); // smallest angle at C

  TriangleAreas out;
  double ac2 = t * t + h * h;
  out.t1 = 0.5 * bc2 * std::sin(0.5 * beta) * std::sin(gamma) / std::sin(0.5 * beta + gamma);
  out.t2 = 0.5 * bc2 * std::sin(0.5 * beta) * std::sin(0.5 * gamma) / std::sin(0.5 * beta + 0.5 * gamma);
  out.t3 = 0.125 * ac2 * std::tan(0.5 * gamma);
  out.heart_area = out.t1 - out.t2 - out.t3;
  out.delh = 0.5 * b * b * h * h / (ac2 * std::tan(0.5 * gamma)) - 0.125 * ac2 * std::tan(0.5 * gamma);
  double tri_area = 0.5 * b * h;
  out.ratio = out.heart_area / tri_area;
  out.delh_ratio = out.delh / tri_area;
  return out;
}

std::vector<SweepRow> obtuse_sweep(double b, double h, const std::vector<double>& t_values) {
  if (t_values.empty()) fail(errc::invalid_argument, "sweep needs at least one t value");
  for (size_t i = 1; i < t_values.size(); ++i)
    if (!(t_values[i] > t_values[i - 1]))
      fail(errc::invalid_argument, "sweep t values must be strictly increasing");

  std::vector<SweepRow> rows;
  rows.reserve(t_values.size());
  for (double t : t_values) {
    TriangleAreas a = triangle_area_formulas(b, h, t);
    rows.push_back({t, a.ratio, a.delh_ratio});
  }
  return rows;
}

}  // namespace heartlib
