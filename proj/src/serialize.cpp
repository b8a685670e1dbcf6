#include "serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace heartlib {

using nlohmann::json;

namespace {

json chain_to_json(const Chain& chain) {
  json arr = json::array();
  for (const auto& p : chain) arr.push_back({p.x, p.y});
  return arr;
}

}  // namespace

std::string polygon_to_json(const ConvexPolygon& k) {
  json j;
  j["vertices"] = chain_to_json(k.vertices);
  return j.dump();
}

ConvexPolygon polygon_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    fail(errc::parse_error, "expected an object with a \"vertices\" array");
  }
  Chain pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      fail(errc::parse_error, "each vertex must be a [x, y] number pair");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  if (pts.size() >= 3) {
    Point2 mean{0, 0};
    for (const auto& p : pts) mean = mean + p;
    mean = (1.0 / pts.size()) * mean;
    std::sort(pts.begin(), pts.end(), [&](const Point2& a, const Point2& b) {
      const double ta = std::atan2(a.y - mean.y, a.x - mean.x);
      const double tb = std::atan2(b.y - mean.y, b.x - mean.x);
      if (ta != tb) return ta < tb;
      return norm2(a - mean) < norm2(b - mean);
    });
  }
  return make_polygon(pts);
}

std::string profile_to_json(const FoldingProfile& prof) {
  json j;
  j["tol"] = prof.tol;
  json samples = json::array();
  for (const auto& s : prof.samples) {
    json e;
    e["angle"] = s.angle;
    e["r"] = s.r_value;
    e["bracket"] = s.bracket_width;
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  return j.dump();
}

std::string heart_to_json(const HeartResult& h) {
  json j;
  j["vertices"] = chain_to_json(h.region);
  j["area"] = h.area;
  j["diameter"] = h.diameter;
  j["dimension"] = h.dimension;
  return j.dump();
}

std::string special_points_to_json(const std::vector<NamedPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) {
    json e;
    e["name"] = p.name;
    e["xy"] = {p.xy.x, p.xy.y};
    e["value"] = p.value;
    e["in_heart"] = p.in_heart;
    arr.push_back(std::move(e));
  }
  return arr.dump();
}

std::string fraenkel_to_json(const FraenkelResult& f) {
  json j;
  j["r_star"] = f.r_star;
  j["center"] = {f.center.x, f.center.y};
  j["gamma_max"] = f.gamma_max;
  j["asymmetry"] = f.asymmetry;
  j["flat_flag"] = f.flat_flag;
  return j.dump();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "t,ratio,delh_ratio\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", r.t, r.ratio,
                  r.delh_ratio);
    out += buf;
  }
  return out;
}

}  // namespace heartlib
