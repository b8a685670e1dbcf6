// command line front end; all computation goes through the shared library

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heartlib.h"

namespace {

using nlohmann::json;

struct Pt {
  double x = 0.0;
  double y = 0.0;
};

struct LabeledPt {
  Pt p;
  std::string label;
  bool in_heart = true;
};

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(1);
}

void check(heart_status s) {
  if (s != HEART_OK) {
    die(std::string(heart_status_name(s)) + ": " + heart_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("IoError: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("IoError: cannot write " + path);
  out << text;
  if (!out.flush()) die("IoError: failed writing " + path);
}

void emit(const std::string& json_path, const std::string& text) {
  if (json_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    write_file(json_path, text);
  }
}

heart_polygon* load_body(const std::string& path) {
  heart_polygon* k = nullptr;
  check(heart_polygon_from_json(read_file(path).c_str(), &k));
  return k;
}

double absolute_tol(const heart_polygon* k, double rel_tol) {
  if (!(rel_tol > 0.0)) return 0.0;  // library default
  double area = 0, diam = 0, cx = 0, cy = 0;
  check(heart_polygon_stats(k, &area, &diam, &cx, &cy));
  return rel_tol * diam;
}

std::vector<Pt> polygon_points(const heart_polygon* k) {
  std::vector<Pt> pts(heart_polygon_vertex_count(k));
  for (size_t i = 0; i < pts.size(); ++i) {
    check(heart_polygon_vertex(k, i, &pts[i].x, &pts[i].y));
  }
  return pts;
}

std::vector<Pt> region_points(const heart_region* h) {
  std::vector<Pt> pts(heart_region_vertex_count(h));
  for (size_t i = 0; i < pts.size(); ++i) {
    check(heart_region_vertex(h, i, &pts[i].x, &pts[i].y));
  }
  return pts;
}

std::vector<double> parse_t_spec(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    double start = 0, end = 0;
    char mode[32] = {0};
    if (std::sscanf(spec.c_str(), "%lf:%lf:%31s", &start, &end, mode) != 3 ||
        std::string(mode) != "geometric") {
      die("ParseError: --t expects start:end:geometric or a comma list");
    }
    if (!(start > 0) || !(end >= start)) die("ParseError: bad --t range");
    for (double t = start; t <= end * (1 + 1e-12); t *= 2.0) out.push_back(t);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      die("ParseError: bad --t value '" + item + "'");
    }
  }
  if (out.empty()) die("ParseError: --t list is empty");
  return out;
}

std::string svg_document(const std::vector<Pt>& body, const std::vector<Pt>& heart,
                         int heart_dimension, const std::vector<LabeledPt>& marks) {
  double x0 = body[0].x, x1 = body[0].x, y0 = body[0].y, y1 = body[0].y;
  for (const auto& p : body) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;
  const double scale = std::max(x1 - x0, y1 - y0);
  auto fy = [&](double y) { return y0 + y1 - y; };  // svg y axis points down

  char buf[256];
  std::string svg;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" "
                "viewBox=\"%.6g %.6g %.6g %.6g\">\n",
                x0, y0, x1 - x0, y1 - y0);
  svg += buf;

  auto path_of = [&](const std::vector<Pt>& pts) {
    std::string d;
    for (size_t i = 0; i < pts.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%c%.8g,%.8g", i == 0 ? 'M' : 'L', pts[i].x,
                    fy(pts[i].y));
      d += buf;
    }
    d += 'Z';
    return d;
  };

  std::snprintf(buf, sizeof buf,
                "<path d=\"%s\" fill=\"#f7f2ea\" stroke=\"#444\" "
                "stroke-width=\"%.4g\"/>\n",
                path_of(body).c_str(), 0.004 * scale);
  svg += buf;

  if (!heart.empty()) {
    if (heart_dimension == 2 && heart.size() >= 3) {
      std::snprintf(buf, sizeof buf,
                    "<path d=\"%s\" fill=\"#d84a62\" fill-opacity=\"0.45\" "
                    "stroke=\"#a8233b\" stroke-width=\"%.4g\"/>\n",
                    path_of(heart).c_str(), 0.003 * scale);
      svg += buf;
    } else if (heart_dimension == 1 && heart.size() >= 2) {
      std::snprintf(buf, sizeof buf,
                    "<path d=\"%s\" fill=\"none\" stroke=\"#a8233b\" "
                    "stroke-width=\"%.4g\"/>\n",
                    path_of(heart).c_str(), 0.006 * scale);
      svg += buf;
    } else {
      std::snprintf(buf, sizeof buf,
                    "<circle cx=\"%.8g\" cy=\"%.8g\" r=\"%.4g\" fill=\"#a8233b\"/>\n",
                    heart[0].x, fy(heart[0].y), 0.012 * scale);
      svg += buf;
    }
  }

  for (const auto& m : marks) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.8g\" cy=\"%.8g\" r=\"%.4g\" fill=\"%s\"/>\n",
                  m.p.x, fy(m.p.y), 0.008 * scale,
                  m.in_heart ? "#2762a8" : "#d88a2a");
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.8g\" y=\"%.8g\" font-size=\"%.4g\" "
                  "font-family=\"sans-serif\" fill=\"#222\">%s</text>\n",
                  m.p.x + 0.012 * scale, fy(m.p.y) - 0.012 * scale, 0.03 * scale,
                  m.label.c_str());
    svg += buf;
  }
  svg += "</svg>\n";
  return svg;
}

int cmd_heart(const std::string& input, int directions, double rel_tol,
              const std::string& json_path, const std::string& svg_path) {
  heart_polygon* k = load_body(input);
  heart_region* h = nullptr;
  check(heart_build(k, directions, absolute_tol(k, rel_tol), &h));
  char* text = nullptr;
  check(heart_region_to_json(h, &text));
  emit(json_path, text);
  heart_string_free(text);
  if (!svg_path.empty()) {
    double area = 0, diam = 0;
    int dim = 0;
    check(heart_region_stats(h, &area, &diam, &dim));
    write_file(svg_path, svg_document(polygon_points(k), region_points(h), dim, {}));
  }
  heart_region_free(h);
  heart_polygon_free(k);
  return 0;
}

int cmd_profile(const std::string& input, int directions, double rel_tol,
                const std::string& json_path) {
  heart_polygon* k = load_body(input);
  heart_profile* prof = nullptr;
  check(heart_profile_compute(k, directions, absolute_tol(k, rel_tol), &prof));
  char* text = nullptr;
  check(heart_profile_to_json(prof, &text));
  emit(json_path, text);
  heart_string_free(text);
  heart_profile_free(prof);
  heart_polygon_free(k);
  return 0;
}

int cmd_points(const std::string& input, int directions, double rel_tol,
               double extra_p, const std::string& json_path,
               const std::string& svg_path) {
  heart_polygon* k = load_body(input);
  char* text = nullptr;
  check(heart_special_points_json(k, directions, absolute_tol(k, rel_tol), extra_p,
                                  &text));
  emit(json_path, text);
  if (!svg_path.empty()) {
    heart_region* h = nullptr;
    check(heart_build(k, directions, absolute_tol(k, rel_tol), &h));
    double area = 0, diam = 0;
    int dim = 0;
    check(heart_region_stats(h, &area, &diam, &dim));
    std::vector<LabeledPt> marks;
    for (const auto& e : json::parse(text)) {
      LabeledPt m;
      m.p = {e["xy"][0].get<double>(), e["xy"][1].get<double>()};
      m.label = e["name"].get<std::string>();
      m.in_heart = e["in_heart"].get<bool>();
      marks.push_back(std::move(m));
    }
    write_file(svg_path,
               svg_document(polygon_points(k), region_points(h), dim, marks));
    heart_region_free(h);
  }
  heart_string_free(text);
  heart_polygon_free(k);
  return 0;
}

int cmd_sweep(double b, double h, const std::string& t_spec,
              const std::string& json_path) {
  const std::vector<double> ts = parse_t_spec(t_spec);
  char* text = nullptr;
  check(heart_triangle_sweep_csv(ts.data(), ts.size(), b, h, &text));
  emit(json_path, text);
  heart_string_free(text);
  return 0;
}

int cmd_fraenkel(const std::string& input, double rel_tol, double r_override,
                 const std::string& json_path) {
  heart_polygon* k = load_body(input);
  char* text = nullptr;
  check(heart_fraenkel_json(k, absolute_tol(k, rel_tol), r_override, &text));
  emit(json_path, text);
  heart_string_free(text);
  heart_polygon_free(k);
  return 0;
}

int cmd_verify(const std::string& input, int directions, double rel_tol,
               unsigned long long seed, const std::string& json_path) {
  heart_polygon* k = load_body(input);
  char* text = nullptr;
  int failures = 0;
  check(heart_verify_report(k, directions, absolute_tol(k, rel_tol), seed,
                            &failures, &text));
  emit(json_path, text);
  heart_string_free(text);
  heart_polygon_free(k);
  return failures > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heart regions of convex bodies"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  std::string input, json_path, svg_path, t_spec = "2:16384:geometric";
  int directions = 720;
  double rel_tol = 1e-9;
  double extra_p = 0.0;
  double r_override = 0.0;
  double tri_b = 1.0, tri_h = 1.0;
  unsigned long long seed = 42;

  auto add_common = [&](CLI::App* sub, bool with_dirs) {
    sub->add_option("--input", input, "polygon JSON file")->required();
    if (with_dirs) {
      sub->add_option("--directions", directions, "number of fold directions");
    }
    sub->add_option("--tol", rel_tol, "tolerance relative to the diameter");
    sub->add_option("--json", json_path, "write the result here instead of stdout");
  };

  auto* c_heart = app.add_subcommand("heart", "build the heart region");
  add_common(c_heart, true);
  c_heart->add_option("--svg", svg_path, "render body and heart to SVG");

  auto* c_profile = app.add_subcommand("profile", "maximal folding profile");
  add_common(c_profile, true);

  auto* c_points = app.add_subcommand("points", "distinguished points and membership");
  add_common(c_points, true);
  c_points->add_option("--svg", svg_path, "render body, heart and points to SVG");
  c_points->add_option("--p", extra_p, "additional mu_p exponent to minimize");

  auto* c_sweep = app.add_subcommand("triangle-sweep", "obtuse triangle area ratios");
  c_sweep->set_help_flag("--help", "print help");
  c_sweep->add_option("--b", tri_b, "shortest side length");
  c_sweep->add_option("--h", tri_h, "apex height");
  c_sweep->add_option("--t", t_spec, "apex abscissas: start:end:geometric or comma list");
  c_sweep->add_option("--json", json_path, "write the CSV here instead of stdout");

  auto* c_fraenkel = app.add_subcommand("fraenkel", "Fraenkel asymmetry");
  add_common(c_fraenkel, false);
  c_fraenkel->add_option("--r", r_override, "disk radius override");

  auto* c_verify = app.add_subcommand("verify", "oracle cross-check report");
  add_common(c_verify, true);
  c_verify->add_option("--seed", seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (c_heart->parsed()) return cmd_heart(input, directions, rel_tol, json_path, svg_path);
  if (c_profile->parsed()) return cmd_profile(input, directions, rel_tol, json_path);
  if (c_points->parsed())
    return cmd_points(input, directions, rel_tol, extra_p, json_path, svg_path);
  if (c_sweep->parsed()) return cmd_sweep(tri_b, tri_h, t_spec, json_path);
  if (c_fraenkel->parsed()) return cmd_fraenkel(input, rel_tol, r_override, json_path);
  if (c_verify->parsed()) return cmd_verify(input, directions, rel_tol, seed, json_path);
  return 1;
}
