#pragma once

#include <string>
#include <vector>

#include "folding.hpp"
#include "fraenkel.hpp"
#include "heart_region.hpp"
#include "special_points.hpp"
#include "triangle_heart.hpp"

namespace heartlib {

std::string polygon_to_json(const ConvexPolygon& k);

// accepts {"vertices": [[x, y], ...]}; input order is free, points are sorted
// around their mean before validation
ConvexPolygon polygon_from_json(const std::string& text);

std::string profile_to_json(const FoldingProfile& prof);
std::string heart_to_json(const HeartResult& h);
std::string special_points_to_json(const std::vector<NamedPoint>& pts);
std::string fraenkel_to_json(const FraenkelResult& f);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace heartlib
