#pragma once

#include "geometry.hpp"

namespace heartlib {

// smallest disk containing all vertices (hence the body); deterministic
Disk min_enclosing_disk(const ConvexPolygon& k);
Disk min_enclosing_disk_points(const std::vector<Point2>& pts);

}  // namespace heartlib
