#pragma once

#include <algorithm>
#include <cmath>

namespace dude {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

// Euclidean distance with wrap-around in both axes (square torus).
// Bounded by window_side * sqrt(2) / 2.
inline double toroidal_distance(const Point& p, const Point& q,
                                double window_side) {
  double dx = std::fabs(p.x - q.x);
  double dy = std::fabs(p.y - q.y);
  dx = std::min(dx, window_side - dx);
  dy = std::min(dy, window_side - dy);
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace dude
