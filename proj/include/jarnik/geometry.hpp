#pragma once

#include <cmath>

#include "jarnik/number_theory.hpp"

namespace jarnik {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct LatticePoint {
  Int x = 0;
  Int y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

}  // namespace jarnik
