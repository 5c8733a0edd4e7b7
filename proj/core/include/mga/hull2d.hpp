#pragma once

#include <vector>

namespace mga {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

// Convex polygon in counter-clockwise order, starting from the
// lexicographically smallest vertex. Collinear points are not retained, so
// the vertex list is in strictly convex position. Degenerate inputs (all
// points coincident or collinear) yield area 0 with <= 2 vertices.
struct Hull2D {
  std::vector<Point2> vertices;
  double area = 0.0;
};

Hull2D hull_2d(const std::vector<Point2>& points);

// shoelace area of a polygon given in CCW order
double polygon_area(const std::vector<Point2>& vertices);

// true if p lies inside or on the boundary of a CCW convex polygon
bool convex_contains(const std::vector<Point2>& vertices, const Point2& p);

}  // namespace mga
