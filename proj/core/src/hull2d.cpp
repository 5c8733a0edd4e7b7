#include "mga/hull2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mga {

namespace {

// cross product (a-o) x (b-o); collinear when |cross| <= 1e-12 relative to
// the edge-length product (sin of the turn angle below 1e-12)
double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool turns_left(const Point2& o, const Point2& a, const Point2& b) {
  const double c = cross(o, a, b);
  const double la = std::hypot(a.x - o.x, a.y - o.y);
  const double lb = std::hypot(b.x - o.x, b.y - o.y);
  return c > 1e-12 * la * lb;
}

}  // namespace

double polygon_area(const std::vector<Point2>& v) {
  if (v.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

Hull2D hull_2d(const std::vector<Point2>& points) {
  if (points.empty()) throw std::invalid_argument("hull_2d: no points");
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("hull_2d: non-finite coordinate");
  }
  std::vector<Point2> pts = points;
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Hull2D hull;
  if (pts.size() <= 2) {
    hull.vertices = pts;
    return hull;
  }

  // monotone chain; non-left turns (including collinear) are popped
  std::vector<Point2> h;
  h.reserve(pts.size() * 2);
  for (const Point2& p : pts) {  // lower hull
    while (h.size() >= 2 && !turns_left(h[h.size() - 2], h[h.size() - 1], p)) h.pop_back();
    h.push_back(p);
  }
  const std::size_t lower = h.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper hull
    while (h.size() >= lower && !turns_left(h[h.size() - 2], h[h.size() - 1], *it)) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();  // last point repeats the first

  hull.vertices = std::move(h);
  if (hull.vertices.size() <= 2) {
    hull.area = 0.0;
  } else {
    hull.area = polygon_area(hull.vertices);
  }
  return hull;
}

bool convex_contains(const std::vector<Point2>& v, const Point2& p) {
  if (v.empty()) return false;
  if (v.size() == 1) return v[0].x == p.x && v[0].y == p.y;
  if (v.size() == 2) {
    // segment: p must be collinear and within the span
    const double c = cross(v[0], v[1], p);
    const double l = std::hypot(v[1].x - v[0].x, v[1].y - v[0].y);
    const double lp = std::hypot(p.x - v[0].x, p.y - v[0].y);
    if (std::abs(c) > 1e-12 * std::max(1.0, l * lp)) return false;
    const double t = (p.x - v[0].x) * (v[1].x - v[0].x) + (p.y - v[0].y) * (v[1].y - v[0].y);
    return t >= -1e-12 && t <= l * l + 1e-12;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    const double c = cross(a, b, p);
    const double la = std::hypot(b.x - a.x, b.y - a.y);
    const double lp = std::hypot(p.x - a.x, p.y - a.y);
    if (c < -1e-12 * std::max(1.0, la * lp)) return false;  // clearly outside this edge
  }
  return true;
}

}  // namespace mga
