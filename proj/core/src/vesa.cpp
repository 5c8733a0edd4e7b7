#include "mga/vesa.hpp"

#include <algorithm>
#include <stdexcept>

namespace mga {

VesaEstimate vesa(const std::vector<std::vector<double>>& points, int dims) {
  VesaAccumulator acc(dims);
  for (const auto& p : points) acc.insert(p);
  return acc.estimate();
}

VesaAccumulator::VesaAccumulator(int dims) : dims_(dims) {
  if (dims < 2) throw std::invalid_argument("vesa: dims must be >= 2 (no pairs below that)");
  for (int i = 0; i < dims; ++i)
    for (int j = i + 1; j < dims; ++j) {
      est_.pair_areas[{i, j}] = 0.0;
      pair_hulls_.emplace_back();
    }
}

void VesaAccumulator::insert(const std::vector<double>& point) {
  if (static_cast<int>(point.size()) != dims_)
    throw std::invalid_argument("vesa: point dimension mismatch");
  int pair_idx = 0;
  bool changed = false;
  for (int i = 0; i < dims_; ++i) {
    for (int j = i + 1; j < dims_; ++j, ++pair_idx) {
      auto& hull = pair_hulls_[pair_idx];
      const Point2 p{point[i], point[j]};
      if (!hull.empty() && convex_contains(hull, p)) continue;  // shadow unchanged
      std::vector<Point2> pts = hull;
      pts.push_back(p);
      Hull2D h = hull_2d(pts);
      hull = std::move(h.vertices);
      est_.pair_areas[{i, j}] = h.area;
      changed = true;
    }
  }
  if (changed) rebuild_total();
}

void VesaAccumulator::rebuild_total() {
  // canonical (i, j) order; std::map iterates in exactly that order
  double total = 0.0;
  for (const auto& [key, area] : est_.pair_areas) total += area;
  est_.total = total;
}

ConvergenceDecision converged(const std::vector<double>& trajectory, int window,
                              double rel_threshold, double floor_eps) {
  if (window < 1) throw std::invalid_argument("converged: window must be >= 1");
  ConvergenceDecision out;
  const int n = static_cast<int>(trajectory.size());
  if (n < window + 1) return out;
  const double last = trajectory[n - 1];
  const double prev = trajectory[n - 1 - window];
  const double growth = last - prev;
  if (growth <= rel_threshold * std::max(last, floor_eps)) {
    out.converged = true;
    if (last <= floor_eps) out.zero_volume = true;
  }
  return out;
}

}  // namespace mga
