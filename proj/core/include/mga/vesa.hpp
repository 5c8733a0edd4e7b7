#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mga/hull2d.hpp"

namespace mga {

// Volume proxy for a point set: the sum of 2-D convex hull areas over all
// coordinate-pair projections. Cheap to maintain incrementally and
// monotone under point insertion, unlike the true hull volume.
struct VesaEstimate {
  double total = 0.0;
  std::map<std::pair<int, int>, double> pair_areas;  // keyed (i, j), i < j
};

VesaEstimate vesa(const std::vector<std::vector<double>>& points, int dims);

// Incremental accumulator. Holds the 2-D hull of every coordinate pair;
// insert() updates only the pairs whose shadow actually grows. Totals are
// reduced in canonical pair order so they are bitwise reproducible for a
// given insertion sequence.
class VesaAccumulator {
 public:
  explicit VesaAccumulator(int dims);

  void insert(const std::vector<double>& point);
  const VesaEstimate& estimate() const { return est_; }
  int dims() const { return dims_; }

 private:
  int dims_;
  VesaEstimate est_;
  std::vector<std::vector<Point2>> pair_hulls_;  // hull vertices per pair, canonical order
  void rebuild_total();
};

struct ConvergenceDecision {
  bool converged = false;
  // growth happened but the whole trajectory sits at zero volume; the
  // method may only have exhausted what it is capable of finding
  bool zero_volume = false;
};

// True when the trajectory has at least window+1 entries and the growth over
// the last `window` iterations is at most rel_threshold relative to the
// current total (floored at floor_eps to make the all-zero case converge).
ConvergenceDecision converged(const std::vector<double>& trajectory, int window,
                              double rel_threshold, double floor_eps = 1e-12);

inline constexpr int kDefaultConvergenceWindow = 10;
inline constexpr double kDefaultConvergenceThreshold = 0.01;

}  // namespace mga
