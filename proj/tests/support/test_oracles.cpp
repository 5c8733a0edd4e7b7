#include "support/test_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mga/testbeds.hpp"

namespace mga::test {

std::optional<double> brute_force_optimum(const LinearProgram& lp) {
  const auto vertices = enumerate_vertices(lp);
  if (vertices.empty()) return std::nullopt;
  const double sign = lp.sense() == Sense::minimize ? 1.0 : -1.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : vertices) best = std::min(best, sign * lp.objective_at(v));
  return sign * best;
}

bool matches_some_vertex(std::span<const double> x,
                         const std::vector<std::vector<double>>& vertices, double tol) {
  for (const auto& v : vertices) {
    double d = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) d = std::max(d, std::abs(v[j] - x[j]));
    if (d <= tol) return true;
  }
  return false;
}

}  // namespace mga::test
