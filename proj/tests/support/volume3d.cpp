#include "support/volume3d.hpp"

#include <array>
#include <cmath>

#include "mga/hullnd.hpp"

namespace mga::test {

double hull_volume_3d(const std::vector<std::vector<double>>& points) {
  const HullND hull = hull_nd(points, 3);
  // V = (1/3) * sum_f offset_f * area_f with outward unit normals
  double volume = 0.0;
  for (const auto& f : hull.facets) {
    const auto& a = hull.points[f.vertex_ids[0]];
    const auto& b = hull.points[f.vertex_ids[1]];
    const auto& c = hull.points[f.vertex_ids[2]];
    std::array<double, 3> u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    std::array<double, 3> v{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    std::array<double, 3> cr{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                             u[0] * v[1] - u[1] * v[0]};
    const double area = 0.5 * std::sqrt(cr[0] * cr[0] + cr[1] * cr[1] + cr[2] * cr[2]);
    volume += f.offset * area;
  }
  return volume / 3.0;
}

}  // namespace mga::test
