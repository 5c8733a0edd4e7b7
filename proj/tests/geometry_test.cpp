#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mga/hull2d.hpp"
#include "mga/lp.hpp"
#include "mga/hullnd.hpp"
#include "mga/rng.hpp"
#include "mga/vesa.hpp"
#include "support/volume3d.hpp"

using namespace mga;

TEST_CASE("hull_2d basics") {
  SUBCASE("unit square") {
    Hull2D h = hull_2d({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
    CHECK(h.area == doctest::Approx(1.0));
    CHECK(h.vertices.size() == 4);
    // CCW from the lexicographic minimum
    CHECK(h.vertices[0].x == 0.0);
    CHECK(h.vertices[0].y == 0.0);
    CHECK(polygon_area(h.vertices) == doctest::Approx(h.area).epsilon(1e-12));
  }
  SUBCASE("right triangle area 6") {
    Hull2D h = hull_2d({{0, 0}, {4, 0}, {0, 3}});
    CHECK(h.area == doctest::Approx(6.0));
  }
  SUBCASE("collinear input is degenerate") {
    Hull2D h = hull_2d({{0, 0}, {1, 1}, {2, 2}});
    CHECK(h.area == 0.0);
    CHECK(h.vertices.size() <= 2);
  }
  SUBCASE("single point") {
    Hull2D h = hull_2d({{3, 4}});
    CHECK(h.area == 0.0);
    CHECK(h.vertices.size() == 1);
  }
  SUBCASE("non-finite rejected") {
    CHECK_THROWS_AS(hull_2d({{0, 0}, {kInf, 1}}), std::invalid_argument);
  }
  SUBCASE("no collinear triples retained") {
    Hull2D h = hull_2d({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 2}});
    CHECK(h.vertices.size() == 4);
  }
}

TEST_CASE("hull_2d matches a rejection oracle on random points") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point2> pts;
    const int n = 3 + static_cast<int>(rng.uniform_int(40));
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});
    Hull2D h = hull_2d(pts);
    // every input point is contained in the hull
    for (const auto& p : pts) CHECK(convex_contains(h.vertices, p));
    // area is non-negative and invariant under permutation
    CHECK(h.area >= 0.0);
    std::reverse(pts.begin(), pts.end());
    CHECK(hull_2d(pts).area == doctest::Approx(h.area).epsilon(1e-12));
  }
}

TEST_CASE("hull_nd on the 3-d simplex and cube") {
  SUBCASE("regular simplex has 4 facets") {
    const std::vector<std::vector<double>> simplex{
        {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    HullND h = hull_nd(simplex, 3);
    CHECK(h.facets.size() == 4);
  }
  SUBCASE("cube normals deduplicate to the 6 axis directions") {
    std::vector<std::vector<double>> cube;
    for (int i = 0; i < 8; ++i)
      cube.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
    HullND h = hull_nd(cube, 3);
    std::vector<std::vector<double>> normals;
    for (const auto& f : h.facets) normals.push_back(f.normal);
    std::sort(normals.begin(), normals.end());
    const auto dedup = dedup_normals(normals, 1.0);
    CHECK(dedup.size() == 6);
    // each deduped normal is +-e_k, and each axis plane supports 4 corners
    for (const auto& n : dedup) {
      int nonzero = 0;
      for (double v : n)
        if (std::abs(v) > 1e-9) ++nonzero;
      CHECK(nonzero == 1);
    }
  }
  SUBCASE("coplanar points are a degeneracy error") {
    const std::vector<std::vector<double>> flat{
        {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.5, 0.5, 0}};
    CHECK_THROWS_AS(hull_nd(flat, 3), HullDegenerateError);
  }
  SUBCASE("dimension cap is a capacity error") {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 25; ++i) pts.push_back(std::vector<double>(20, double(i)));
    CHECK_THROWS_AS(hull_nd(pts, 20), HullCapacityError);
  }
}

TEST_CASE("hull_nd facets are supporting hyperplanes") {
  Rng rng(11);
  for (int dim = 2; dim <= 5; ++dim) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::vector<double>> pts;
      const int n = dim + 2 + static_cast<int>(rng.uniform_int(30));
      for (int i = 0; i < n; ++i) {
        std::vector<double> p(dim);
        for (auto& v : p) v = rng.uniform(-3, 3);
        pts.push_back(std::move(p));
      }
      HullND h = hull_nd(pts, dim);
      REQUIRE(h.facets.size() >= std::size_t(dim + 1));
      for (const auto& f : h.facets) {
        // unit normal
        double nn = 0.0;
        for (double v : f.normal) nn += v * v;
        CHECK(std::sqrt(nn) == doctest::Approx(1.0).epsilon(1e-9));
        // every input point on or below the plane; facet vertices on it
        for (const auto& p : pts) {
          double d = -f.offset;
          for (int k = 0; k < dim; ++k) d += f.normal[k] * p[k];
          CHECK(d <= 1e-9);
        }
        for (int vid : f.vertex_ids) {
          double d = -f.offset;
          for (int k = 0; k < dim; ++k) d += f.normal[k] * pts[vid][k];
          CHECK(std::abs(d) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("vesa on the unit cube is exactly 3") {
  std::vector<std::vector<double>> cube;
  for (int i = 0; i < 8; ++i)
    cube.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
  const VesaEstimate est = vesa(cube, 3);
  CHECK(est.total == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(est.pair_areas.size() == 3);
  for (const auto& [key, area] : est.pair_areas) CHECK(area == doctest::Approx(1.0));
}

TEST_CASE("vesa equals hull area in 2 dimensions") {
  Rng rng(3);
  std::vector<std::vector<double>> pts;
  std::vector<Point2> pts2;
  for (int i = 0; i < 30; ++i) {
    const double x = rng.uniform(0, 4), y = rng.uniform(0, 4);
    pts.push_back({x, y});
    pts2.push_back({x, y});
  }
  CHECK(vesa(pts, 2).total == doctest::Approx(hull_2d(pts2).area).epsilon(1e-12));
}

TEST_CASE("vesa degenerate and error cases") {
  CHECK(vesa({{1.0, 2.0, 3.0}}, 3).total == 0.0);  // single point: empty shadows
  CHECK_THROWS_AS(vesa({{1.0}}, 1), std::invalid_argument);
}

TEST_CASE("vesa insert semantics") {
  VesaAccumulator acc(3);
  std::vector<std::vector<double>> tetra{{0, 0, 0}, {4, 0, 0}, {0, 4, 0}, {0, 0, 4}};
  for (const auto& p : tetra) acc.insert(p);
  const double before = acc.estimate().total;

  SUBCASE("interior point leaves totals unchanged") {
    acc.insert({0.5, 0.5, 0.5});
    CHECK(acc.estimate().total == before);
  }
  SUBCASE("duplicate point leaves totals unchanged") {
    acc.insert({4, 0, 0});
    CHECK(acc.estimate().total == before);
  }
  SUBCASE("dimension mismatch rejected") {
    CHECK_THROWS_AS(acc.insert({1.0, 2.0}), std::invalid_argument);
  }
  SUBCASE("shadow caveat: true volume grows while vesa stays flat") {
    // point just above the x+y+z=4 face whose three axis-pair shadows all
    // fall inside the existing triangles
    const std::vector<double> p{1.4, 1.4, 1.4};
    const double vol_before = test::hull_volume_3d(tetra);
    auto grown = tetra;
    grown.push_back(p);
    const double vol_after = test::hull_volume_3d(grown);
    CHECK(vol_after > vol_before + 1e-6);  // real 3-d growth
    acc.insert(p);
    CHECK(acc.estimate().total == before);  // no shadow grew
  }
}

TEST_CASE("vesa monotonicity and batch equivalence") {
  Rng rng(17);
  VesaAccumulator acc(5);
  std::vector<std::vector<double>> all;
  double prev = 0.0;
  for (int i = 0; i < 300; ++i) {
    std::vector<double> p(5);
    for (auto& v : p) v = rng.uniform(0, 10);
    all.push_back(p);
    acc.insert(p);
    CHECK(acc.estimate().total >= prev);
    prev = acc.estimate().total;
  }
  const VesaEstimate batch = vesa(all, 5);
  CHECK(batch.total == doctest::Approx(acc.estimate().total).epsilon(1e-9));
  // permutation invariance
  std::reverse(all.begin(), all.end());
  CHECK(vesa(all, 5).total == doctest::Approx(batch.total).epsilon(1e-9));
  // projection consistency: each pair area equals an independent 2-d hull
  for (const auto& [key, area] : batch.pair_areas) {
    std::vector<Point2> proj;
    for (const auto& p : all) proj.push_back({p[key.first], p[key.second]});
    CHECK(hull_2d(proj).area == doctest::Approx(area).epsilon(1e-9));
  }
}

TEST_CASE("convergence detector") {
  SUBCASE("flat trajectory converges") {
    CHECK(converged({1, 2, 3, 3, 3, 3}, 3, 0.01).converged);
  }
  SUBCASE("doubling trajectory does not") {
    CHECK_FALSE(converged({1, 2, 4, 8, 16}, 2, 0.01).converged);
  }
  SUBCASE("too short to judge") {
    CHECK_FALSE(converged({1, 1, 1}, 3, 0.01).converged);
  }
  SUBCASE("constant zero converges with the zero-volume warning") {
    const auto d = converged({0, 0, 0, 0, 0}, 3, 0.01);
    CHECK(d.converged);
    CHECK(d.zero_volume);
  }
  SUBCASE("window must be positive") {
    CHECK_THROWS_AS(converged({1.0}, 0, 0.01), std::invalid_argument);
  }
}
