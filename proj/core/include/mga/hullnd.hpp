#pragma once

#include <stdexcept>
#include <vector>

namespace mga {

// Qhull-style hulls become impractical past roughly this many dimensions;
// exceeding it is an explicit opt-in via the dim_cap argument.
inline constexpr int kMaaDimCap = 10;

struct HullDegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HullCapacityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FacetND {
  std::vector<double> normal;  // outward unit normal
  double offset = 0.0;         // normal . x == offset on the facet hyperplane
  std::vector<int> vertex_ids; // indices into the input point list (dim of them)
};

// Convex hull of a point set in `dim` dimensions as a set of supporting
// halfspaces {x : normal . x <= offset}. Facets are simplicial; coplanar
// facets of a non-simplicial face are left unmerged and collapse at the
// normal-deduplication layer.
struct HullND {
  int dim = 0;
  std::vector<std::vector<double>> points;
  std::vector<FacetND> facets;
};

// Throws HullCapacityError when dim > dim_cap, HullDegenerateError when the
// points do not affinely span `dim` dimensions (fewer than dim+1 points, or
// rank-deficient configurations).
HullND hull_nd(const std::vector<std::vector<double>>& points, int dim,
               int dim_cap = kMaaDimCap);

// Greedy angular deduplication: a normal within `angle_tol_deg` of an
// already-kept one is dropped. Input order decides survivors; callers that
// need determinism sort first.
std::vector<std::vector<double>> dedup_normals(const std::vector<std::vector<double>>& normals,
                                               double angle_tol_deg);

// affine rank of a point set (number of independent edge directions + ... )
// used by MAA initialization: returns the dimension spanned by the points
int affine_rank(const std::vector<std::vector<double>>& points, double tol = 1e-7);

}  // namespace mga
