#include "mga/hullnd.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace mga {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd to_vec(const std::vector<double>& p) {
  return Eigen::Map<const VectorXd>(p.data(), static_cast<long>(p.size()));
}

struct Facet {
  VectorXd normal;
  double offset = 0.0;
  std::vector<int> vertices;   // sorted point ids, size dim
  std::vector<int> neighbors;  // facet ids
  std::vector<int> conflicts;  // point ids strictly above this facet
  bool alive = true;
};

// hyperplane through the given vertices, oriented away from `interior`
bool facet_plane(const std::vector<std::vector<double>>& pts, const std::vector<int>& ids,
                 const VectorXd& interior, VectorXd& normal, double& offset) {
  const int dim = static_cast<int>(pts[ids[0]].size());
  MatrixXd E(dim - 1, dim);
  const VectorXd v0 = to_vec(pts[ids[0]]);
  for (int i = 1; i < dim; ++i) E.row(i - 1) = (to_vec(pts[ids[i]]) - v0).transpose();
  Eigen::JacobiSVD<MatrixXd> svd(E, Eigen::ComputeFullV);
  normal = svd.matrixV().col(dim - 1);
  const double nn = normal.norm();
  if (!(nn > 0.0) || !normal.allFinite()) return false;
  normal /= nn;
  offset = normal.dot(v0);
  if (normal.dot(interior) > offset) {
    normal = -normal;
    offset = -offset;
  }
  return true;
}

}  // namespace

int affine_rank(const std::vector<std::vector<double>>& points, double tol) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  const int dim = static_cast<int>(points[0].size());
  MatrixXd E(static_cast<long>(points.size()) - 1, dim);
  const VectorXd p0 = to_vec(points[0]);
  for (std::size_t i = 1; i < points.size(); ++i)
    E.row(static_cast<long>(i) - 1) = (to_vec(points[i]) - p0).transpose();
  Eigen::JacobiSVD<MatrixXd> svd(E);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return rank;
}

HullND hull_nd(const std::vector<std::vector<double>>& points, int dim, int dim_cap) {
  if (dim > dim_cap)
    throw HullCapacityError("hull_nd: dimension " + std::to_string(dim) +
                            " exceeds the cap of " + std::to_string(dim_cap));
  if (dim < 1) throw std::invalid_argument("hull_nd: dim must be >= 1");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("hull_nd: point dimension mismatch");
    for (double v : p)
      if (!std::isfinite(v)) throw std::invalid_argument("hull_nd: non-finite coordinate");
  }
  if (static_cast<int>(points.size()) < dim + 1)
    throw HullDegenerateError("hull_nd: need at least dim+1 points");

  HullND out;
  out.dim = dim;
  out.points = points;

  double scale = 1.0;
  for (const auto& p : points)
    for (double v : p) scale = std::max(scale, std::abs(v));
  const double eps_vis = 1e-9 * scale;

  if (dim == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < static_cast<int>(points.size()); ++i) {
      if (points[i][0] < points[lo][0]) lo = i;
      if (points[i][0] > points[hi][0]) hi = i;
    }
    if (points[hi][0] - points[lo][0] <= eps_vis)
      throw HullDegenerateError("hull_nd: 1-d points coincide");
    out.facets.push_back({{1.0}, points[hi][0], {hi}});
    out.facets.push_back({{-1.0}, -points[lo][0], {lo}});
    return out;
  }

  const int npts = static_cast<int>(points.size());

  // initial simplex: greedy farthest-point selection against the affine
  // hull of the points chosen so far
  std::vector<int> simplex;
  {
    int start = 0;
    for (int i = 1; i < npts; ++i)
      if (points[i] < points[start]) start = i;
    simplex.push_back(start);
    MatrixXd basis(dim, 0);  // orthonormal columns spanning the affine hull
    const VectorXd v0 = to_vec(points[start]);
    while (static_cast<int>(simplex.size()) < dim + 1) {
      double best_res = 0.0;
      int best = -1;
      VectorXd best_dir;
      for (int i = 0; i < npts; ++i) {
        VectorXd d = to_vec(points[i]) - v0;
        if (basis.cols() > 0) d -= basis * (basis.transpose() * d);
        const double res = d.norm();
        if (res > best_res + 1e-15) {
          best_res = res;
          best = i;
          best_dir = d;
        }
      }
      if (best < 0 || best_res <= 1e-7 * scale)
        throw HullDegenerateError("hull_nd: points are affinely degenerate (rank " +
                                  std::to_string(simplex.size() - 1) + " < " +
                                  std::to_string(dim) + ")");
      simplex.push_back(best);
      basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
      basis.col(basis.cols() - 1) = best_dir / best_res;
    }
  }

  VectorXd interior = VectorXd::Zero(dim);
  for (int id : simplex) interior += to_vec(points[id]);
  interior /= static_cast<double>(dim + 1);

  std::vector<Facet> facets;
  // one facet per dim-subset of the simplex (drop vertex k)
  for (int k = 0; k <= dim; ++k) {
    Facet f;
    for (int i = 0; i <= dim; ++i)
      if (i != k) f.vertices.push_back(simplex[i]);
    std::sort(f.vertices.begin(), f.vertices.end());
    if (!facet_plane(points, f.vertices, interior, f.normal, f.offset))
      throw HullDegenerateError("hull_nd: degenerate initial facet");
    facets.push_back(std::move(f));
  }
  for (int a = 0; a <= dim; ++a)
    for (int b = 0; b <= dim; ++b)
      if (a != b) facets[a].neighbors.push_back(b);

  // conflict lists: each outside point goes to the facet it violates most
  std::vector<char> in_simplex(npts, 0);
  for (int id : simplex) in_simplex[id] = 1;
  for (int i = 0; i < npts; ++i) {
    if (in_simplex[i]) continue;
    double best = eps_vis;
    int best_f = -1;
    const VectorXd p = to_vec(points[i]);
    for (std::size_t f = 0; f < facets.size(); ++f) {
      const double d = facets[f].normal.dot(p) - facets[f].offset;
      if (d > best) {
        best = d;
        best_f = static_cast<int>(f);
      }
    }
    if (best_f >= 0) facets[best_f].conflicts.push_back(i);
  }

  std::vector<int> work;
  for (std::size_t f = 0; f < facets.size(); ++f)
    if (!facets[f].conflicts.empty()) work.push_back(static_cast<int>(f));

  std::vector<int> visible_mark(facets.size(), -1);
  int epoch = 0;

  while (!work.empty()) {
    const int fid = work.back();
    work.pop_back();
    if (!facets[fid].alive || facets[fid].conflicts.empty()) continue;

    // apex: farthest conflict point (ties to the lowest point id)
    int apex = -1;
    double far = -1.0;
    for (int pi : facets[fid].conflicts) {
      const double d = facets[fid].normal.dot(to_vec(points[pi])) - facets[fid].offset;
      if (d > far + 1e-15) {
        far = d;
        apex = pi;
      }
    }
    if (apex < 0) continue;
    const VectorXd apex_v = to_vec(points[apex]);

    // visible set via BFS over neighbors
    ++epoch;
    if (visible_mark.size() < facets.size()) visible_mark.resize(facets.size(), -1);
    std::vector<int> visible{fid};
    visible_mark[fid] = epoch;
    for (std::size_t qi = 0; qi < visible.size(); ++qi) {
      for (int nb : facets[visible[qi]].neighbors) {
        if (!facets[nb].alive || visible_mark[nb] == epoch) continue;
        if (facets[nb].normal.dot(apex_v) - facets[nb].offset > eps_vis) {
          visible_mark[nb] = epoch;
          visible.push_back(nb);
        }
      }
    }

    // horizon ridges: visible facet F with non-visible neighbor G
    struct Horizon {
      std::vector<int> ridge;
      int outside_facet;
    };
    std::vector<Horizon> horizon;
    std::vector<int> orphan_points;
    for (int vf : visible) {
      for (int pi : facets[vf].conflicts)
        if (pi != apex) orphan_points.push_back(pi);
      for (int nb : facets[vf].neighbors) {
        if (!facets[nb].alive || visible_mark[nb] == epoch) continue;
        std::vector<int> ridge;
        std::set_intersection(facets[vf].vertices.begin(), facets[vf].vertices.end(),
                              facets[nb].vertices.begin(), facets[nb].vertices.end(),
                              std::back_inserter(ridge));
        if (static_cast<int>(ridge.size()) == dim - 1) horizon.push_back({std::move(ridge), nb});
      }
    }
    if (horizon.empty()) {
      // numerically stuck apex: drop it and move on
      auto& cf = facets[fid].conflicts;
      cf.erase(std::remove(cf.begin(), cf.end(), apex), cf.end());
      if (!cf.empty()) work.push_back(fid);
      continue;
    }

    for (int vf : visible) facets[vf].alive = false;

    // cone of new facets over the horizon
    std::vector<int> new_ids;
    std::map<std::vector<int>, int> ridge_owner;  // apex-side ridges of new facets
    for (const Horizon& hz : horizon) {
      Facet f;
      f.vertices = hz.ridge;
      f.vertices.push_back(apex);
      std::sort(f.vertices.begin(), f.vertices.end());
      if (!facet_plane(points, f.vertices, interior, f.normal, f.offset)) continue;
      const int id = static_cast<int>(facets.size());
      f.neighbors.push_back(hz.outside_facet);
      facets.push_back(std::move(f));
      visible_mark.push_back(-1);
      // dead entries linger in neighbor lists and are skipped during BFS
      facets[hz.outside_facet].neighbors.push_back(id);
      new_ids.push_back(id);
      // cross-link cone facets via their apex-side ridges
      for (int drop : facets[id].vertices) {
        if (drop == apex) continue;
        std::vector<int> key;
        for (int v : facets[id].vertices)
          if (v != drop) key.push_back(v);
        auto [it, inserted] = ridge_owner.try_emplace(key, id);
        if (!inserted) {
          facets[id].neighbors.push_back(it->second);
          facets[it->second].neighbors.push_back(id);
        }
      }
    }

    // reassign orphaned conflict points to the new cone
    std::sort(orphan_points.begin(), orphan_points.end());
    orphan_points.erase(std::unique(orphan_points.begin(), orphan_points.end()),
                        orphan_points.end());
    for (int pi : orphan_points) {
      const VectorXd p = to_vec(points[pi]);
      double best = eps_vis;
      int best_f = -1;
      for (int id : new_ids) {
        const double d = facets[id].normal.dot(p) - facets[id].offset;
        if (d > best) {
          best = d;
          best_f = id;
        }
      }
      if (best_f < 0) {
        // below every new facet; almost always interior, but an orphan can
        // still see an untouched old facet, so fall back to a full scan
        for (std::size_t id = 0; id < facets.size(); ++id) {
          if (!facets[id].alive) continue;
          const double d = facets[id].normal.dot(p) - facets[id].offset;
          if (d > best) {
            best = d;
            best_f = static_cast<int>(id);
          }
        }
        if (best_f >= 0) work.push_back(best_f);
      }
      if (best_f >= 0) facets[best_f].conflicts.push_back(pi);
    }
    for (int id : new_ids)
      if (!facets[id].conflicts.empty()) work.push_back(id);
  }

  for (const Facet& f : facets) {
    if (!f.alive) continue;
    FacetND nf;
    nf.normal.assign(f.normal.data(), f.normal.data() + dim);
    nf.offset = f.offset;
    nf.vertex_ids = f.vertices;
    out.facets.push_back(std::move(nf));
  }
  return out;
}

std::vector<std::vector<double>> dedup_normals(const std::vector<std::vector<double>>& normals,
                                               double angle_tol_deg) {
  const double cos_tol = std::cos(angle_tol_deg * M_PI / 180.0);
  std::vector<std::vector<double>> kept;
  for (const auto& n : normals) {
    bool dup = false;
    for (const auto& k : kept) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n.size(); ++i) dot += n[i] * k[i];
      if (dot >= cos_tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(n);
  }
  return kept;
}

}  // namespace mga
