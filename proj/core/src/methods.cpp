#include "mga/methods.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mga/simplex.hpp"

namespace mga {

std::string to_string(Method m) {
  switch (m) {
    case Method::hsj: return "hsj";
    case Method::random_vector: return "random";
    case Method::minmax: return "minmax";
    case Method::maa: return "maa";
    case Method::hybrid: return "hybrid";
  }
  return "unknown";
}

Method method_from_string(const std::string& name) {
  if (name == "hsj") return Method::hsj;
  if (name == "random") return Method::random_vector;
  if (name == "minmax") return Method::minmax;
  if (name == "maa") return Method::maa;
  if (name == "hybrid" || name == "combo") return Method::hybrid;
  throw std::invalid_argument("unknown MGA method: " + name);
}

ObjectiveVector hsj_propose(MethodState& state, const SolutionArchive& archive) {
  if (archive.empty())
    throw std::invalid_argument("hsj_propose: HSJ is undefined before the first solve");
  const std::size_t dim = archive.records()[0].mga_point.size();
  std::vector<long> counts(dim, 0);
  for (const auto& rec : archive.records()) {
    for (std::size_t k = 0; k < dim; ++k)
      if (rec.mga_point[k] > kHsjNonzeroTol) ++counts[k];
  }
  state.appearance_counts = counts;
  ObjectiveVector out;
  out.method = "hsj";
  out.weights.assign(counts.begin(), counts.end());
  return out;
}

ObjectiveVector random_propose(MethodState& state, int n) {
  if (n < 1) throw std::invalid_argument("random_propose: n must be >= 1");
  ObjectiveVector out;
  out.method = "random";
  out.weights.resize(n);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (int k = 0; k < n; ++k) {
      out.weights[k] = state.rng.gaussian();
      norm += out.weights[k] * out.weights[k];
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  for (double& w : out.weights) w /= norm;
  return out;
}

namespace {

// 3^n - 1 nonzero sign vectors, saturating well above any sane batch size
long long sign_space_size(int n) {
  if (n >= 39) return std::numeric_limits<long long>::max();
  long long s = 1;
  for (int i = 0; i < n; ++i) s *= 3;
  return s - 1;
}

std::vector<int> nth_sign_vector(long long ordinal, int n) {
  // ternary digits of (ordinal+1), mapped 0,1,2 -> 0,+1,-1; skipping 0
  // keeps the all-zero vector out of the enumeration
  std::vector<int> v(n, 0);
  long long x = ordinal + 1;
  for (int k = 0; k < n && x > 0; ++k) {
    const int d = static_cast<int>(x % 3);
    v[k] = d == 2 ? -1 : d;
    x /= 3;
  }
  return v;
}

}  // namespace

std::vector<ObjectiveVector> minmax_propose_batch(MethodState& state, int n, int batch) {
  if (n < 1) throw std::invalid_argument("minmax_propose_batch: n must be >= 1");
  if (batch < 1) throw std::invalid_argument("minmax_propose_batch: batch must be >= 1");
  const long long space = sign_space_size(n);
  const long long available = space - static_cast<long long>(state.issued_signs.size());
  if (batch > available)
    throw std::invalid_argument("minmax_propose_batch: sign-vector space exhausted (" +
                                std::to_string(available) + " of " + std::to_string(space) +
                                " vectors left, " + std::to_string(batch) + " requested)");

  std::vector<std::vector<int>> picked;
  auto take = [&](std::vector<int> v) {
    if (state.issued_signs.insert(v).second) picked.push_back(std::move(v));
  };

  // axis vectors first: +e_k, then -e_k, variable by variable
  for (int k = 0; k < n && static_cast<int>(picked.size()) < batch; ++k) {
    std::vector<int> plus(n, 0), minus(n, 0);
    plus[k] = 1;
    minus[k] = -1;
    take(std::move(plus));
    if (static_cast<int>(picked.size()) < batch) take(std::move(minus));
  }

  // then uniformly random sign vectors with duplicate rejection; when the
  // remaining space is small, enumerate and shuffle it instead so the tail
  // of an exhaustive request cannot stall
  while (static_cast<int>(picked.size()) < batch) {
    const long long remaining = space - static_cast<long long>(state.issued_signs.size());
    if (remaining <= 4096) {
      std::vector<std::vector<int>> pool;
      for (long long o = 0; o < space; ++o) {
        auto v = nth_sign_vector(o, n);
        if (!state.issued_signs.count(v)) pool.push_back(std::move(v));
      }
      for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[state.rng.uniform_int(i)]);
      for (auto& v : pool) {
        if (static_cast<int>(picked.size()) >= batch) break;
        take(std::move(v));
      }
      break;
    }
    std::vector<int> v(n);
    bool all_zero = true;
    for (int k = 0; k < n; ++k) {
      v[k] = static_cast<int>(state.rng.uniform_int(3)) - 1;
      if (v[k] != 0) all_zero = false;
    }
    if (!all_zero) take(std::move(v));
  }

  std::vector<ObjectiveVector> out;
  out.reserve(picked.size());
  for (const auto& v : picked) {
    ObjectiveVector ov;
    ov.method = "minmax";
    ov.weights.assign(v.begin(), v.end());
    out.push_back(std::move(ov));
  }
  return out;
}

std::vector<ObjectiveVector> maa_propose(MethodState& state, const SolutionArchive& archive,
                                         const HullND& hull, double angle_tol_deg) {
  if (hull.facets.empty())
    throw std::runtime_error("maa_propose: hull has no facets; re-initialize MAA");
  if (archive.empty()) throw std::invalid_argument("maa_propose: empty archive");
  const double cos_tol = std::cos(angle_tol_deg * M_PI / 180.0);

  // canonical order: lexicographic over the outward normals
  std::vector<std::pair<std::vector<double>, int>> candidates;
  for (std::size_t f = 0; f < hull.facets.size(); ++f)
    candidates.emplace_back(hull.facets[f].normal, static_cast<int>(f));
  std::sort(candidates.begin(), candidates.end());

  auto too_close = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return dot >= cos_tol;
  };

  std::vector<ObjectiveVector> out;
  for (auto& [normal, fid] : candidates) {
    bool dup = false;
    for (const auto& u : state.used_normals) {
      if (too_close(normal, u)) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    state.used_normals.push_back(normal);
    ObjectiveVector ov;
    ov.method = "maa";
    ov.facet_id = fid;
    ov.weights.resize(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) ov.weights[i] = -normal[i];
    out.push_back(std::move(ov));
  }
  return out;
}

SolutionArchive maa_init(const MgaProblem& p, const Solution& base_optimal, MethodState& state,
                         int max_init_iters, double dedup_tol) {
  const int dim = p.mga_dim();
  if (max_init_iters <= 0) max_init_iters = 20 + 10 * dim;
  if (base_optimal.status != SolveStatus::optimal)
    throw std::invalid_argument("maa_init: base solution not optimal");

  SolutionArchive archive(dedup_tol);
  SolutionRecord base_rec;
  base_rec.iteration = -1;
  base_rec.method = "maa-init";
  base_rec.x = base_optimal.values;
  base_rec.mga_point = p.project(base_optimal.values);
  base_rec.objective_vector.assign(dim, 0.0);
  base_rec.cost = p.cost_of(base_optimal.values);
  base_rec.solve_ns = base_optimal.solve_wall_time.count();
  archive.insert(std::move(base_rec));

  MgaSolver solver(p, /*reuse_basis=*/false);
  for (int it = 0; it < max_init_iters; ++it) {
    const auto t0 = std::chrono::steady_clock::now();
    ObjectiveVector w = random_propose(state, dim);
    const auto t1 = std::chrono::steady_clock::now();
    Solution sol = solver.solve(w.weights);
    if (sol.status != SolveStatus::optimal)
      throw std::runtime_error("maa_init: solve returned " + to_string(sol.status));
    SolutionRecord rec;
    rec.iteration = it;
    rec.method = "maa-init";
    rec.x = sol.values;
    rec.mga_point = p.project(sol.values);
    rec.objective_vector = w.weights;
    rec.cost = p.cost_of(sol.values);
    rec.formulate_ns =
        std::max<std::int64_t>(1, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    rec.solve_ns = std::max<std::int64_t>(1, sol.solve_wall_time.count());
    archive.insert(std::move(rec));

    if (archive.unique_count() >= static_cast<std::size_t>(dim + 1) &&
        affine_rank(archive.unique_projections()) >= dim)
      return archive;
  }
  throw std::runtime_error(
      "maa_init: could not reach " + std::to_string(dim + 1) +
      " affinely independent points in " + std::to_string(max_init_iters) +
      " iterations (affine rank " + std::to_string(affine_rank(archive.unique_projections())) +
      " of " + std::to_string(dim) + "; the near-optimal region may be lower-dimensional)");
}

std::vector<ObjectiveVector> default_brackets(int n) {
  std::vector<ObjectiveVector> out;
  for (int k = 0; k < n; ++k) {
    ObjectiveVector plus, minus;
    plus.method = minus.method = "bracket";
    plus.weights.assign(n, 0.0);
    minus.weights.assign(n, 0.0);
    plus.weights[k] = 1.0;   // minimize variable k
    minus.weights[k] = -1.0; // maximize variable k
    out.push_back(std::move(plus));
    out.push_back(std::move(minus));
  }
  return out;
}

HybridSchedule hybrid_schedule(int n, int total, const std::vector<ObjectiveVector>& brackets,
                               MethodState& state) {
  if (n < 1) throw std::invalid_argument("hybrid_schedule: n must be >= 1");
  if (total < 1) throw std::invalid_argument("hybrid_schedule: total must be >= 1");

  HybridSchedule out;
  auto is_dup = [&](const std::vector<double>& w) {
    for (const auto& v : out.vectors)
      if (v.weights == w) return true;
    return false;
  };
  for (const auto& b : brackets) {
    if (static_cast<int>(out.vectors.size()) >= total) break;
    if (static_cast<int>(b.weights.size()) != n)
      throw std::invalid_argument("hybrid_schedule: bracket length mismatch");
    if (is_dup(b.weights)) continue;
    out.vectors.push_back(b);
  }
  // coverage: every variable probed in both directions by the brackets
  for (int k = 0; k < n && !out.coverage_warning; ++k) {
    bool has_min = false, has_max = false;
    for (const auto& v : out.vectors) {
      if (v.method != "bracket") continue;
      if (v.weights[k] > 0) has_min = true;
      if (v.weights[k] < 0) has_max = true;
    }
    if (!has_min || !has_max) out.coverage_warning = true;
  }
  while (static_cast<int>(out.vectors.size()) < total) {
    ObjectiveVector w = random_propose(state, n);
    if (is_dup(w.weights)) continue;
    out.vectors.push_back(std::move(w));
  }
  return out;
}

}  // namespace mga
