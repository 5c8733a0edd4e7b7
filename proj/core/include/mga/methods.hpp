#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mga/archive.hpp"
#include "mga/hullnd.hpp"
#include "mga/lp.hpp"
#include "mga/rng.hpp"

namespace mga {

// a variable has "appeared" in a solution when its value exceeds this
inline constexpr double kHsjNonzeroTol = 1e-6;
// facet normals within this angle of an already-issued one are discarded
inline constexpr double kMaaAngleDedupDeg = 1.0;

enum class Method { hsj, random_vector, minmax, maa, hybrid };
std::string to_string(Method m);
Method method_from_string(const std::string& name);

struct ObjectiveVector {
  std::vector<double> weights;  // over mga_vars, minimization convention
  std::string method;
  int iteration = -1;  // provenance: issuing iteration index
  int facet_id = -1;   // provenance: parent facet (MAA only)
};

// Mutable per-method run state. One instance per run; never shared.
struct MethodState {
  Method method;
  Rng rng;
  std::vector<long> appearance_counts;            // HSJ nonzero-appearance counts
  std::vector<std::vector<double>> used_normals;  // MAA issued outward normals
  std::set<std::vector<int>> issued_signs;        // MinMax issued sign vectors

  MethodState(Method method, std::uint64_t seed, int dim)
      : method(method), rng(Rng::derive(seed, 0x3e7 + static_cast<int>(method))),
        appearance_counts(dim, 0) {}
};

// HSJ: weights[k] = number of archived solutions (duplicates included) in
// which MGA variable k held a value above kHsjNonzeroTol. Recomputed over
// the whole archive each call; state.appearance_counts mirrors the result.
ObjectiveVector hsj_propose(MethodState& state, const SolutionArchive& archive);

// Random Vector: independent standard normals normalized to unit Euclidean
// norm (uniform on the hypersphere).
ObjectiveVector random_propose(MethodState& state, int n);

// Capacity Min/Max: sign vectors over {-1, 0, +1}, never all-zero, no
// duplicates within the batch or against previously issued vectors. Axis
// vectors (+e_k then -e_k) are issued first, so any batch of at least 2n
// covers every variable in both directions.
std::vector<ObjectiveVector> minmax_propose_batch(MethodState& state, int n, int batch);

// MAA stage proposal: outward unit facet normals of the hull, negated into
// minimization convention, deduplicated (angle tolerance) against both the
// batch and previously issued normals, emitted in lexicographic order.
std::vector<ObjectiveVector> maa_propose(MethodState& state, const SolutionArchive& archive,
                                         const HullND& hull,
                                         double angle_tol_deg = kMaaAngleDedupDeg);

// MAA initialization: starting from the base optimum, solve random-vector
// objectives until the archive's unique projections affinely span the MGA
// space (dim+1 affinely independent points). max_init_iters <= 0 picks the
// default of 20 + 10*dim.
SolutionArchive maa_init(const MgaProblem& p, const Solution& base_optimal, MethodState& state,
                         int max_init_iters = 0, double dedup_tol = 1e-6);

// Hybrid/Combo: bracketing vectors first, then random-vector fill, with
// exact duplicates dropped. coverage_warning is set when the emitted
// brackets do not probe every variable in both directions.
struct HybridSchedule {
  std::vector<ObjectiveVector> vectors;
  bool coverage_warning = false;
};
std::vector<ObjectiveVector> default_brackets(int n);
HybridSchedule hybrid_schedule(int n, int total, const std::vector<ObjectiveVector>& brackets,
                               MethodState& state);

}  // namespace mga
