#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "mga/lp.hpp"

namespace mga {

// Raised when a solve produces a state the caller's contract rules out
// (e.g. an unbounded MGA subproblem with box-bounded MGA variables).
struct InternalSolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver backend contract. A backend instance is single-threaded and owns
// one loaded problem; parallel execution uses one instance per worker.
// Repeated solve() calls may reuse the previous basis (warm start) as long
// as the constraint matrix is unchanged; reset_basis() forces a cold start.
class SolverBackend {
 public:
  virtual ~SolverBackend() = default;

  virtual void load(const LinearProgram& lp) = 0;
  // Objective in the loaded problem's sense, full structural length.
  virtual void set_objective(std::span<const double> c) = 0;
  virtual void set_variable_bounds(int var, double lo, double hi) = 0;
  virtual Solution solve() = 0;
  virtual void reset_basis() = 0;
};

// Bundled dense revised-simplex backend (two-phase, bounded variables,
// Dantzig pricing with a Bland anti-cycling fallback). Deterministic for a
// fixed input: no randomized choices anywhere in the pivot rules.
class SimplexSolver final : public SolverBackend {
 public:
  SimplexSolver();
  ~SimplexSolver() override;
  SimplexSolver(SimplexSolver&&) noexcept;
  SimplexSolver& operator=(SimplexSolver&&) noexcept;

  void load(const LinearProgram& lp) override;
  void set_objective(std::span<const double> c) override;
  void set_variable_bounds(int var, double lo, double hi) override;
  Solution solve() override;
  void reset_basis() override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::unique_ptr<SolverBackend> make_simplex_backend();

// Cold, one-shot solve of an LP with the bundled backend.
Solution solve(const LinearProgram& lp);

// Sequential MGA solve helper: owns a backend loaded with the base problem
// plus the budget row. When reuse_basis is true consecutive solves warm
// start from the previous optimal basis; parallel batches should use one
// MgaSolver per worker with reuse_basis = false so results are independent
// of scheduling.
class MgaSolver {
 public:
  explicit MgaSolver(MgaProblem problem, bool reuse_basis = true);

  // Minimizes sum_k w[k] * x[mga_vars[k]] subject to base + budget rows.
  Solution solve(std::span<const double> mga_weights);

  const MgaProblem& problem() const { return problem_; }
  SolverBackend& backend() { return *backend_; }

 private:
  MgaProblem problem_;
  std::unique_ptr<SolverBackend> backend_;
  bool reuse_;
  bool first_ = true;
};

// One-shot (cold) MGA solve; see MgaSolver::solve.
Solution solve_with_objective(const MgaProblem& p, std::span<const double> mga_weights);

}  // namespace mga
