#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace mga {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Global absolute feasibility tolerance, per constraint row residual.
inline constexpr double kFeasTol = 1e-6;

enum class Sense { minimize, maximize };

enum class Relation { less_equal, greater_equal, equal };

struct ConstraintRow {
  // sparse row: parallel index/coefficient arrays, indices strictly increasing
  std::vector<int> indices;
  std::vector<double> coeffs;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;

  double activity(std::span<const double> x) const {
    double a = 0.0;
    for (std::size_t t = 0; t < indices.size(); ++t) a += coeffs[t] * x[indices[t]];
    return a;
  }
  // signed violation of the row at x (0 when satisfied)
  double violation(std::span<const double> x) const;
};

class LinearProgram {
 public:
  LinearProgram() = default;
  explicit LinearProgram(int num_vars);

  int num_vars() const { return num_vars_; }
  Sense sense() const { return sense_; }
  void set_sense(Sense s) { sense_ = s; }

  void set_objective(std::vector<double> c);
  const std::vector<double>& objective() const { return objective_; }

  void add_constraint(std::vector<int> indices, std::vector<double> coeffs,
                      Relation rel, double rhs);
  // dense convenience overload
  void add_constraint(std::vector<double> dense_coeffs, Relation rel, double rhs);

  const std::vector<ConstraintRow>& constraints() const { return rows_; }
  int num_constraints() const { return static_cast<int>(rows_.size()); }

  void set_bounds(int var, double lo, double hi);
  const std::vector<double>& lower_bounds() const { return lower_; }
  const std::vector<double>& upper_bounds() const { return upper_; }

  double objective_at(std::span<const double> x) const;

  // checks the type invariants; throws std::invalid_argument on violation
  void validate() const;

  // max row violation over all constraints (bounds not included)
  double max_violation(std::span<const double> x) const;

 private:
  int num_vars_ = 0;
  Sense sense_ = Sense::minimize;
  std::vector<double> objective_;
  std::vector<ConstraintRow> rows_;
  std::vector<double> lower_, upper_;
};

enum class SolveStatus {
  optimal,
  infeasible,
  unbounded,
  iteration_limit,
  numerical_failure,
};

std::string to_string(SolveStatus s);

struct Solution {
  SolveStatus status = SolveStatus::numerical_failure;
  std::vector<double> values;  // length num_vars when optimal
  double objective_value = 0.0;
  std::chrono::nanoseconds solve_wall_time{0};
};

struct BudgetSpec {
  enum class Mode { relative, absolute };
  Mode mode = Mode::relative;
  double amount = 0.1;  // epsilon fraction, or absolute slack in objective units

  static BudgetSpec relative(double eps) { return {Mode::relative, eps}; }
  static BudgetSpec absolute(double delta) { return {Mode::absolute, delta}; }
};

// Base LP plus the resolved budget constraint and the MGA variable set.
// The base LP stored here is always in minimize form (a maximize input is
// negated on construction) so the budget row is uniformly c.x <= budget.
class MgaProblem {
 public:
  MgaProblem(LinearProgram base_minimized, double optimal_value, double budget,
             std::vector<int> mga_vars);

  const LinearProgram& base() const { return base_; }
  double optimal_value() const { return optimal_value_; }
  double budget() const { return budget_; }
  const std::vector<int>& mga_vars() const { return mga_vars_; }
  int mga_dim() const { return static_cast<int>(mga_vars_.size()); }

  // base LP with the budget row appended (the last constraint)
  LinearProgram with_budget_row() const;

  // projection of a full decision vector onto the MGA coordinates
  std::vector<double> project(std::span<const double> x) const;

  // base objective value of x (minimize convention)
  double cost_of(std::span<const double> x) const { return base_.objective_at(x); }

  bool within_budget(std::span<const double> x, double tol_scale = 1e-6) const;

 private:
  LinearProgram base_;
  double optimal_value_ = 0.0;
  double budget_ = 0.0;
  std::vector<int> mga_vars_;
};

struct MgaProblemOptions {
  bool allow_degenerate_relative = false;  // permit relative budget on z* <= 0
};

// Imposes the budget constraint: budget = z*(1+eps) (relative) or z*+delta
// (absolute). Throws std::invalid_argument for empty mga_vars, a non-optimal
// base solution, or a degenerate relative budget (z* <= 0) unless allowed.
MgaProblem make_mga_problem(const LinearProgram& lp, const Solution& opt,
                            const BudgetSpec& budget, std::vector<int> mga_vars,
                            const MgaProblemOptions& opts = {});

}  // namespace mga
