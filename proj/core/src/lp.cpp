#include "mga/lp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mga {

double ConstraintRow::violation(std::span<const double> x) const {
  const double a = activity(x);
  switch (relation) {
    case Relation::less_equal: return std::max(0.0, a - rhs);
    case Relation::greater_equal: return std::max(0.0, rhs - a);
    case Relation::equal: return std::abs(a - rhs);
  }
  return 0.0;
}

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars),
      objective_(num_vars, 0.0),
      lower_(num_vars, 0.0),
      upper_(num_vars, kInf) {
  if (num_vars < 0) throw std::invalid_argument("LinearProgram: negative num_vars");
}

void LinearProgram::set_objective(std::vector<double> c) {
  if (static_cast<int>(c.size()) != num_vars_)
    throw std::invalid_argument("set_objective: length mismatch");
  objective_ = std::move(c);
}

void LinearProgram::add_constraint(std::vector<int> indices, std::vector<double> coeffs,
                                   Relation rel, double rhs) {
  if (indices.size() != coeffs.size())
    throw std::invalid_argument("add_constraint: index/coeff length mismatch");
  ConstraintRow row{std::move(indices), std::move(coeffs), rel, rhs};
  // normalize to strictly increasing indices
  std::vector<std::size_t> order(row.indices.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return row.indices[a] < row.indices[b]; });
  ConstraintRow sorted;
  sorted.relation = row.relation;
  sorted.rhs = row.rhs;
  sorted.indices.reserve(order.size());
  sorted.coeffs.reserve(order.size());
  for (std::size_t t : order) {
    sorted.indices.push_back(row.indices[t]);
    sorted.coeffs.push_back(row.coeffs[t]);
  }
  rows_.push_back(std::move(sorted));
}

void LinearProgram::add_constraint(std::vector<double> dense, Relation rel, double rhs) {
  if (static_cast<int>(dense.size()) != num_vars_)
    throw std::invalid_argument("add_constraint: dense length mismatch");
  std::vector<int> idx;
  std::vector<double> val;
  for (int j = 0; j < num_vars_; ++j) {
    if (dense[j] != 0.0) {
      idx.push_back(j);
      val.push_back(dense[j]);
    }
  }
  add_constraint(std::move(idx), std::move(val), rel, rhs);
}

void LinearProgram::set_bounds(int var, double lo, double hi) {
  if (var < 0 || var >= num_vars_) throw std::invalid_argument("set_bounds: index out of range");
  lower_[var] = lo;
  upper_[var] = hi;
}

double LinearProgram::objective_at(std::span<const double> x) const {
  double z = 0.0;
  for (int j = 0; j < num_vars_; ++j) z += objective_[j] * x[j];
  return z;
}

void LinearProgram::validate() const {
  for (int j = 0; j < num_vars_; ++j) {
    if (std::isnan(lower_[j]) || std::isnan(upper_[j]))
      throw std::invalid_argument("validate: NaN bound");
    if (lower_[j] > upper_[j])
      throw std::invalid_argument("validate: lower bound exceeds upper bound");
    if (!std::isfinite(objective_[j]))
      throw std::invalid_argument("validate: non-finite objective coefficient");
  }
  for (const auto& row : rows_) {
    if (row.indices.size() > static_cast<std::size_t>(num_vars_))
      throw std::invalid_argument("validate: row longer than num_vars");
    int prev = -1;
    for (std::size_t t = 0; t < row.indices.size(); ++t) {
      const int j = row.indices[t];
      if (j < 0 || j >= num_vars_) throw std::invalid_argument("validate: row index out of range");
      if (j <= prev) throw std::invalid_argument("validate: duplicate index in row");
      prev = j;
      if (!std::isfinite(row.coeffs[t]))
        throw std::invalid_argument("validate: non-finite row coefficient");
    }
    if (!std::isfinite(row.rhs)) throw std::invalid_argument("validate: non-finite rhs");
  }
}

double LinearProgram::max_violation(std::span<const double> x) const {
  double worst = 0.0;
  for (const auto& row : rows_) worst = std::max(worst, row.violation(x));
  return worst;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::iteration_limit: return "iteration_limit";
    case SolveStatus::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

namespace {

LinearProgram negate_to_minimize(const LinearProgram& lp) {
  if (lp.sense() == Sense::minimize) return lp;
  LinearProgram out = lp;
  std::vector<double> c = lp.objective();
  for (double& v : c) v = -v;
  out.set_objective(std::move(c));
  out.set_sense(Sense::minimize);
  return out;
}

}  // namespace

MgaProblem::MgaProblem(LinearProgram base_minimized, double optimal_value, double budget,
                       std::vector<int> mga_vars)
    : base_(std::move(base_minimized)),
      optimal_value_(optimal_value),
      budget_(budget),
      mga_vars_(std::move(mga_vars)) {
  if (base_.sense() != Sense::minimize)
    throw std::invalid_argument("MgaProblem: base must be in minimize form");
  if (mga_vars_.empty()) throw std::invalid_argument("MgaProblem: empty mga_vars");
  if (budget_ < optimal_value_)
    throw std::invalid_argument("MgaProblem: budget below optimal value");
  std::vector<int> seen;
  for (int k : mga_vars_) {
    if (k < 0 || k >= base_.num_vars())
      throw std::invalid_argument("MgaProblem: mga var index out of range");
    if (std::find(seen.begin(), seen.end(), k) != seen.end())
      throw std::invalid_argument("MgaProblem: duplicate mga var index");
    seen.push_back(k);
  }
}

LinearProgram MgaProblem::with_budget_row() const {
  LinearProgram lp = base_;
  std::vector<int> idx;
  std::vector<double> val;
  for (int j = 0; j < base_.num_vars(); ++j) {
    if (base_.objective()[j] != 0.0) {
      idx.push_back(j);
      val.push_back(base_.objective()[j]);
    }
  }
  lp.add_constraint(std::move(idx), std::move(val), Relation::less_equal, budget_);
  return lp;
}

std::vector<double> MgaProblem::project(std::span<const double> x) const {
  std::vector<double> p(mga_vars_.size());
  for (std::size_t i = 0; i < mga_vars_.size(); ++i) p[i] = x[mga_vars_[i]];
  return p;
}

bool MgaProblem::within_budget(std::span<const double> x, double tol_scale) const {
  return cost_of(x) <= budget_ + tol_scale * std::max(1.0, std::abs(budget_));
}

MgaProblem make_mga_problem(const LinearProgram& lp, const Solution& opt,
                            const BudgetSpec& budget, std::vector<int> mga_vars,
                            const MgaProblemOptions& opts) {
  if (opt.status != SolveStatus::optimal)
    throw std::invalid_argument("make_mga_problem: base solution not optimal");
  LinearProgram base = negate_to_minimize(lp);
  // objective value in minimize space
  const double z = lp.sense() == Sense::minimize ? opt.objective_value : -opt.objective_value;
  double resolved = 0.0;
  if (budget.amount < 0) throw std::invalid_argument("make_mga_problem: negative budget amount");
  if (budget.mode == BudgetSpec::Mode::relative) {
    if (z <= 0.0 && !opts.allow_degenerate_relative)
      throw std::invalid_argument(
          "make_mga_problem: degenerate relative budget (optimal value <= 0 does not expand the "
          "region); use absolute mode");
    resolved = z * (1.0 + budget.amount);
    if (z <= 0.0) resolved = z;  // degenerate but explicitly allowed: keep region unexpanded
  } else {
    resolved = z + budget.amount;
  }
  return MgaProblem(std::move(base), z, resolved, std::move(mga_vars));
}

}  // namespace mga
