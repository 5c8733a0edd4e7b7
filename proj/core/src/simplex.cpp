#include "mga/simplex.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>

namespace mga {

namespace {

constexpr double kDualTol = 1e-9;     // reduced-cost optimality tolerance
constexpr double kPivTol = 1e-9;      // smallest usable ratio-test denominator
constexpr double kDegenStep = 1e-9;   // step below this counts as degenerate
constexpr double kBoundTol = 1e-7;    // basic-variable bound violation tolerance
constexpr double kDriveTol = 1e-7;    // pivot element for artificial drive-out
constexpr int kBlandTrigger = 64;     // degenerate pivots before Bland kicks in
constexpr int kRefactorPeriod = 256;  // product-form updates between refactors

enum class VStat : unsigned char { basic, at_lower, at_upper, free_nb };

struct SparseCol {
  std::vector<int> rows;
  std::vector<double> vals;
};

}  // namespace

struct SimplexSolver::Impl {
  // ---- loaded problem (normalized to minimize) ----
  int n_struct = 0;
  int m = 0;
  double sense_sign = 1.0;  // +1 loaded minimize, -1 loaded maximize
  std::vector<SparseCol> cols;   // structural, then slack, then artificial
  std::vector<double> lo, hi;    // per column
  std::vector<double> cost;      // phase-2 cost per column (structural only nonzero)
  std::vector<double> rhs;       // per row
  std::vector<Relation> row_rel;
  int n_slack = 0;               // slack columns directly after structurals
  int first_artificial = 0;      // == n_struct + n_slack
  std::vector<char> is_artificial;

  // ---- basis state ----
  bool has_basis = false;
  std::vector<int> basis;        // row -> column
  std::vector<VStat> vstat;      // column -> status
  std::vector<double> xval;      // column -> current value
  Eigen::MatrixXd binv;
  int updates_since_refactor = 0;

  // scratch
  Eigen::VectorXd y, w, cb;

  int ncols() const { return static_cast<int>(cols.size()); }

  // ---------------------------------------------------------------- load
  void load(const LinearProgram& lp) {
    lp.validate();
    n_struct = lp.num_vars();
    m = lp.num_constraints();
    sense_sign = lp.sense() == Sense::minimize ? 1.0 : -1.0;

    cols.assign(n_struct, {});
    lo.assign(n_struct, 0.0);
    hi.assign(n_struct, 0.0);
    cost.assign(n_struct, 0.0);
    rhs.assign(m, 0.0);
    row_rel.assign(m, Relation::less_equal);

    for (int j = 0; j < n_struct; ++j) {
      lo[j] = lp.lower_bounds()[j];
      hi[j] = lp.upper_bounds()[j];
      cost[j] = sense_sign * lp.objective()[j];
    }
    const auto& rows = lp.constraints();
    for (int i = 0; i < m; ++i) {
      rhs[i] = rows[i].rhs;
      row_rel[i] = rows[i].relation;
      for (std::size_t t = 0; t < rows[i].indices.size(); ++t) {
        cols[rows[i].indices[t]].rows.push_back(i);
        cols[rows[i].indices[t]].vals.push_back(rows[i].coeffs[t]);
      }
    }
    // one slack per inequality row
    n_slack = 0;
    for (int i = 0; i < m; ++i) {
      if (row_rel[i] == Relation::equal) continue;
      SparseCol sc;
      sc.rows.push_back(i);
      sc.vals.push_back(row_rel[i] == Relation::less_equal ? 1.0 : -1.0);
      cols.push_back(std::move(sc));
      lo.push_back(0.0);
      hi.push_back(kInf);
      cost.push_back(0.0);
      ++n_slack;
    }
    first_artificial = n_struct + n_slack;
    is_artificial.assign(cols.size(), 0);
    has_basis = false;
  }

  void set_objective(std::span<const double> c) {
    if (static_cast<int>(c.size()) != n_struct)
      throw std::invalid_argument("set_objective: length mismatch");
    for (int j = 0; j < n_struct; ++j) cost[j] = sense_sign * c[j];
  }

  void set_variable_bounds(int var, double l, double h) {
    if (var < 0 || var >= n_struct)
      throw std::invalid_argument("set_variable_bounds: index out of range");
    if (l > h) throw std::invalid_argument("set_variable_bounds: lower > upper");
    lo[var] = l;
    hi[var] = h;
    if (has_basis && vstat[var] != VStat::basic) {
      // re-snap the nonbasic value onto the (possibly moved) bound
      if (vstat[var] == VStat::at_lower) {
        if (std::isfinite(l)) xval[var] = l;
        else if (std::isfinite(h)) { vstat[var] = VStat::at_upper; xval[var] = h; }
        else { vstat[var] = VStat::free_nb; xval[var] = 0.0; }
      } else if (vstat[var] == VStat::at_upper) {
        if (std::isfinite(h)) xval[var] = h;
        else if (std::isfinite(l)) { vstat[var] = VStat::at_lower; xval[var] = l; }
        else { vstat[var] = VStat::free_nb; xval[var] = 0.0; }
      }
    }
  }

  // ------------------------------------------------------------- helpers
  double col_dot(const SparseCol& c, const Eigen::VectorXd& v) const {
    double s = 0.0;
    for (std::size_t t = 0; t < c.rows.size(); ++t) s += c.vals[t] * v[c.rows[t]];
    return s;
  }

  void ftran(int j, Eigen::VectorXd& out) const {  // out = B^-1 * A_j
    out.setZero(m);
    const SparseCol& c = cols[j];
    for (std::size_t t = 0; t < c.rows.size(); ++t) out += c.vals[t] * binv.col(c.rows[t]);
  }

  double nonbasic_value(int j) const {
    switch (vstat[j]) {
      case VStat::at_lower: return lo[j];
      case VStat::at_upper: return hi[j];
      default: return 0.0;
    }
  }

  // rebuild B^-1 from the basis columns and recompute basic values
  bool refactor() {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m, m);
    for (int r = 0; r < m; ++r) {
      const SparseCol& c = cols[basis[r]];
      for (std::size_t t = 0; t < c.rows.size(); ++t) B(c.rows[t], r) = c.vals[t];
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    binv = lu.inverse();
    if (!binv.allFinite()) return false;
    recompute_basics();
    updates_since_refactor = 0;
    return true;
  }

  void recompute_basics() {
    Eigen::VectorXd adj = Eigen::Map<const Eigen::VectorXd>(rhs.data(), m);
    for (int j = 0; j < ncols(); ++j) {
      if (vstat[j] == VStat::basic) continue;
      const double v = xval[j];
      if (v == 0.0) continue;
      const SparseCol& c = cols[j];
      for (std::size_t t = 0; t < c.rows.size(); ++t) adj[c.rows[t]] -= c.vals[t] * v;
    }
    Eigen::VectorXd xb = binv * adj;
    for (int r = 0; r < m; ++r) xval[basis[r]] = xb[r];
  }

  double basic_bound_violation() const {
    double worst = 0.0;
    for (int r = 0; r < m; ++r) {
      const int j = basis[r];
      worst = std::max(worst, lo[j] - xval[j]);
      worst = std::max(worst, xval[j] - hi[j]);
    }
    return worst;
  }

  // ------------------------------------------------------- cold start
  // slack basis where feasible, artificials elsewhere
  void build_initial_basis() {
    cols.resize(first_artificial);
    lo.resize(first_artificial);
    hi.resize(first_artificial);
    cost.resize(first_artificial);
    is_artificial.assign(first_artificial, 0);

    vstat.assign(first_artificial, VStat::at_lower);
    xval.assign(first_artificial, 0.0);
    for (int j = 0; j < n_struct; ++j) {
      if (std::isfinite(lo[j])) {
        vstat[j] = VStat::at_lower;
        xval[j] = lo[j];
      } else if (std::isfinite(hi[j])) {
        vstat[j] = VStat::at_upper;
        xval[j] = hi[j];
      } else {
        vstat[j] = VStat::free_nb;
        xval[j] = 0.0;
      }
    }
    // row activities at the nonbasic point
    std::vector<double> act(m, 0.0);
    for (int j = 0; j < n_struct; ++j) {
      if (xval[j] == 0.0) continue;
      const SparseCol& c = cols[j];
      for (std::size_t t = 0; t < c.rows.size(); ++t) act[c.rows[t]] += c.vals[t] * xval[j];
    }

    basis.assign(m, -1);
    binv = Eigen::MatrixXd::Zero(m, m);
    int slack_j = n_struct;
    for (int i = 0; i < m; ++i) {
      const double r = rhs[i] - act[i];
      int chosen = -1;
      double value = 0.0;
      double coef = 1.0;
      if (row_rel[i] == Relation::less_equal) {
        if (r >= 0.0) { chosen = slack_j; value = r; coef = 1.0; }
      } else if (row_rel[i] == Relation::greater_equal) {
        if (r <= 0.0) { chosen = slack_j; value = -r; coef = -1.0; }
      }
      if (chosen < 0) {
        // artificial with sign chosen so its value is nonnegative
        coef = r >= 0.0 ? 1.0 : -1.0;
        SparseCol ac;
        ac.rows.push_back(i);
        ac.vals.push_back(coef);
        cols.push_back(std::move(ac));
        lo.push_back(0.0);
        hi.push_back(kInf);
        cost.push_back(0.0);
        is_artificial.push_back(1);
        vstat.push_back(VStat::basic);
        xval.push_back(std::abs(r));
        chosen = ncols() - 1;
        if (row_rel[i] != Relation::equal) {
          vstat[slack_j] = VStat::at_lower;
          xval[slack_j] = 0.0;
        }
      } else {
        vstat[chosen] = VStat::basic;
        xval[chosen] = value;
      }
      basis[i] = chosen;
      binv(i, i) = 1.0 / coef;
      if (row_rel[i] != Relation::equal) ++slack_j;
    }
    updates_since_refactor = 0;
    has_basis = true;
  }

  // ---------------------------------------------------------- pivoting
  struct PriceResult {
    int col = -1;
    double sigma = 1.0;  // +1 entering increases, -1 decreases
  };

  std::optional<PriceResult> price(const std::vector<double>& c, bool bland) {
    cb.resize(m);
    for (int r = 0; r < m; ++r) cb[r] = c[basis[r]];
    y.noalias() = binv.transpose() * cb;

    PriceResult best;
    double best_viol = kDualTol;
    for (int j = 0; j < ncols(); ++j) {
      if (vstat[j] == VStat::basic) continue;
      if (is_artificial[j]) continue;            // artificials never re-enter
      if (hi[j] - lo[j] <= 0.0) continue;        // fixed columns cannot move
      const double d = c[j] - col_dot(cols[j], y);
      double viol = 0.0;
      double sigma = 1.0;
      if (vstat[j] == VStat::at_lower) {
        if (d < -kDualTol) { viol = -d; sigma = 1.0; }
      } else if (vstat[j] == VStat::at_upper) {
        if (d > kDualTol) { viol = d; sigma = -1.0; }
      } else {  // free
        if (d < -kDualTol) { viol = -d; sigma = 1.0; }
        else if (d > kDualTol) { viol = d; sigma = -1.0; }
      }
      if (viol <= 0.0) continue;
      if (bland) {
        best = {j, sigma};  // smallest eligible index
        return best;
      }
      // Dantzig: most violating reduced cost; ties go to the highest index
      if (viol >= best_viol) {
        best_viol = viol;
        best = {j, sigma};
      }
    }
    if (best.col < 0) return std::nullopt;
    return best;
  }

  struct RatioResult {
    double t = kInf;
    int row = -1;        // leaving row, -1 for a bound flip
    bool to_upper = false;  // leaving variable lands on its upper bound
    bool flip = false;
  };

  RatioResult ratio_test(int q, double sigma, bool bland) {
    RatioResult res;
    // entering variable's own range (bound flip)
    if (std::isfinite(hi[q]) && std::isfinite(lo[q])) {
      res.t = hi[q] - lo[q];
      res.flip = true;
    }
    double best_piv = 0.0;
    for (int r = 0; r < m; ++r) {
      const double delta = sigma * w[r];
      const int j = basis[r];
      double t_r = kInf;
      bool to_upper = false;
      if (delta > kPivTol) {
        if (!std::isfinite(lo[j])) continue;
        t_r = (xval[j] - lo[j]) / delta;
      } else if (delta < -kPivTol) {
        if (!std::isfinite(hi[j])) continue;
        t_r = (hi[j] - xval[j]) / (-delta);
        to_upper = true;
      } else {
        continue;
      }
      if (t_r < 0.0) t_r = 0.0;  // tiny bound overshoot from roundoff
      const double tie = 1e-12 * (1.0 + std::min(res.t, t_r));
      bool take = false;
      if (res.row < 0) {
        take = t_r <= res.t;  // row block preferred over a flip at equal step
      } else if (t_r < res.t - tie) {
        take = true;
      } else if (t_r <= res.t + tie) {
        // tie: largest pivot element for stability, lowest basic column
        // index in Bland mode
        take = bland ? basis[r] < basis[res.row] : std::abs(w[r]) > best_piv;
      }
      if (take) {
        res = {std::min(t_r, res.t), r, to_upper, false};
        best_piv = std::abs(w[r]);
      }
    }
    return res;
  }

  void apply_pivot(int q, double sigma, const RatioResult& rr) {
    const double step = sigma * rr.t;
    if (rr.flip && rr.row < 0) {
      for (int r = 0; r < m; ++r) xval[basis[r]] -= step * w[r];
      vstat[q] = vstat[q] == VStat::at_lower ? VStat::at_upper : VStat::at_lower;
      xval[q] = vstat[q] == VStat::at_lower ? lo[q] : hi[q];
      return;
    }
    const int r = rr.row;
    const int leaving = basis[r];
    for (int i = 0; i < m; ++i) xval[basis[i]] -= step * w[i];
    xval[q] = nonbasic_value(q) + step;
    xval[leaving] = rr.to_upper ? hi[leaving] : lo[leaving];
    vstat[leaving] = rr.to_upper ? VStat::at_upper : VStat::at_lower;
    vstat[q] = VStat::basic;
    basis[r] = q;

    // product-form update of the explicit inverse
    const double alpha = w[r];
    Eigen::RowVectorXd rowr = binv.row(r) / alpha;
    binv.noalias() -= w * rowr;
    binv.row(r) = rowr;
    ++updates_since_refactor;
  }

  // returns status; `c` is the phase cost vector
  SolveStatus iterate(const std::vector<double>& c, long max_iters) {
    int degen_run = 0;
    bool bland = false;
    for (long it = 0; it < max_iters; ++it) {
      if (updates_since_refactor >= kRefactorPeriod) {
        if (!refactor()) return SolveStatus::numerical_failure;
      }
      auto pr = price(c, bland);
      if (!pr) return SolveStatus::optimal;
      ftran(pr->col, w);
      RatioResult rr = ratio_test(pr->col, pr->sigma, bland);
      if (rr.row < 0 && !rr.flip) return SolveStatus::unbounded;
      if (rr.row >= 0 && std::abs(w[rr.row]) < kPivTol)
        return SolveStatus::numerical_failure;
      apply_pivot(pr->col, pr->sigma, rr);
      if (rr.t <= kDegenStep) {
        if (++degen_run >= kBlandTrigger) bland = true;
      } else {
        degen_run = 0;
        bland = false;
      }
    }
    return SolveStatus::iteration_limit;
  }

  // pivot artificial variables out of the basis where possible; remaining
  // ones sit on redundant rows and are pinned to zero
  void retire_artificials() {
    for (int r = 0; r < m; ++r) {
      const int j = basis[r];
      if (!is_artificial[j]) continue;
      int pivot_col = -1;
      double pivot_val = 0.0;
      for (int q = 0; q < first_artificial; ++q) {
        if (vstat[q] == VStat::basic) continue;
        double alpha = 0.0;
        const SparseCol& c = cols[q];
        for (std::size_t t = 0; t < c.rows.size(); ++t) alpha += c.vals[t] * binv(r, c.rows[t]);
        if (std::abs(alpha) > std::max(kDriveTol, std::abs(pivot_val))) {
          pivot_col = q;
          pivot_val = alpha;
        }
      }
      if (pivot_col >= 0) {
        ftran(pivot_col, w);
        RatioResult rr{0.0, r, false, false};
        apply_pivot(pivot_col, 1.0, rr);
        xval[j] = 0.0;
      }
    }
    for (int j = first_artificial; j < ncols(); ++j) hi[j] = 0.0;  // pin to zero
  }

  // ------------------------------------------------------------- solve
  Solution solve() {
    const auto t0 = std::chrono::steady_clock::now();
    Solution sol;
    sol.status = solve_inner(true);
    if (sol.status == SolveStatus::optimal) {
      sol.values.assign(xval.begin(), xval.begin() + n_struct);
      double z = 0.0;
      for (int j = 0; j < n_struct; ++j) z += cost[j] * xval[j];
      sol.objective_value = sense_sign * z;
    }
    sol.solve_wall_time = std::chrono::steady_clock::now() - t0;
    return sol;
  }

  SolveStatus solve_inner(bool allow_retry) {
    const long max_iters = 20000L + 50L * (m + n_struct);

    bool need_phase1 = true;
    if (has_basis && static_cast<int>(basis.size()) == m) {
      if (refactor() && basic_bound_violation() <= kBoundTol) need_phase1 = false;
    }
    if (need_phase1) {
      build_initial_basis();
      const bool any_artificial = ncols() > first_artificial;
      if (any_artificial) {
        std::vector<double> c1(ncols(), 0.0);
        for (int j = first_artificial; j < ncols(); ++j) c1[j] = 1.0;
        SolveStatus st = iterate(c1, max_iters);
        if (st == SolveStatus::unbounded) st = SolveStatus::numerical_failure;  // cannot happen
        if (st == SolveStatus::numerical_failure || st == SolveStatus::iteration_limit) {
          has_basis = false;
          return st;
        }
        double infeas = 0.0;
        for (int j = first_artificial; j < ncols(); ++j) infeas += std::max(0.0, xval[j]);
        double scale = 1.0;
        for (int i = 0; i < m; ++i) scale = std::max(scale, std::abs(rhs[i]));
        if (infeas > 1e-7 * scale) {
          has_basis = false;
          return SolveStatus::infeasible;
        }
        retire_artificials();
      }
    }

    std::vector<double> c2(cost);
    c2.resize(ncols(), 0.0);
    SolveStatus st = iterate(c2, max_iters);
    if (st == SolveStatus::optimal) {
      if (!refactor()) st = SolveStatus::numerical_failure;
      else if (!verify_primal()) {
        if (allow_retry) {
          has_basis = false;
          return solve_inner(false);
        }
        st = SolveStatus::numerical_failure;
      }
    }
    if (st != SolveStatus::optimal && st != SolveStatus::unbounded) has_basis = false;
    return st;
  }

  bool verify_primal() const {
    double scale = 1.0;
    for (int i = 0; i < m; ++i) scale = std::max(scale, std::abs(rhs[i]));
    std::vector<double> act(m, 0.0);
    for (int j = 0; j < ncols(); ++j) {
      const double v = xval[j];
      if (v == 0.0) continue;
      const SparseCol& c = cols[j];
      for (std::size_t t = 0; t < c.rows.size(); ++t) act[c.rows[t]] += c.vals[t] * v;
    }
    for (int i = 0; i < m; ++i)
      if (std::abs(act[i] - rhs[i]) > 5e-7 * scale) return false;
    for (int j = 0; j < ncols(); ++j) {
      if (xval[j] < lo[j] - kBoundTol || xval[j] > hi[j] + kBoundTol) return false;
    }
    return true;
  }
};

SimplexSolver::SimplexSolver() : impl_(std::make_unique<Impl>()) {}
SimplexSolver::~SimplexSolver() = default;
SimplexSolver::SimplexSolver(SimplexSolver&&) noexcept = default;
SimplexSolver& SimplexSolver::operator=(SimplexSolver&&) noexcept = default;

void SimplexSolver::load(const LinearProgram& lp) { impl_->load(lp); }
void SimplexSolver::set_objective(std::span<const double> c) { impl_->set_objective(c); }
void SimplexSolver::set_variable_bounds(int var, double l, double h) {
  impl_->set_variable_bounds(var, l, h);
}
Solution SimplexSolver::solve() { return impl_->solve(); }
void SimplexSolver::reset_basis() { impl_->has_basis = false; }

std::unique_ptr<SolverBackend> make_simplex_backend() {
  return std::make_unique<SimplexSolver>();
}

Solution solve(const LinearProgram& lp) {
  SimplexSolver s;
  s.load(lp);
  return s.solve();
}

MgaSolver::MgaSolver(MgaProblem problem, bool reuse_basis)
    : problem_(std::move(problem)), backend_(make_simplex_backend()), reuse_(reuse_basis) {
  backend_->load(problem_.with_budget_row());
}

Solution MgaSolver::solve(std::span<const double> mga_weights) {
  if (static_cast<int>(mga_weights.size()) != problem_.mga_dim())
    throw std::invalid_argument("MgaSolver::solve: weight length mismatch");
  std::vector<double> c(problem_.base().num_vars(), 0.0);
  for (int k = 0; k < problem_.mga_dim(); ++k) c[problem_.mga_vars()[k]] = mga_weights[k];
  if (!reuse_ && !first_) backend_->reset_basis();
  first_ = false;
  backend_->set_objective(c);
  Solution sol = backend_->solve();
  if (sol.status == SolveStatus::unbounded)
    throw InternalSolverError(
        "MGA subproblem reported unbounded; MGA variables must be box-bounded");
  if (sol.status == SolveStatus::optimal && !problem_.within_budget(sol.values))
    sol.status = SolveStatus::numerical_failure;
  return sol;
}

Solution solve_with_objective(const MgaProblem& p, std::span<const double> mga_weights) {
  MgaSolver s(p, /*reuse_basis=*/false);
  return s.solve(mga_weights);
}

}  // namespace mga
