#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mga/lp_io.hpp"
#include "mga/rng.hpp"
#include "mga/simplex.hpp"
#include "mga/testbeds.hpp"

namespace mga {

namespace {

constexpr double kTxExpansionCostPerYr = 30000.0;  // currency/MW-yr
constexpr double kTxLoss = 0.02;
constexpr double kTcapUb = 4000.0;  // MW

struct TechParams {
  const char* name;
  double fixed_cost_per_yr;  // currency/MW-yr
  double variable_cost;      // currency/MWh
  double emissions_rate;     // tCO2/MWh
  double cap_ub;             // MW per zone
  bool dispatchable;
};

constexpr TechParams kTechs[] = {
    {"gas", 85000.0, 45.0, 0.45, 6000.0, true},
    {"solar", 65000.0, 0.5, 0.0, 12000.0, false},
    {"onshore_wind", 95000.0, 1.0, 0.0, 9000.0, false},
    {"offshore_wind", 175000.0, 1.5, 0.0, 7000.0, false},
};
constexpr int kNumTechs = 4;

}  // namespace

int CapacityModel::cap_var(int zone, int tech) const { return zone * kNumTechs + tech; }
int CapacityModel::tcap_var(int link) const { return n_cap_ + link; }
int CapacityModel::gen_var(int zone, int tech, int hour) const {
  return n_cap_ + n_tcap_ + (zone * kNumTechs + tech) * hours_ + hour;
}
int CapacityModel::flow_var(int link, int hour, bool forward) const {
  return n_cap_ + n_tcap_ + n_gen_ + (link * hours_ + hour) * 2 + (forward ? 0 : 1);
}
int CapacityModel::annual_var(int zone, int tech) const {
  return n_cap_ + n_tcap_ + n_gen_ + n_flow_ + zone * kNumTechs + tech;
}

double CapacityModel::availability(int zone, int tech, int hour) const {
  return avail_[zone][tech][hour];
}

CapacityModel CapacityModel::build(const TestbedSpec& spec) {
  if (spec.zones < 2) throw std::invalid_argument("toy_cem: zones must be >= 2");
  if (spec.hours < 24 || spec.hours > 336)
    throw std::invalid_argument("toy_cem: hours must lie in [24, 336]");
  if (spec.demand_scale < 0.0) throw std::invalid_argument("toy_cem: negative demand_scale");

  CapacityModel model;
  const int Z = model.zones_ = spec.zones;
  const int H = model.hours_ = spec.hours;
  const int K = kNumTechs;
  const double period = static_cast<double>(H) / 8760.0;

  for (const auto& t : kTechs) {
    Technology tech;
    tech.name = t.name;
    tech.fixed_cost = t.fixed_cost_per_yr * period;
    tech.variable_cost = t.variable_cost;
    tech.emissions_rate = t.emissions_rate;
    tech.dispatchable = t.dispatchable;
    model.techs_.push_back(std::move(tech));
  }
  for (int l = 0; l < Z - 1; ++l) {
    TransmissionLink link;
    link.from_zone = l;
    link.to_zone = l + 1;
    link.expansion_cost = kTxExpansionCostPerYr * period;
    link.loss_factor = kTxLoss;
    model.links_.push_back(link);
  }
  const int L = static_cast<int>(model.links_.size());

  model.n_cap_ = Z * K;
  model.n_tcap_ = L;
  model.n_gen_ = Z * K * H;
  model.n_flow_ = L * H * 2;
  const int n_annual = Z * K;
  const int n_vars = model.n_cap_ + model.n_tcap_ + model.n_gen_ + model.n_flow_ + n_annual;

  // deterministic demand and availability series
  Rng rng(Rng::derive(spec.seed, 0xce11));
  model.demand_.assign(Z, std::vector<double>(H, 0.0));
  std::vector<double> base(Z);
  for (int z = 0; z < Z; ++z) base[z] = rng.uniform(900.0, 1800.0);
  for (int z = 0; z < Z; ++z) {
    for (int t = 0; t < H; ++t) {
      const double hour_of_day = static_cast<double>(t % 24);
      const double diurnal = 1.0 + 0.3 * std::sin(2.0 * M_PI * (hour_of_day - 8.0) / 24.0);
      const double noise = 1.0 + rng.uniform(-0.05, 0.05);
      model.demand_[z][t] = spec.demand_scale * base[z] * diurnal * noise;
    }
  }
  model.avail_.assign(Z, std::vector<std::vector<double>>(K, std::vector<double>(H, 1.0)));
  for (int z = 0; z < Z; ++z) {
    for (int t = 0; t < H; ++t) {
      const double h = static_cast<double>(t % 24);
      const double s = h >= 6.0 && h <= 18.0 ? std::sin(M_PI * (h - 6.0) / 12.0) : 0.0;
      model.avail_[z][1][t] = s * rng.uniform(0.75, 1.0);  // solar
    }
  }
  auto random_walk = [&](int z, int tech, double lo, double hi, double step, double s0_lo,
                         double s0_hi) {
    double v = rng.uniform(s0_lo, s0_hi);
    for (int t = 0; t < H; ++t) {
      v = std::clamp(v + rng.uniform(-step, step), lo, hi);
      model.avail_[z][tech][t] = v;
    }
  };
  for (int z = 0; z < Z; ++z) random_walk(z, 2, 0.05, 0.85, 0.12, 0.2, 0.6);   // onshore
  for (int z = 0; z < Z; ++z) random_walk(z, 3, 0.20, 0.95, 0.10, 0.4, 0.8);   // offshore

  // reject demand the system cannot build for (gas alone must cover each
  // zone's peak; transmission and renewables only add headroom)
  for (int z = 0; z < Z; ++z) {
    const double peak = *std::max_element(model.demand_[z].begin(), model.demand_[z].end());
    if (peak > kTechs[0].cap_ub)
      throw std::invalid_argument("toy_cem: zone demand exceeds buildable capacity");
  }

  LinearProgram lp(n_vars);
  std::vector<double> obj(n_vars, 0.0);
  for (int z = 0; z < Z; ++z)
    for (int k = 0; k < K; ++k) obj[model.cap_var(z, k)] = model.techs_[k].fixed_cost;
  for (int l = 0; l < L; ++l) obj[model.tcap_var(l)] = model.links_[l].expansion_cost;
  for (int z = 0; z < Z; ++z)
    for (int k = 0; k < K; ++k)
      for (int t = 0; t < H; ++t)
        obj[model.gen_var(z, k, t)] = model.techs_[k].variable_cost;
  lp.set_objective(std::move(obj));

  // hourly energy balance per zone (equality)
  for (int z = 0; z < Z; ++z) {
    for (int t = 0; t < H; ++t) {
      std::vector<int> idx;
      std::vector<double> val;
      for (int k = 0; k < K; ++k) {
        idx.push_back(model.gen_var(z, k, t));
        val.push_back(1.0);
      }
      for (int l = 0; l < L; ++l) {
        const auto& link = model.links_[l];
        if (link.to_zone == z) {
          idx.push_back(model.flow_var(l, t, true));
          val.push_back(1.0 - link.loss_factor);  // delivered forward flow
          idx.push_back(model.flow_var(l, t, false));
          val.push_back(-1.0);                    // reverse flow leaves this zone
        }
        if (link.from_zone == z) {
          idx.push_back(model.flow_var(l, t, true));
          val.push_back(-1.0);
          idx.push_back(model.flow_var(l, t, false));
          val.push_back(1.0 - link.loss_factor);
        }
      }
      lp.add_constraint(std::move(idx), std::move(val), Relation::equal, model.demand_[z][t]);
    }
  }
  // availability limits: GEN <= avail * CAP
  for (int z = 0; z < Z; ++z)
    for (int k = 0; k < K; ++k)
      for (int t = 0; t < H; ++t)
        lp.add_constraint({model.gen_var(z, k, t), model.cap_var(z, k)},
                          {1.0, -model.avail_[z][k][t]}, Relation::less_equal, 0.0);
  // transmission flow limits: fwd + rev <= TCAP
  for (int l = 0; l < L; ++l)
    for (int t = 0; t < H; ++t)
      lp.add_constraint({model.flow_var(l, t, true), model.flow_var(l, t, false),
                         model.tcap_var(l)},
                        {1.0, 1.0, -1.0}, Relation::less_equal, 0.0);
  // annual generation accounting: GEN_annual = sum_t GEN
  for (int z = 0; z < Z; ++z) {
    for (int k = 0; k < K; ++k) {
      std::vector<int> idx;
      std::vector<double> val;
      idx.push_back(model.annual_var(z, k));
      val.push_back(1.0);
      for (int t = 0; t < H; ++t) {
        idx.push_back(model.gen_var(z, k, t));
        val.push_back(-1.0);
      }
      lp.add_constraint(std::move(idx), std::move(val), Relation::equal, 0.0);
    }
  }

  for (int z = 0; z < Z; ++z)
    for (int k = 0; k < K; ++k) lp.set_bounds(model.cap_var(z, k), 0.0, kTechs[k].cap_ub);
  for (int l = 0; l < L; ++l) lp.set_bounds(model.tcap_var(l), 0.0, kTcapUb);
  for (int z = 0; z < Z; ++z)
    for (int k = 0; k < K; ++k)
      for (int t = 0; t < H; ++t) lp.set_bounds(model.gen_var(z, k, t), 0.0, kTechs[k].cap_ub);
  for (int l = 0; l < L; ++l)
    for (int t = 0; t < H; ++t) {
      lp.set_bounds(model.flow_var(l, t, true), 0.0, kTcapUb);
      lp.set_bounds(model.flow_var(l, t, false), 0.0, kTcapUb);
    }
  for (int z = 0; z < Z; ++z)
    for (int k = 0; k < K; ++k)
      lp.set_bounds(model.annual_var(z, k), 0.0, H * kTechs[k].cap_ub);

  lp.validate();
  model.lp_ = std::move(lp);
  return model;
}

CapacityModel toy_cem(const TestbedSpec& spec) { return CapacityModel::build(spec); }

std::vector<int> CapacityModel::select_mga_vars(MgaVarMode mode) const {
  std::vector<int> out;
  if (mode == MgaVarMode::capacity) {
    for (int z = 0; z < zones_; ++z)
      for (int k = 0; k < kNumTechs; ++k) out.push_back(cap_var(z, k));
    for (int l = 0; l < static_cast<int>(links_.size()); ++l) out.push_back(tcap_var(l));
  } else {
    for (int z = 0; z < zones_; ++z)
      for (int k = 0; k < kNumTechs; ++k) out.push_back(annual_var(z, k));
  }
  return out;
}

double CapacityModel::annual_variable_cost(std::span<const double> x) const {
  double total = 0.0;
  for (int z = 0; z < zones_; ++z)
    for (int k = 0; k < kNumTechs; ++k)
      for (int t = 0; t < hours_; ++t)
        total += techs_[k].variable_cost * x[gen_var(z, k, t)];
  return total;
}

double CapacityModel::annual_emissions(std::span<const double> x) const {
  double total = 0.0;
  for (int z = 0; z < zones_; ++z)
    for (int k = 0; k < kNumTechs; ++k) {
      if (techs_[k].emissions_rate == 0.0) continue;
      for (int t = 0; t < hours_; ++t)
        total += techs_[k].emissions_rate * x[gen_var(z, k, t)];
    }
  return total;
}

std::string CapacityModel::technology_csv() const {
  std::ostringstream out;
  out << "zone,tech,fixed_cost,variable_cost,emissions_rate\n";
  for (int z = 0; z < zones_; ++z)
    for (int k = 0; k < kNumTechs; ++k)
      out << z << "," << techs_[k].name << "," << format_coeff(techs_[k].fixed_cost) << ","
          << format_coeff(techs_[k].variable_cost) << ","
          << format_coeff(techs_[k].emissions_rate) << "\n";
  return out.str();
}

namespace {

DispatchAudit make_audit(const CapacityModel& model, std::span<const double> mga_x,
                         std::span<const double> redispatch_x) {
  DispatchAudit a;
  a.mga_variable_cost = model.annual_variable_cost(mga_x);
  a.redispatch_variable_cost = model.annual_variable_cost(redispatch_x);
  a.mga_emissions = model.annual_emissions(mga_x);
  a.redispatch_emissions = model.annual_emissions(redispatch_x);
  const double cost_den = std::max(a.redispatch_variable_cost, 1e-9);
  const double emis_den = std::max(a.redispatch_emissions, 1e-9);
  a.variable_cost_pct_error = 100.0 * (a.mga_variable_cost - a.redispatch_variable_cost) / cost_den;
  a.emissions_pct_error = 100.0 * (a.mga_emissions - a.redispatch_emissions) / emis_den;
  return a;
}

std::vector<double> operating_cost_objective(const CapacityModel& model) {
  std::vector<double> c(model.lp().num_vars(), 0.0);
  for (int z = 0; z < model.zones(); ++z)
    for (int k = 0; k < static_cast<int>(model.technologies().size()); ++k)
      for (int t = 0; t < model.hours(); ++t)
        c[model.gen_var(z, k, t)] = model.technologies()[k].variable_cost;
  return c;
}

std::vector<int> capacity_vars(const CapacityModel& model) {
  std::vector<int> caps;
  for (int z = 0; z < model.zones(); ++z)
    for (int k = 0; k < static_cast<int>(model.technologies().size()); ++k)
      caps.push_back(model.cap_var(z, k));
  for (int l = 0; l < static_cast<int>(model.links().size()); ++l)
    caps.push_back(model.tcap_var(l));
  return caps;
}

}  // namespace

DispatchAudit redispatch_audit(const CapacityModel& model, std::span<const double> mga_solution) {
  LinearProgram lp = model.lp();
  lp.set_objective(operating_cost_objective(model));
  for (int j : capacity_vars(model)) lp.set_bounds(j, mga_solution[j], mga_solution[j]);
  const Solution redisp = solve(lp);
  if (redisp.status != SolveStatus::optimal)
    throw InternalSolverError("redispatch re-solve not optimal: " + to_string(redisp.status));
  return make_audit(model, mga_solution, redisp.values);
}

AuditExperiment run_dispatch_audit_experiment(const CapacityModel& model,
                                              CapacityModel::MgaVarMode mode, int iterations,
                                              std::uint64_t seed, const BudgetSpec& budget) {
  if (iterations < 1) throw std::invalid_argument("audit experiment: iterations must be >= 1");
  AuditExperiment out;

  const Solution base = solve(model.lp());
  if (base.status != SolveStatus::optimal)
    throw std::runtime_error("audit experiment: base solve " + to_string(base.status));
  out.base_optimal = base.objective_value;

  MgaProblem problem = make_mga_problem(model.lp(), base, budget, model.select_mga_vars(mode));
  out.budget = problem.budget();

  // one backend carries the MGA solves and the redispatch re-solves so each
  // re-solve warm starts from the solution it is auditing
  MgaSolver solver(problem, /*reuse_basis=*/true);
  const std::vector<double> opcost = operating_cost_objective(model);
  const std::vector<int> caps = capacity_vars(model);
  const auto& lp = model.lp();

  Rng rng(Rng::derive(seed, 0xad17));
  const int dim = problem.mga_dim();
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> w(dim);
    double norm = 0.0;
    do {
      norm = 0.0;
      for (int k = 0; k < dim; ++k) {
        w[k] = rng.gaussian();
        norm += w[k] * w[k];
      }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (double& v : w) v /= norm;

    const Solution sol = solver.solve(w);
    if (sol.status != SolveStatus::optimal)
      throw std::runtime_error("audit experiment: MGA solve " + to_string(sol.status) +
                               " at iteration " + std::to_string(it));

    auto& be = solver.backend();
    for (int j : caps) be.set_variable_bounds(j, sol.values[j], sol.values[j]);
    be.set_objective(opcost);
    const Solution redisp = be.solve();
    for (int j : caps) be.set_variable_bounds(j, lp.lower_bounds()[j], lp.upper_bounds()[j]);
    if (redisp.status != SolveStatus::optimal)
      throw InternalSolverError("audit experiment: redispatch " + to_string(redisp.status));
    out.audits.push_back(make_audit(model, sol.values, redisp.values));
  }
  return out;
}

}  // namespace mga
