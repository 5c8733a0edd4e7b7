#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mga/lp.hpp"

namespace mga {

// Which reference problem to build, plus its generation parameters.
struct TestbedSpec {
  enum class Kind { reference3d, random_lp, toy_cem };
  Kind kind = Kind::reference3d;
  int dimension = 3;       // random_lp variable count
  std::uint64_t seed = 0;  // generation seed (random_lp, toy_cem)

  // toy capacity-expansion parameters
  int zones = 3;
  int hours = 72;
  double demand_scale = 1.0;  // 0 gives the null system (z* = 0)

  static TestbedSpec reference3d() { return {}; }
  static TestbedSpec random(int n, std::uint64_t seed) {
    TestbedSpec s;
    s.kind = Kind::random_lp;
    s.dimension = n;
    s.seed = seed;
    return s;
  }
  static TestbedSpec cem(std::uint64_t seed, int zones = 3, int hours = 72) {
    TestbedSpec s;
    s.kind = Kind::toy_cem;
    s.seed = seed;
    s.zones = zones;
    s.hours = hours;
    return s;
  }
};

std::string to_string(TestbedSpec::Kind k);
TestbedSpec::Kind testbed_kind_from_string(const std::string& name);

// The known 3-D reference problem:
//   minimize x1 + 2*x2 + 2*x3
//   s.t. x1 + x2 + x3 >= 2,  x1 <= 3,  2*x2 + 3*x3 <= 5,  0 <= x <= 10
LinearProgram reference_3d();

// Random feasible, bounded LP with n variables and 2n ">=" rows:
//   c_j ~ U(0.1, 1],  A_ij ~ U(0, 1),  b_i = u_i * sum_j 10*A_ij with
//   u_i ~ U(0.05, 0.5),  bounds [0, 10].
// The scaling of b guarantees x = (10,...,10) satisfies every row.
LinearProgram random_lp(int n, std::uint64_t seed);

// Brute-force vertex enumeration: every choice of num_vars active rows
// (constraints plus finite bounds) with an invertible subsystem whose
// solution is feasible. Deduplicated at L-inf 1e-7, sorted lexicographically.
// Guards: num_vars <= 8 and constraint+finite-bound row count <= 25.
std::vector<std::vector<double>> enumerate_vertices(const LinearProgram& lp);

// ------------------------------------------------------------------ toy CEM

struct Technology {
  std::string name;
  double fixed_cost = 0.0;     // currency per MW per modeled period
  double variable_cost = 0.0;  // currency per MWh
  double emissions_rate = 0.0; // tCO2 per MWh
  bool dispatchable = false;   // availability profile is flat 1.0
};

struct TransmissionLink {
  int from_zone = 0;
  int to_zone = 0;
  double expansion_cost = 0.0;  // currency per MW per modeled period
  double loss_factor = 0.0;     // fraction lost on delivery
};

// Reduced-scale multi-zone capacity-expansion model. The LP minimizes fixed
// plus variable cost subject to hourly energy balance, availability limits
// on generation, and transmission flow limits. Annual-generation accounting
// variables (GEN_annual[z,tech] = sum_t GEN[z,tech,t]) are always part of
// the LP so both MGA variable modes act on one canonical problem.
class CapacityModel {
 public:
  enum class MgaVarMode { capacity, generation };

  static CapacityModel build(const TestbedSpec& spec);

  const LinearProgram& lp() const { return lp_; }
  int zones() const { return zones_; }
  int hours() const { return hours_; }
  const std::vector<Technology>& technologies() const { return techs_; }
  const std::vector<TransmissionLink>& links() const { return links_; }

  // variable index maps
  int cap_var(int zone, int tech) const;
  int tcap_var(int link) const;
  int gen_var(int zone, int tech, int hour) const;
  int flow_var(int link, int hour, bool forward) const;
  int annual_var(int zone, int tech) const;

  const std::vector<std::vector<double>>& demand() const { return demand_; }
  // capacity factor in [0,1] for (zone, tech, hour)
  double availability(int zone, int tech, int hour) const;

  std::vector<int> select_mga_vars(MgaVarMode mode) const;

  double annual_variable_cost(std::span<const double> x) const;
  double annual_emissions(std::span<const double> x) const;

  // CSV of technology metadata: zone,tech,fixed_cost,variable_cost,emissions_rate
  std::string technology_csv() const;

 private:
  LinearProgram lp_;
  int zones_ = 0;
  int hours_ = 0;
  std::vector<Technology> techs_;
  std::vector<TransmissionLink> links_;
  std::vector<std::vector<double>> demand_;           // [zone][hour] MWh
  std::vector<std::vector<std::vector<double>>> avail_;  // [zone][tech][hour]
  int n_cap_ = 0, n_tcap_ = 0, n_gen_ = 0, n_flow_ = 0;
};

CapacityModel toy_cem(const TestbedSpec& spec);

struct DispatchAudit {
  double mga_variable_cost = 0.0;
  double redispatch_variable_cost = 0.0;
  double mga_emissions = 0.0;
  double redispatch_emissions = 0.0;
  double variable_cost_pct_error = 0.0;  // 100*(mga - redispatch)/redispatch
  double emissions_pct_error = 0.0;
};

// Fixes all capacity variables (CAP and transmission capacity) at the MGA
// solution's values, re-solves minimizing operating cost only, and reports
// the percent error of the MGA solution's operating cost and emissions
// against the cost-optimal redispatch.
DispatchAudit redispatch_audit(const CapacityModel& model, std::span<const double> mga_solution);

// Whole dispatch-distortion experiment: solve the base model, impose the
// budget, run `iterations` random-vector MGA solves over the selected
// variable mode, and audit every solution. A single warm-started backend
// carries both the MGA solves and the redispatch re-solves.
struct AuditExperiment {
  double base_optimal = 0.0;
  double budget = 0.0;
  std::vector<DispatchAudit> audits;
};
AuditExperiment run_dispatch_audit_experiment(const CapacityModel& model,
                                              CapacityModel::MgaVarMode mode, int iterations,
                                              std::uint64_t seed,
                                              const BudgetSpec& budget = BudgetSpec::relative(0.1));

// builds the LP for any testbed kind (CEM via CapacityModel::build)
LinearProgram build_testbed_lp(const TestbedSpec& spec);

}  // namespace mga
