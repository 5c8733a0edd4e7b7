#include "mga/testbeds.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mga/rng.hpp"

namespace mga {

std::string to_string(TestbedSpec::Kind k) {
  switch (k) {
    case TestbedSpec::Kind::reference3d: return "reference3d";
    case TestbedSpec::Kind::random_lp: return "random_lp";
    case TestbedSpec::Kind::toy_cem: return "toy_cem";
  }
  return "unknown";
}

TestbedSpec::Kind testbed_kind_from_string(const std::string& name) {
  if (name == "reference3d") return TestbedSpec::Kind::reference3d;
  if (name == "random_lp") return TestbedSpec::Kind::random_lp;
  if (name == "toy_cem") return TestbedSpec::Kind::toy_cem;
  throw std::invalid_argument("unknown testbed kind: " + name);
}

LinearProgram reference_3d() {
  LinearProgram lp(3);
  lp.set_objective({1.0, 2.0, 2.0});
  lp.add_constraint({0, 1, 2}, {1.0, 1.0, 1.0}, Relation::greater_equal, 2.0);
  lp.add_constraint({0}, {1.0}, Relation::less_equal, 3.0);
  lp.add_constraint({1, 2}, {2.0, 3.0}, Relation::less_equal, 5.0);
  for (int j = 0; j < 3; ++j) lp.set_bounds(j, 0.0, 10.0);
  return lp;
}

LinearProgram random_lp(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_lp: n must be >= 2");
  Rng rng(Rng::derive(seed, 0x7e57bed));
  LinearProgram lp(n);
  std::vector<double> c(n);
  for (int j = 0; j < n; ++j) c[j] = 1.0 - 0.9 * rng.uniform();  // U(0.1, 1]
  lp.set_objective(std::move(c));
  for (int i = 0; i < 2 * n; ++i) {
    std::vector<int> idx(n);
    std::vector<double> coeffs(n);
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      idx[j] = j;
      coeffs[j] = rng.uniform();
      row_sum += coeffs[j];
    }
    const double u = rng.uniform(0.05, 0.5);
    lp.add_constraint(std::move(idx), std::move(coeffs), Relation::greater_equal,
                      u * 10.0 * row_sum);
  }
  for (int j = 0; j < n; ++j) lp.set_bounds(j, 0.0, 10.0);
  return lp;
}

std::vector<std::vector<double>> enumerate_vertices(const LinearProgram& lp) {
  lp.validate();
  const int n = lp.num_vars();
  if (n > 8) throw std::invalid_argument("enumerate_vertices: num_vars > 8");

  // assemble the full row set: constraints, then finite bounds
  struct Row {
    std::vector<double> a;
    double b;
  };
  std::vector<Row> rows;
  for (const auto& c : lp.constraints()) {
    Row r{std::vector<double>(n, 0.0), c.rhs};
    for (std::size_t t = 0; t < c.indices.size(); ++t) r.a[c.indices[t]] = c.coeffs[t];
    rows.push_back(std::move(r));
  }
  for (int j = 0; j < n; ++j) {
    if (std::isfinite(lp.lower_bounds()[j])) {
      Row r{std::vector<double>(n, 0.0), lp.lower_bounds()[j]};
      r.a[j] = 1.0;
      rows.push_back(std::move(r));
    }
    if (std::isfinite(lp.upper_bounds()[j])) {
      Row r{std::vector<double>(n, 0.0), lp.upper_bounds()[j]};
      r.a[j] = 1.0;
      rows.push_back(std::move(r));
    }
  }
  const int total = static_cast<int>(rows.size());
  if (total > 25) throw std::invalid_argument("enumerate_vertices: row count > 25");
  if (total < n) return {};

  std::vector<std::vector<double>> found;
  auto feasible = [&](const std::vector<double>& x) {
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(x[j])) return false;
      if (x[j] < lp.lower_bounds()[j] - 1e-7 || x[j] > lp.upper_bounds()[j] + 1e-7) return false;
    }
    return lp.max_violation(x) <= 1e-7;
  };

  std::vector<int> pick(n);
  // iterate over all n-subsets of the row set
  std::vector<int> comb(n);
  for (int i = 0; i < n; ++i) comb[i] = i;
  Eigen::MatrixXd A(n, n);
  Eigen::VectorXd b(n);
  while (true) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A(i, j) = rows[comb[i]].a[j];
      b[i] = rows[comb[i]].b;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.isInvertible()) {
      Eigen::VectorXd x = lu.solve(b);
      std::vector<double> xv(x.data(), x.data() + n);
      if (feasible(xv)) {
        bool dup = false;
        for (const auto& v : found) {
          double d = 0.0;
          for (int j = 0; j < n; ++j) d = std::max(d, std::abs(v[j] - xv[j]));
          if (d <= 1e-7) {
            dup = true;
            break;
          }
        }
        if (!dup) found.push_back(std::move(xv));
      }
    }
    // next combination
    int k = n - 1;
    while (k >= 0 && comb[k] == total - n + k) --k;
    if (k < 0) break;
    ++comb[k];
    for (int i = k + 1; i < n; ++i) comb[i] = comb[i - 1] + 1;
  }
  std::sort(found.begin(), found.end());
  return found;
}

LinearProgram build_testbed_lp(const TestbedSpec& spec) {
  switch (spec.kind) {
    case TestbedSpec::Kind::reference3d: return reference_3d();
    case TestbedSpec::Kind::random_lp: return random_lp(spec.dimension, spec.seed);
    case TestbedSpec::Kind::toy_cem: return CapacityModel::build(spec).lp();
  }
  throw std::invalid_argument("build_testbed_lp: unknown kind");
}

}  // namespace mga
