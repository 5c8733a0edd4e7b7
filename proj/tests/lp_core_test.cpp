#include "doctest.h"

#include <stdexcept>

#include "mga/lp.hpp"
#include "mga/simplex.hpp"
#include "mga/testbeds.hpp"

using namespace mga;

TEST_CASE("linear program validation") {
  LinearProgram lp(2);
  lp.set_objective({1.0, 1.0});
  lp.add_constraint({0, 1}, {1.0, 1.0}, Relation::less_equal, 1.0);
  CHECK_NOTHROW(lp.validate());

  SUBCASE("crossed bounds rejected") {
    lp.set_bounds(0, 2.0, 1.0);
    CHECK_THROWS_AS(lp.validate(), std::invalid_argument);
  }
  SUBCASE("non-finite coefficient rejected") {
    lp.add_constraint({0}, {kInf}, Relation::less_equal, 1.0);
    CHECK_THROWS_AS(lp.validate(), std::invalid_argument);
  }
  SUBCASE("out-of-range index rejected") {
    lp.add_constraint({5}, {1.0}, Relation::less_equal, 1.0);
    CHECK_THROWS_AS(lp.validate(), std::invalid_argument);
  }
}

TEST_CASE("budget construction") {
  Solution opt;
  opt.status = SolveStatus::optimal;
  opt.objective_value = 2.0;
  LinearProgram lp = reference_3d();

  SUBCASE("absolute slack of 3 on z*=2 gives budget 5") {
    auto p = make_mga_problem(lp, opt, BudgetSpec::absolute(3.0), {0, 1, 2});
    CHECK(p.budget() == doctest::Approx(5.0));
    CHECK(p.optimal_value() == doctest::Approx(2.0));
  }
  SUBCASE("relative 10% on z*=2 gives budget 2.2") {
    auto p = make_mga_problem(lp, opt, BudgetSpec::relative(0.1), {0, 1, 2});
    CHECK(p.budget() == doctest::Approx(2.2));
  }
  SUBCASE("relative mode on z*=0 is degenerate") {
    opt.objective_value = 0.0;
    CHECK_THROWS_AS(make_mga_problem(lp, opt, BudgetSpec::relative(0.1), {0, 1, 2}),
                    std::invalid_argument);
  }
  SUBCASE("empty mga_vars rejected") {
    CHECK_THROWS_AS(make_mga_problem(lp, opt, BudgetSpec::absolute(1.0), {}),
                    std::invalid_argument);
  }
  SUBCASE("non-optimal base rejected") {
    opt.status = SolveStatus::infeasible;
    CHECK_THROWS_AS(make_mga_problem(lp, opt, BudgetSpec::absolute(1.0), {0}),
                    std::invalid_argument);
  }
  SUBCASE("budget row equals the base objective row") {
    auto p = make_mga_problem(lp, opt, BudgetSpec::absolute(3.0), {0, 1, 2});
    LinearProgram ext = p.with_budget_row();
    const auto& row = ext.constraints().back();
    REQUIRE(row.indices.size() == 3);
    for (std::size_t t = 0; t < row.indices.size(); ++t)
      CHECK(row.coeffs[t] == lp.objective()[row.indices[t]]);
    CHECK(row.relation == Relation::less_equal);
    CHECK(row.rhs == doctest::Approx(5.0));
  }
}

TEST_CASE("maximize sense negates into minimize form") {
  LinearProgram lp(2);
  lp.set_sense(Sense::maximize);
  lp.set_objective({1.0, 1.0});
  lp.add_constraint({0, 1}, {1.0, 1.0}, Relation::less_equal, 4.0);
  lp.set_bounds(0, 0.0, 10.0);
  lp.set_bounds(1, 0.0, 10.0);

  Solution opt = solve(lp);
  REQUIRE(opt.status == SolveStatus::optimal);
  CHECK(opt.objective_value == doctest::Approx(4.0));

  // absolute slack of 2: minimize space z* = -4, budget -2, i.e. x1+x2 >= 2
  auto p = make_mga_problem(lp, opt, BudgetSpec::absolute(2.0), {0, 1});
  CHECK(p.base().sense() == Sense::minimize);
  CHECK(p.base().objective()[0] == doctest::Approx(-1.0));
  CHECK(p.optimal_value() == doctest::Approx(-4.0));
  CHECK(p.budget() == doctest::Approx(-2.0));

  // a relative budget on a negative minimize optimum shrinks the region and
  // is flagged degenerate
  CHECK_THROWS_AS(make_mga_problem(lp, opt, BudgetSpec::relative(0.1), {0, 1}),
                  std::invalid_argument);
}
