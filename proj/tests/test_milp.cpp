// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include <cmath>

#include "doctest.h"
#include "error.hpp"
#include "fixtures.hpp"
#include "milp.hpp"
#include "oracles.hpp"
#include "random_problems.hpp"

using namespace invmilo;

TEST_SUITE("milp-bb") {
  TEST_CASE("EC binary region: objective -1 at (0,1)") {
    const auto inst = fixtures::ec();
    const std::vector<double> c{-1.0, -1.0};
    const auto out = solve_milp(inst.problem, c);
    REQUIRE(out.status == MilpStatus::Optimal);
    CHECK(out.objective == doctest::Approx(-1.0));
    CHECK(out.incumbent == std::vector<double>{0.0, 1.0});
    CHECK(*oracle::milp_by_enumeration(inst.problem, c) == doctest::Approx(-1.0));
    CHECK(out.objective - out.best_bound <= 1e-6);
  }

  TEST_CASE("grid problem x1 + x2 >= 2 on [0,3]^2") {
    const auto p = fixtures::knapsack().problem;
    const std::vector<double> c{1.0, 1.0};
    const auto out = solve_milp(p, c);
    REQUIRE(out.status == MilpStatus::Optimal);
    CHECK(out.objective == doctest::Approx(2.0));
    CHECK(oracle::grid_points(p).size() == 13);
  }

  TEST_CASE("contradictory rows are infeasible") {
    auto p = make_problem("contra", 1);
    p.upper[0] = 1.0;
    p.is_integer[0] = true;
    p.rows.push_back({"a", {{0, 1.0}}, Relation::GreaterEqual, 1.0});
    p.rows.push_back({"b", {{0, 1.0}}, Relation::LessEqual, 0.0});
    const std::vector<double> c{1.0};
    CHECK(solve_milp(p, c).status == MilpStatus::Infeasible);
  }

  TEST_CASE("integer-infeasible but LP-feasible") {
    auto p = make_problem("parity", 1);
    p.upper[0] = 4.0;
    p.is_integer[0] = true;
    p.rows.push_back({"", {{0, 2.0}}, Relation::Equal, 3.0});
    const std::vector<double> c{1.0};
    CHECK(solve_milp(p, c).status == MilpStatus::Infeasible);
  }

  TEST_CASE("unbounded without oracle") {
    auto p = make_problem("ray", 1);
    p.is_integer[0] = true;
    const std::vector<double> c{-1.0};
    CHECK(solve_milp(p, c).status == MilpStatus::Unbounded);
  }

  TEST_CASE("objective length mismatch") {
    const auto p = fixtures::ec().problem;
    const std::vector<double> c{1.0};
    CHECK_THROWS_AS(solve_milp(p, c), Error);
  }

  TEST_CASE("incumbent stream ends at the optimum") {
    oracle::TestRng rng(5);
    for (int t = 0; t < 30; ++t) {
      const auto p = oracle::random_pure(rng);
      const auto c = oracle::random_cost(rng, p.n);
      std::vector<std::vector<double>> seen;
      std::vector<double> objs;
      const auto out = solve_milp_with_incumbent_stream(
          p, c, {}, {}, [&](std::span<const double> x, double obj) {
            seen.emplace_back(x.begin(), x.end());
            objs.push_back(obj);
          });
      if (out.status != MilpStatus::Optimal) {
        CHECK(seen.empty());
        continue;
      }
      REQUIRE(!seen.empty());
      CHECK(seen.back() == out.incumbent);
      for (std::size_t k = 1; k < objs.size(); ++k) CHECK(objs[k] < objs[k - 1]);
      for (const auto& x : seen) CHECK(is_forward_feasible(p, x));
    }
  }

  TEST_CASE("tau = 0 returns the first violated incumbent") {
    const auto p = fixtures::ec().problem;
    const std::vector<double> c{-1.0, -1.0};
    StopPolicy policy;
    policy.early_stop_tau = 0.0;
    // violation of c~ = (-1,-1) against x_hat = (0,0): b1 + b2
    policy.violation_oracle = [](std::span<const double> x) { return x[0] + x[1]; };
    std::vector<std::vector<double>> seen;
    const auto out = solve_milp_with_incumbent_stream(
        p, c, policy, {}, [&](std::span<const double> x, double) {
          seen.emplace_back(x.begin(), x.end());
        });
    REQUIRE(out.status == MilpStatus::EarlyStopFeasible);
    REQUIRE(seen.size() == 1);
    CHECK(out.incumbent == seen.front());
    CHECK(out.incumbent_violation > 0.0);
  }

  TEST_CASE("tau = 0 with no violated incumbent runs to optimality") {
    const auto p = fixtures::ec().problem;
    const std::vector<double> c{-1.0, -1.0};
    StopPolicy policy;
    policy.early_stop_tau = 0.0;
    policy.violation_oracle = [](std::span<const double>) { return 0.0; };
    const auto out = solve_milp(p, c, policy);
    CHECK(out.status == MilpStatus::Optimal);
    CHECK(out.objective == doctest::Approx(-1.0));
  }

  TEST_CASE("unbounded relaxation escapes past the violation threshold") {
    auto p = make_problem("halfline", 1);
    p.is_integer[0] = true;
    const std::vector<double> c{-1.0};
    StopPolicy policy;
    policy.violation_oracle = [](std::span<const double> x) { return x[0]; };
    policy.big_violation_threshold = 10.0;
    const auto out = solve_milp(p, c, policy);
    REQUIRE(out.status == MilpStatus::UnboundedViolationEscape);
    REQUIRE(out.incumbent.size() == 1);
    CHECK(out.incumbent[0] > 10.0);
    CHECK(out.incumbent_violation > 10.0);
    CHECK(is_forward_feasible(p, out.incumbent));
  }

  TEST_CASE("escape at the default 1e10 threshold on a 2D cone") {
    const auto inst = fixtures::unbounded();
    StopPolicy policy;
    const auto& xh = inst.x_hat;
    const std::vector<double> c = inst.c0;
    policy.violation_oracle = [&](std::span<const double> x) {
      double v = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) v += c[j] * (xh[j] - x[j]);
      return v;
    };
    const auto out = solve_milp(inst.problem, c, policy);
    REQUIRE(out.status == MilpStatus::UnboundedViolationEscape);
    CHECK(out.incumbent_violation > 1e10);
    CHECK(is_forward_feasible(inst.problem, out.incumbent));
  }

  TEST_CASE("time limit zero") {
    const auto p = fixtures::knapsack().problem;
    const std::vector<double> c{1.0, 1.0};
    StopPolicy policy;
    policy.time_limit = 0.0;
    CHECK(solve_milp(p, c, policy).status == MilpStatus::TimeLimit);
  }

  TEST_CASE("100 random pure-integer problems match enumeration") {
    oracle::TestRng rng(424242);
    int feasible = 0;
    for (int t = 0; t < 100; ++t) {
      const auto p = oracle::random_pure(rng);
      const auto c = oracle::random_cost(rng, p.n);
      const auto ref = oracle::milp_by_enumeration(p, c);
      const auto out = solve_milp(p, c);
      CAPTURE(t);
      if (!ref) {
        CHECK(out.status == MilpStatus::Infeasible);
        continue;
      }
      ++feasible;
      REQUIRE(out.status == MilpStatus::Optimal);
      CHECK(std::abs(out.objective - *ref) <= 1e-6);
      CHECK(is_forward_feasible(p, out.incumbent));
    }
    CHECK(feasible >= 40);
  }

  TEST_CASE("50 random mixed problems match the fiber oracle") {
    oracle::TestRng rng(777);
    int feasible = 0;
    for (int t = 0; t < 50; ++t) {
      const auto p = oracle::random_mixed(rng);
      const auto c = oracle::random_cost(rng, p.n);
      const auto ref = oracle::milp_by_enumeration(p, c);
      const auto out = solve_milp(p, c);
      CAPTURE(t);
      if (!ref) {
        CHECK(out.status == MilpStatus::Infeasible);
        continue;
      }
      ++feasible;
      REQUIRE(out.status == MilpStatus::Optimal);
      CHECK(std::abs(out.objective - *ref) <= 1e-6);
      CHECK(is_forward_feasible(p, out.incumbent));
    }
    CHECK(feasible >= 20);
  }

  TEST_CASE("deterministic without time-based policy") {
    oracle::TestRng rng(31);
    for (int t = 0; t < 10; ++t) {
      const auto p = oracle::random_pure(rng);
      const auto c = oracle::random_cost(rng, p.n);
      const auto a = solve_milp(p, c);
      const auto b = solve_milp(p, c);
      CHECK(a.incumbent == b.incumbent);
      CHECK(a.nodes == b.nodes);
    }
  }
}
