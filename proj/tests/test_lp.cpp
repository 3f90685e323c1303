// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include <cmath>

#include "doctest.h"
#include "error.hpp"
#include "lp.hpp"
#include "oracles.hpp"
#include "random_problems.hpp"

using namespace invmilo;

namespace {

LinearProgram ec_relaxation() {
  // min -b1 - b2  s.t.  -b1 - 0.6 b2 >= -1,  0 <= b <= 1
  LinearProgram lp;
  lp.add_var(-1.0, 0.0, 1.0);
  lp.add_var(-1.0, 0.0, 1.0);
  lp.add_ge_row({{0, -1.0}, {1, -0.6}}, -1.0);
  return lp;
}

double row_activity(const LpRow& row, const std::vector<double>& x) {
  double s = 0.0;
  for (const auto& e : row.coeffs) s += e.value * x[e.index];
  return s;
}

}  // namespace

TEST_SUITE("lp-simplex") {
  TEST_CASE("single variable bound") {
    LinearProgram lp;
    lp.add_var(-1.0, 0.0, 1.0);
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.x[0] == doctest::Approx(1.0));
    CHECK(out.objective == doctest::Approx(-1.0));
  }

  TEST_CASE("EC relaxation reaches the (0.4, 1) vertex") {
    const auto out = solve_lp(ec_relaxation());
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.x[0] == doctest::Approx(0.4));
    CHECK(out.x[1] == doctest::Approx(1.0));
    CHECK(out.objective == doctest::Approx(-1.4));
    // oracle: the four polytope vertices
    CHECK(*oracle::lp_by_vertices(ec_relaxation()) == doctest::Approx(-1.4));
  }

  TEST_CASE("unbounded single variable returns the recession ray") {
    LinearProgram lp;
    lp.add_var(-1.0, 0.0, kInf);
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::Unbounded);
    REQUIRE(out.ray.size() == 1);
    CHECK(out.ray[0] > 0.0);
  }

  TEST_CASE("unbounded ray satisfies the row directions") {
    // min -x1 - x2 s.t. x1 - x2 >= -1, x2 - 2 x1 <= 3, x >= 0
    LinearProgram lp;
    lp.add_var(-1.0, 0.0, kInf);
    lp.add_var(-1.0, 0.0, kInf);
    lp.add_ge_row({{0, 1.0}, {1, -1.0}}, -1.0);
    lp.rows.push_back({{{0, -2.0}, {1, 1.0}}, -kInf, 3.0});
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::Unbounded);
    const auto& r = out.ray;
    CHECK(r[0] >= -1e-9);
    CHECK(r[1] >= -1e-9);
    CHECK(r[0] - r[1] >= -1e-9);
    CHECK(-2 * r[0] + r[1] <= 1e-9);
    CHECK(-r[0] - r[1] < 0.0);
  }

  TEST_CASE("infeasible rows") {
    LinearProgram lp;
    lp.add_var(0.0, 0.0, 1.0);
    lp.add_ge_row({{0, 1.0}}, 2.0);
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
  }

  TEST_CASE("free variables and equality rows") {
    // min x + y  s.t. x - y = 1, x + y >= -3, x, y free -> obj -3
    LinearProgram lp;
    lp.add_var(1.0, -kInf, kInf);
    lp.add_var(1.0, -kInf, kInf);
    lp.add_eq_row({{0, 1.0}, {1, -1.0}}, 1.0);
    lp.add_ge_row({{0, 1.0}, {1, 1.0}}, -3.0);
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.objective == doctest::Approx(-3.0));
    CHECK(out.x[0] - out.x[1] == doctest::Approx(1.0));
  }

  TEST_CASE("empty row set") {
    LinearProgram lp;
    lp.add_var(2.0, -1.0, 3.0);
    lp.add_var(-1.0, -kInf, 5.0);
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.objective == doctest::Approx(-7.0));
  }

  TEST_CASE("mismatched bounds are rejected") {
    LinearProgram lp;
    lp.objective = {1.0};
    CHECK_THROWS_AS(solve_lp(lp), Error);
  }

  TEST_CASE("deterministic for identical input") {
    oracle::TestRng rng(7);
    const auto lp = oracle::random_lp(rng, false);
    const auto a = solve_lp(lp);
    const auto b = solve_lp(lp);
    CHECK(a.x == b.x);
    CHECK(a.iterations == b.iterations);
  }

  TEST_CASE("200 random LPs agree with vertex enumeration; certificates hold") {
    oracle::TestRng rng(20260101);
    int optimal = 0, infeasible = 0;
    for (int t = 0; t < 200; ++t) {
      const auto lp = oracle::random_lp(rng, t % 10 == 9);
      const auto ref = oracle::lp_by_vertices(lp);
      const auto out = solve_lp(lp);
      CAPTURE(t);
      if (!ref) {
        CHECK(out.status == LpStatus::Infeasible);
        ++infeasible;
        continue;
      }
      REQUIRE(out.status == LpStatus::Optimal);
      ++optimal;
      CHECK(std::abs(out.objective - *ref) <= 1e-7 * std::max(1.0, std::abs(*ref)));
      // primal feasibility
      for (const auto& row : lp.rows) {
        const double act = row_activity(row, out.x);
        CHECK(act >= row.lower - 1e-7);
        CHECK(act <= row.upper + 1e-7);
      }
      // dual sign conditions and dual objective
      double dual_obj = 0.0;
      for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        const auto& row = lp.rows[i];
        const double y = out.duals[i];
        const double act = row_activity(row, out.x);
        if (y > 1e-9) {
          CHECK(std::isfinite(row.lower));
          CHECK(act == doctest::Approx(row.lower).epsilon(1e-7));
          dual_obj += y * row.lower;
        } else if (y < -1e-9) {
          CHECK(std::isfinite(row.upper));
          CHECK(act == doctest::Approx(row.upper).epsilon(1e-7));
          dual_obj += y * row.upper;
        }
      }
      for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        // reduced cost consistency: d_j = c_j - y . A_j
        double ya = 0.0;
        for (std::size_t i = 0; i < lp.rows.size(); ++i) {
          for (const auto& e : lp.rows[i].coeffs) {
            if (e.index == j) ya += out.duals[i] * e.value;
          }
        }
        const double d = out.reduced_costs[j];
        CHECK(d == doctest::Approx(lp.objective[j] - ya).epsilon(1e-7));
        if (d > 1e-9) {
          CHECK(out.x[j] == doctest::Approx(lp.lower[j]).epsilon(1e-7));
          dual_obj += d * lp.lower[j];
        } else if (d < -1e-9) {
          CHECK(out.x[j] == doctest::Approx(lp.upper[j]).epsilon(1e-7));
          dual_obj += d * lp.upper[j];
        }
      }
      CHECK(std::abs(dual_obj - out.objective) <= 1e-7 * std::max(1.0, std::abs(out.objective)));
    }
    CHECK(optimal > 150);
    CHECK(infeasible > 0);
  }

  TEST_CASE("pure >= rows: duals are nonnegative") {
    oracle::TestRng rng(99);
    for (int t = 0; t < 50; ++t) {
      auto lp = oracle::random_lp(rng, false);
      for (auto& row : lp.rows) row.upper = kInf;
      const auto out = solve_lp(lp);
      if (out.status != LpStatus::Optimal) continue;
      for (double y : out.duals) CHECK(y >= -1e-9);
    }
  }

  TEST_CASE("degenerate cycling-prone LP terminates") {
    // Beale's classical cycling example in >= form.
    LinearProgram lp;
    lp.add_var(-0.75, 0.0, kInf);
    lp.add_var(150.0, 0.0, kInf);
    lp.add_var(-0.02, 0.0, kInf);
    lp.add_var(6.0, 0.0, kInf);
    lp.add_ge_row({{0, -0.25}, {1, 60.0}, {2, 0.04}, {3, -9.0}}, 0.0);
    lp.add_ge_row({{0, -0.5}, {1, 90.0}, {2, 0.02}, {3, -3.0}}, 0.0);
    lp.add_ge_row({{2, -1.0}}, -1.0);
    const auto out = solve_lp(lp);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.objective == doctest::Approx(-0.05));
  }
}
