// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include <cmath>

#include "doctest.h"
#include "driver.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "random_instances.hpp"

using namespace invmilo;

namespace {

SolveLimits quiet() {
  SolveLimits l;
  l.record_timings = false;
  return l;
}

bool has_origin(const SolveReport& r, const std::string& origin) {
  for (const auto& rec : r.log) {
    if (rec.origin == origin) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("driver-presets") {
  TEST_CASE("CPTR") {
    const auto v = preset("CPTR");
    CHECK(v.params.p0 == 1.0);
    CHECK(v.params.delta == 2.0);
    CHECK(v.params.i_star == 10);
    CHECK(v.params.k_star == 2);
    CHECK(!v.params.tau);
    CHECK(!v.params.dr);
  }
  TEST_CASE("CP and CP-ES") {
    const auto cp = preset("CP");
    CHECK(cp.params.i_star == 1);
    CHECK(cp.params.k_star == 1);
    CHECK(!cp.params.tau);
    CHECK(*preset("CP-ES").params.tau == 5.0);
    CHECK(!preset("CP-ES").params.dr);
  }
  TEST_CASE("CPTR-ES-DR") {
    const auto v = preset("CPTR-ES-DR");
    CHECK(*v.params.tau == 5.0);
    REQUIRE(v.params.dr);
    CHECK(v.params.dr->kappa == 0.03);
    CHECK(v.params.dr->dr_floor_q == 0.8);
    CHECK(v.params.dr->h_star == 10);
    CHECK(*preset("CPTR-ES").params.tau == 5.0);
  }
  TEST_CASE("unknown name") { CHECK_THROWS_AS(preset("CPX"), Error); }
}

TEST_SUITE("driver-single") {
  TEST_CASE("EC: every variant keeps c0") {
    const auto inst = fixtures::ec();
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const auto r = solve_inverse(inst, preset(name));
      REQUIRE(r.status == SolveStatus::Optimal);
      CHECK(r.objective == 0.0);
      CHECK(r.c_star == inst.c0);
      CHECK(r.cuts == 0);
    }
  }

  TEST_CASE("knapsack: every variant reaches 1") {
    const auto inst = fixtures::knapsack();
    CHECK(oracle::inverse_by_enumeration(inst) == doctest::Approx(1.0));
    for (const auto& name : preset_names()) {
      CAPTURE(name);
      const auto r = solve_inverse(inst, preset(name));
      REQUIRE(r.status == SolveStatus::Optimal);
      CHECK(r.objective == doctest::Approx(1.0));
      CHECK(oracle::inverse_feasible_by_enumeration(inst, r.c_star));
      CHECK(r.iterations == r.cuts + 1);
    }
  }

  TEST_CASE("x_hat already the unique optimum: one verified call, no cuts") {
    auto inst = fixtures::knapsack();
    inst.c0 = {1.0, 1.5};
    inst.x_hat = {2.0, 0.0};
    const auto r = solve_inverse(inst, preset("CP"));
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.objective == 0.0);
    CHECK(r.cuts == 0);
    CHECK(r.iterations == 1);
    REQUIRE(r.log.size() == 1);
    CHECK(r.log[0].origin == "verified");
  }

  TEST_CASE("time limit 0") {
    for (const auto& name : preset_names()) {
      SolveLimits lim;
      lim.time_limit = 0.0;
      const auto r = solve_inverse(fixtures::knapsack(), preset(name), lim);
      CHECK(r.status == SolveStatus::TimeLimit);
      CHECK(r.iterations == 0);
    }
  }

  TEST_CASE("iteration limit") {
    SolveLimits lim;
    lim.max_iters = 1;
    const auto r = solve_inverse(fixtures::fig2a(), preset("CP"), lim);
    CHECK(r.status == SolveStatus::IterationLimit);
    CHECK(r.iterations == 1);
  }

  TEST_CASE("infeasible x_hat is rejected") {
    auto inst = fixtures::ec();
    inst.x_hat = {1.0, 1.0};
    CHECK_THROWS_AS(solve_inverse(inst, preset("CP")), Error);
  }

  TEST_CASE("restrictive cost set surfaces as ProvedInfeasible") {
    auto v = preset("CPTR");
    // c1 <= -1 cannot make (1,1) optimal on the knapsack region
    v.master.extra_c_constraints = {{{{0, 1.0}}, Relation::LessEqual, -1.0}};
    const auto r = solve_inverse(fixtures::knapsack(), v);
    CHECK(r.status == SolveStatus::ProvedInfeasible);
  }

  TEST_CASE("fig2a: trust regions need no more cuts than CP") {
    const auto inst = fixtures::fig2a();
    const auto cp = solve_inverse(inst, preset("CP"));
    const auto tr = solve_inverse(inst, preset("CPTR"));
    CHECK(cp.objective == doctest::Approx(tr.objective));
    CHECK(tr.cuts <= 3);
    CHECK(cp.cuts >= tr.cuts);
  }

  TEST_CASE("CP special case: CPTR with i* = k* = 1 reproduces CP exactly") {
    for (const auto& inst : fixtures::bounded_all()) {
      auto v = preset("CPTR");
      v.params.i_star = v.params.k_star = 1;
      const auto a = solve_inverse(inst, v, quiet());
      const auto b = solve_inverse(inst, preset("CP"), quiet());
      CHECK(log_csv(a) == log_csv(b));
      CHECK(a.iterations == b.iterations);
      CHECK(a.objective == b.objective);
    }
  }

  TEST_CASE("master objective is nondecreasing along the log") {
    for (const auto& inst : fixtures::bounded_all()) {
      for (const auto& name : preset_names()) {
        const auto r = solve_inverse(inst, preset(name));
        for (std::size_t k = 1; k < r.log.size(); ++k) {
          CHECK(r.log[k].master_objective >= r.log[k - 1].master_objective - 1e-9);
        }
      }
    }
  }

  TEST_CASE("log CSV layout") {
    const auto r = solve_inverse(fixtures::knapsack(), preset("CPTR"), quiet());
    const auto csv = log_csv(r);
    CHECK(csv.rfind(
              "iteration,origin,tr_size,violation,master_objective,cutgen_s,master_s,point\n",
              0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
    CHECK(csv.find("2;0") != std::string::npos);
    CHECK(csv == log_csv(solve_inverse(fixtures::knapsack(), preset("CPTR"), quiet())));
  }

  TEST_CASE("dimension-reduced variant is seed-reproducible") {
    oracle::TestRng rng(44);
    int done = 0;
    for (int id = 0; done < 8; ++id) {
      const auto inst = oracle::random_pure_instance(rng, id);
      if (!inst) continue;
      ++done;
      auto v = preset("CPTR-ES-DR");
      v.params.seed = 99;
      const auto a = solve_inverse(*inst, v, quiet());
      const auto b = solve_inverse(*inst, v, quiet());
      CHECK(log_csv(a) == log_csv(b));
    }
  }

  TEST_CASE("duality constraints give the same optimum on bounded fixtures") {
    for (const auto& inst : fixtures::bounded_all()) {
      auto v = preset("CPTR");
      const auto plain = solve_inverse(inst, v);
      v.master.use_duality_constraints = true;
      const auto dual = solve_inverse(inst, v);
      CHECK(std::abs(plain.objective - dual.objective) <= 1e-6);
    }
  }

  TEST_CASE("unbounded region: escape on the default path, none with duality") {
    struct Case {
      InverseInstance inst;
      double optimum;
    };
    for (const auto& [inst, optimum] : {Case{fixtures::unbounded(), 1.0}, Case{fixtures::wedge(), 0.5}}) {
      CAPTURE(inst.label);
      auto v = preset("CP");
      const auto plain = solve_inverse(inst, v);
      REQUIRE(plain.status == SolveStatus::Optimal);
      CHECK(plain.objective == doctest::Approx(optimum));
      if (inst.label == "wedge") CHECK(has_origin(plain, "unbounded_escape"));
      v.master.use_duality_constraints = true;
      const auto dual = solve_inverse(inst, v);
      REQUIRE(dual.status == SolveStatus::Optimal);
      CHECK(dual.objective == doctest::Approx(optimum));
      CHECK(!has_origin(dual, "unbounded_escape"));
    }
  }

  TEST_CASE("random pure and mixed instances: all variants match the oracle") {
    oracle::TestRng rng(2026);
    int pure = 0, mixed = 0;
    for (int id = 0; pure < 15 || mixed < 8; ++id) {
      const bool want_pure = pure < 15;
      const auto inst = want_pure ? oracle::random_pure_instance(rng, id)
                                  : oracle::random_mixed_instance(rng, id);
      if (!inst) continue;
      (want_pure ? pure : mixed)++;
      const double ref = oracle::inverse_by_enumeration(*inst);
      for (const auto& name : preset_names()) {
        CAPTURE(inst->label);
        CAPTURE(name);
        const auto r = solve_inverse(*inst, preset(name));
        REQUIRE(r.status == SolveStatus::Optimal);
        CHECK(std::abs(r.objective - ref) <= 1e-6);
        CHECK(oracle::inverse_feasible_by_enumeration(*inst, r.c_star));
      }
    }
  }
}

TEST_SUITE("driver-multi") {
  TEST_CASE("two copies of EC") {
    const std::vector<InverseInstance> d{fixtures::ec(), fixtures::ec()};
    const auto r = solve_inverse_multi(d, {}, preset("CPTR"));
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.objective == 0.0);
    CHECK(r.c_star == fixtures::ec().c0);
  }

  TEST_CASE("D = 1 matches the single-point solve") {
    for (const auto& inst : fixtures::bounded_all()) {
      for (const auto& name : {"CP", "CPTR"}) {
        const std::vector<InverseInstance> d{inst};
        const auto m = solve_inverse_multi(d, {}, preset(name));
        const auto s = solve_inverse(inst, preset(name));
        CHECK(m.objective == s.objective);
        CHECK(m.cuts == s.cuts);
      }
    }
  }

  TEST_CASE("knapsack at (1,1) and (2,0) with a shared cost") {
    const auto a = fixtures::knapsack();
    auto b = fixtures::knapsack();
    b.x_hat = {2.0, 0.0};
    const std::vector<InverseInstance> d{a, b};
    // brute force: both full point sets as pools
    CutPool all;
    for (const auto& x : oracle::grid_points(a.problem)) all.push_back({x, 0.0, {}});
    const std::vector<PointData> data{{a.x_hat, &a.problem, &all}, {b.x_hat, &b.problem, &all}};
    const double ref = solve_master_multi(a.c0, data, std::nullopt).objective;
    for (std::size_t v_star : {1u, 2u}) {
      MultiOptions opt;
      opt.v_star = v_star;
      const auto r = solve_inverse_multi(d, opt, preset("CPTR"));
      REQUIRE(r.status == SolveStatus::Optimal);
      CHECK(r.objective == doctest::Approx(ref));
    }
  }

  TEST_CASE("regularized model: lambda = 0 and lambda >= 1") {
    const auto a = fixtures::knapsack();
    auto b = fixtures::knapsack();
    b.x_hat = {2.0, 0.0};
    const std::vector<InverseInstance> d{a, b};
    MultiOptions opt;
    opt.lambda = 0.0;
    auto r = solve_inverse_multi(d, opt, preset("CPTR"));
    CHECK(r.objective == doctest::Approx(0.0));
    CHECK(r.c_star == a.c0);
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(oracle::inverse_feasible_by_enumeration(d[k], r.c_bar[k]));
    }
    const std::vector<InverseInstance> one{a};
    opt.lambda = 2.0;
    r = solve_inverse_multi(one, opt, preset("CP"));
    CHECK(r.objective == doctest::Approx(1.0));
  }

  TEST_CASE("v_star range") {
    const std::vector<InverseInstance> d{fixtures::ec()};
    MultiOptions opt;
    opt.v_star = 2;
    CHECK_THROWS_AS(solve_inverse_multi(d, opt, preset("CP")), Error);
  }
}
