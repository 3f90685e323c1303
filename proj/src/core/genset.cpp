// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "genset.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "lp.hpp"

namespace invmilo {

namespace {

constexpr double kConeTol = 1e-8;

LpOptions cone_options() {
  LpOptions o;
  o.infeasibility_tol = kConeTol;
  return o;
}

std::vector<double> unit_ray(std::span<const double> from, std::span<const double> to) {
  std::vector<double> r(from.size());
  double norm = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    r[j] = to[j] - from[j];
    norm += std::abs(r[j]);
  }
  if (norm == 0.0) return {};
  for (auto& v : r) v /= norm;
  return r;
}

std::vector<std::vector<double>> unit_rays(std::span<const Point> points,
                                           std::span<const double> apex) {
  std::vector<std::vector<double>> rays;
  for (const auto& p : points) {
    auto r = unit_ray(apex, p);
    if (!r.empty()) rays.push_back(std::move(r));
  }
  return rays;
}

// target = sum mu_i rays_i with mu >= 0, and sum mu_i <= mu_cap when finite.
bool in_cone(const std::vector<std::vector<double>>& rays, std::span<const double> target,
             double mu_cap = kInf) {
  const std::size_t n = target.size();
  LinearProgram lp;
  for (std::size_t i = 0; i < rays.size(); ++i) lp.add_var(0.0, 0.0, kInf);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<SparseEntry> coeffs;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (rays[i][j] != 0.0) coeffs.push_back({i, rays[i][j]});
    }
    if (coeffs.empty()) {
      if (std::abs(target[j]) > kConeTol) return false;
      continue;
    }
    lp.add_eq_row(std::move(coeffs), target[j]);
  }
  if (mu_cap != kInf && !rays.empty()) {
    std::vector<SparseEntry> sum;
    for (std::size_t i = 0; i < rays.size(); ++i) sum.push_back({i, -1.0});
    lp.add_ge_row(std::move(sum), -mu_cap);
  }
  if (rays.empty()) {
    return std::all_of(target.begin(), target.end(),
                       [](double v) { return std::abs(v) <= kConeTol; });
  }
  return solve_lp(lp, cone_options()).status == LpStatus::Optimal;
}

// Direction c in [-1,1]^n with c . rays_i >= 0 for all i minimizing c . target.
// A negative optimum separates target from the cone.
std::vector<double> separating_direction(const std::vector<std::vector<double>>& rays,
                                         std::span<const double> target) {
  const std::size_t n = target.size();
  LinearProgram lp;
  for (std::size_t j = 0; j < n; ++j) lp.add_var(target[j], -1.0, 1.0);
  for (const auto& r : rays) {
    std::vector<SparseEntry> coeffs;
    for (std::size_t j = 0; j < n; ++j) {
      if (r[j] != 0.0) coeffs.push_back({j, r[j]});
    }
    lp.add_ge_row(std::move(coeffs), 0.0);
  }
  const auto out = solve_lp(lp, cone_options());
  if (out.status != LpStatus::Optimal) {
    throw Error(ErrorCode::NumericalFailure, "genset: separation LP did not solve");
  }
  return out.x;
}

// First point of `points` whose ray from the apex leaves cone(rays).
const Point* first_uncovered(std::span<const Point> points, std::span<const double> apex,
                             const std::vector<std::vector<double>>& rays) {
  for (const auto& p : points) {
    const auto r = unit_ray(apex, p);
    if (r.empty()) continue;
    if (!in_cone(rays, r)) return &p;
  }
  return nullptr;
}

void check_dims(std::span<const Point> pts, std::size_t n) {
  for (const auto& p : pts) {
    if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "genset: point has wrong length");
  }
}

bool same_point(std::span<const double> a, std::span<const double> b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (std::abs(a[j] - b[j]) > 1e-9) return false;
  }
  return true;
}

// Sampled ball test: points at 1-norm distance eps from x_hat towards each
// region point must lie in conv(G + {x_hat}). eps starts at half the distance
// to the nearest other region point and is halved while some sample fails,
// since the property only asks for some eps > 0.
std::pair<bool, double> ball_test(std::span<const Point> generators,
                                  std::span<const double> x_hat,
                                  const EnumeratedRegion& region) {
  double nearest = kInf;
  for (const auto& p : region.points) {
    double d = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) d += std::abs(p[j] - x_hat[j]);
    if (d > 0.0) nearest = std::min(nearest, d);
  }
  if (nearest == kInf) return {true, 0.0};
  std::vector<std::vector<double>> spokes;
  for (const auto& g : generators) {
    std::vector<double> s(x_hat.size());
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = g[j] - x_hat[j];
    spokes.push_back(std::move(s));
  }
  const auto directions = unit_rays(region.points, x_hat);
  double eps = nearest / 2.0;
  for (int round = 0; round < 30; ++round, eps /= 2.0) {
    bool all_in = true;
    for (const auto& d : directions) {
      // eps d in conv(G + x_hat)  <=>  d = sum mu_i spokes_i, sum mu <= 1/eps
      if (!in_cone(spokes, d, 1.0 / eps)) {
        all_in = false;
        break;
      }
    }
    if (all_in) return {true, eps};
  }
  return {false, eps};
}

}  // namespace

EnumeratedRegion enumerate_feasible(const ForwardProblem& problem, double limit) {
  problem.check_well_formed();
  if (!problem.all_integer()) {
    throw Error(ErrorCode::InvalidArgument, "enumerate_feasible: continuous variables present");
  }
  const std::size_t n = problem.n;
  std::vector<double> lo(n), hi(n);
  double volume = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(problem.lower[j]) || !std::isfinite(problem.upper[j])) {
      throw Error(ErrorCode::UnboundedBox,
                  "enumerate_feasible: variable " + problem.var_name(j) + " has an infinite bound");
    }
    lo[j] = std::ceil(problem.lower[j] - 1e-9);
    hi[j] = std::floor(problem.upper[j] + 1e-9);
    volume *= std::max(0.0, hi[j] - lo[j] + 1.0);
  }
  if (volume > limit) {
    throw Error(ErrorCode::TooLarge, "enumerate_feasible: bound box holds too many points");
  }
  EnumeratedRegion region{problem, {}};
  if (volume == 0.0) return region;
  std::vector<double> x = lo;
  while (true) {
    if (is_forward_feasible(problem, x)) region.points.push_back(x);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (x[j] < hi[j]) {
        x[j] += 1.0;
        break;
      }
      x[j] = lo[j];
      if (j == 0) return region;
    }
    if (n == 0) return region;
  }
}

std::vector<Point> extreme_points(std::span<const Point> points) {
  std::vector<Point> uniq(points.begin(), points.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.empty()) return {};
  check_dims(uniq, uniq[0].size());
  std::vector<Point> ext;
  for (std::size_t k = 0; k < uniq.size(); ++k) {
    // p = sum lambda_i q_i, sum lambda_i = 1, lambda >= 0 over the others
    const auto& p = uniq[k];
    LinearProgram lp;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
      if (i != k) others.push_back(i);
    }
    if (others.empty()) {
      ext.push_back(p);
      continue;
    }
    for (std::size_t i = 0; i < others.size(); ++i) lp.add_var(0.0, 0.0, kInf);
    for (std::size_t j = 0; j < p.size(); ++j) {
      std::vector<SparseEntry> coeffs;
      for (std::size_t i = 0; i < others.size(); ++i) {
        const double v = uniq[others[i]][j];
        if (v != 0.0) coeffs.push_back({i, v});
      }
      lp.add_eq_row(std::move(coeffs), p[j]);
    }
    std::vector<SparseEntry> sum;
    for (std::size_t i = 0; i < others.size(); ++i) sum.push_back({i, 1.0});
    lp.add_eq_row(std::move(sum), 1.0);
    if (solve_lp(lp, cone_options()).status != LpStatus::Optimal) ext.push_back(p);
  }
  return ext;
}

bool is_inverse_feasible(std::span<const double> c, std::span<const double> x_hat,
                         std::span<const Point> points) {
  if (c.size() != x_hat.size()) {
    throw Error(ErrorCode::DimensionMismatch, "is_inverse_feasible: length mismatch");
  }
  check_dims(points, c.size());
  double cx = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) cx += c[j] * x_hat[j];
  const double slack = 1e-9 * std::max(1.0, std::abs(cx));
  for (const auto& p : points) {
    double v = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) v += c[j] * p[j];
    if (cx > v + slack) return false;
  }
  return true;
}

GeneratorVerdict is_generator_set(std::span<const Point> generators,
                                  std::span<const double> x_hat,
                                  const EnumeratedRegion& region) {
  check_dims(generators, x_hat.size());
  check_dims(region.points, x_hat.size());
  const auto g_rays = unit_rays(generators, x_hat);
  const auto x_rays = unit_rays(region.points, x_hat);
  GeneratorVerdict v;
  if (const Point* p = first_uncovered(region.points, x_hat, g_rays)) {
    v.uncovered = *p;
    v.witness = separating_direction(g_rays, unit_ray(x_hat, *p));
    return v;
  }
  if (const Point* p = first_uncovered(generators, x_hat, x_rays)) {
    v.uncovered = *p;
    v.witness = separating_direction(x_rays, unit_ray(x_hat, *p));
    return v;
  }
  v.is_generator = true;
  return v;
}

GeneratorVerdict is_forward_feasible_generator_set(std::span<const Point> generators,
                                                   std::span<const double> x_hat,
                                                   const EnumeratedRegion& region) {
  check_dims(generators, x_hat.size());
  for (const auto& g : generators) {
    const bool member = std::any_of(region.points.begin(), region.points.end(),
                                    [&](const Point& p) { return same_point(p, g); });
    if (!member) {
      throw Error(ErrorCode::GNotSubsetOfX, "generator point is not in the region");
    }
  }
  const auto g_rays = unit_rays(generators, x_hat);
  GeneratorVerdict v;
  if (const Point* p = first_uncovered(region.points, x_hat, g_rays)) {
    v.uncovered = *p;
    v.witness = separating_direction(g_rays, unit_ray(x_hat, *p));
  } else {
    v.is_generator = true;
  }
  const auto [inside, eps] = ball_test(generators, x_hat, region);
  v.sampled_check_agrees = inside == v.is_generator;
  v.sample_radius = eps;
  return v;
}

bool witness_refutes(const GeneratorVerdict& verdict, std::span<const Point> generators,
                     std::span<const double> x_hat, const EnumeratedRegion& region) {
  if (verdict.is_generator || verdict.witness.size() != x_hat.size()) return false;
  return is_inverse_feasible(verdict.witness, x_hat, generators) !=
         is_inverse_feasible(verdict.witness, x_hat, region.points);
}

}  // namespace invmilo
