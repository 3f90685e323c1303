// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#include "lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace invmilo {

std::size_t LinearProgram::add_var(double cost, double lo, double hi) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  return objective.size() - 1;
}

void LinearProgram::add_ge_row(std::vector<SparseEntry> coeffs, double rhs) {
  rows.push_back({std::move(coeffs), rhs, kInf});
}

void LinearProgram::add_eq_row(std::vector<SparseEntry> coeffs, double rhs) {
  rows.push_back({std::move(coeffs), rhs, rhs});
}

LinearProgram lp_from_ge_rows(std::vector<double> objective,
                              std::span<const GeRow> rows,
                              std::vector<double> lower,
                              std::vector<double> upper) {
  LinearProgram lp;
  lp.objective = std::move(objective);
  lp.lower = std::move(lower);
  lp.upper = std::move(upper);
  lp.rows.reserve(rows.size());
  for (const auto& r : rows) lp.add_ge_row(r.coeffs, r.rhs);
  return lp;
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "Unknown";
}

namespace {

enum class VarState : unsigned char { Basic, AtLower, AtUpper, Free, Fixed };

// Column layout: [0, n) structural, [n, n + m) row slacks s_i = a_i . x with
// column -e_i, [n + m, n + 2m) phase-one artificials with column sigma_i e_i.
// Every column combination satisfies  A x - s + Sigma t = 0.
class Simplex {
 public:
  Simplex(const LinearProgram& lp, const LpOptions& opt)
      : opt_(opt), n_(lp.num_vars()), m_(lp.rows.size()), total_(n_ + 2 * m_) {
    if (lp.lower.size() != n_ || lp.upper.size() != n_) {
      throw Error(ErrorCode::InvalidArgument,
                  "linear program: bounds must match objective length");
    }
    dense_.assign(m_ * n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (const auto& e : lp.rows[i].coeffs) {
        if (e.index >= n_) {
          throw Error(ErrorCode::InvalidArgument,
                      "linear program: row index out of range");
        }
        dense_[e.index * m_ + i] += e.value;
      }
    }
    lo_.assign(total_, 0.0);
    up_.assign(total_, 0.0);
    x_.assign(total_, 0.0);
    state_.assign(total_, VarState::Fixed);
    sigma_.assign(m_, 1.0);
    objective_ = lp.objective;
    for (std::size_t j = 0; j < n_; ++j) {
      lo_[j] = lp.lower[j];
      up_[j] = lp.upper[j];
      if (lo_[j] > up_[j]) infeasible_bounds_ = true;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      lo_[n_ + i] = lp.rows[i].lower;
      up_[n_ + i] = lp.rows[i].upper;
      if (lo_[n_ + i] > up_[n_ + i]) infeasible_bounds_ = true;
    }
    cap_ = opt_.iteration_cap ? opt_.iteration_cap
                              : std::max<std::size_t>(20000, 200 * (m_ + n_));
  }

  LpOutcome run() {
    LpOutcome out;
    if (infeasible_bounds_) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    const bool need_phase_one = initialize();
    refactor();
    if (need_phase_one) {
      cost_.assign(total_, 0.0);
      for (std::size_t i = 0; i < m_; ++i) cost_[n_ + m_ + i] = 1.0;
      const Phase p1 = iterate(false);
      (void)p1;  // phase one is bounded below by zero
      double residual = 0.0;
      for (std::size_t i = 0; i < m_; ++i) residual += x_[n_ + m_ + i];
      if (residual > opt_.infeasibility_tol) {
        out.status = LpStatus::Infeasible;
        out.iterations = iterations_;
        return out;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        const std::size_t a = n_ + m_ + i;
        lo_[a] = up_[a] = 0.0;
        if (state_[a] != VarState::Basic) {
          state_[a] = VarState::Fixed;
          x_[a] = 0.0;
        }
      }
    }
    cost_.assign(total_, 0.0);
    std::copy(objective_.begin(), objective_.end(), cost_.begin());
    const Phase p2 = iterate(true);
    out.iterations = iterations_;
    out.x.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
    if (p2 == Phase::Unbounded) {
      out.status = LpStatus::Unbounded;
      out.ray = std::move(ray_);
      out.objective = -kInf;
      return out;
    }
    out.status = LpStatus::Optimal;
    compute_duals();
    out.duals = pi_;
    out.reduced_costs.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) out.reduced_costs[j] = reduced_cost(j);
    double obj = 0.0;
    for (std::size_t j = 0; j < n_; ++j) obj += objective_[j] * out.x[j];
    out.objective = obj;
    return out;
  }

 private:
  enum class Phase { Optimal, Unbounded };

  bool is_structural(std::size_t j) const { return j < n_; }
  bool is_slack(std::size_t j) const { return j >= n_ && j < n_ + m_; }

  // Places nonbasic variables at a bound and chooses the starting basis; returns
  // true when some artificial is basic at a positive value.
  bool initialize() {
    for (std::size_t j = 0; j < n_; ++j) place_nonbasic(j);
    head_.assign(m_, 0);
    bool need = false;
    for (std::size_t i = 0; i < m_; ++i) {
      double act = 0.0;
      for (std::size_t j = 0; j < n_; ++j) act += dense_[j * m_ + i] * x_[j];
      const std::size_t s = n_ + i;
      const std::size_t a = n_ + m_ + i;
      if (act >= lo_[s] - opt_.primal_tol && act <= up_[s] + opt_.primal_tol) {
        head_[i] = s;
        state_[s] = VarState::Basic;
        x_[s] = act;
        lo_[a] = up_[a] = 0.0;
        state_[a] = VarState::Fixed;
        x_[a] = 0.0;
      } else {
        const double target = act < lo_[s] ? lo_[s] : up_[s];
        x_[s] = target;
        state_[s] = (lo_[s] == up_[s]) ? VarState::Fixed
                    : act < lo_[s]     ? VarState::AtLower
                                       : VarState::AtUpper;
        sigma_[i] = target - act > 0 ? 1.0 : -1.0;
        lo_[a] = 0.0;
        up_[a] = kInf;
        head_[i] = a;
        state_[a] = VarState::Basic;
        x_[a] = std::abs(target - act);
        need = true;
      }
    }
    return need;
  }

  void place_nonbasic(std::size_t j) {
    if (lo_[j] == up_[j]) {
      state_[j] = VarState::Fixed;
      x_[j] = lo_[j];
    } else if (std::isfinite(lo_[j])) {
      state_[j] = VarState::AtLower;
      x_[j] = lo_[j];
    } else if (std::isfinite(up_[j])) {
      state_[j] = VarState::AtUpper;
      x_[j] = up_[j];
    } else {
      state_[j] = VarState::Free;
      x_[j] = 0.0;
    }
  }

  // out = B-side column of variable j (length m).
  void column(std::size_t j, std::vector<double>& out) const {
    out.assign(m_, 0.0);
    if (is_structural(j)) {
      std::copy_n(dense_.begin() + static_cast<std::ptrdiff_t>(j * m_), m_, out.begin());
    } else if (is_slack(j)) {
      out[j - n_] = -1.0;
    } else {
      const std::size_t i = j - n_ - m_;
      out[i] = sigma_[i];
    }
  }

  double dot_column(const std::vector<double>& v, std::size_t j) const {
    if (is_structural(j)) {
      const double* col = dense_.data() + j * m_;
      double s = 0.0;
      for (std::size_t i = 0; i < m_; ++i) s += v[i] * col[i];
      return s;
    }
    if (is_slack(j)) return -v[j - n_];
    const std::size_t i = j - n_ - m_;
    return sigma_[i] * v[i];
  }

  double reduced_cost(std::size_t j) const { return cost_[j] - dot_column(pi_, j); }

  void refactor() {
    pivots_since_refactor_ = 0;
    binv_.assign(m_ * m_, 0.0);
    if (m_ == 0) return;
    // Gauss-Jordan on [B | I] with partial pivoting.
    std::vector<double> b(m_ * m_, 0.0);
    std::vector<double> col;
    for (std::size_t k = 0; k < m_; ++k) {
      column(head_[k], col);
      for (std::size_t i = 0; i < m_; ++i) b[i * m_ + k] = col[i];
    }
    for (std::size_t i = 0; i < m_; ++i) binv_[i * m_ + i] = 1.0;
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t piv = c;
      double best = std::abs(b[c * m_ + c]);
      for (std::size_t r = c + 1; r < m_; ++r) {
        if (std::abs(b[r * m_ + c]) > best) {
          best = std::abs(b[r * m_ + c]);
          piv = r;
        }
      }
      if (best < 1e-12) {
        throw Error(ErrorCode::NumericalFailure,
                    "simplex: singular basis during refactorization");
      }
      if (piv != c) {
        for (std::size_t k = 0; k < m_; ++k) {
          std::swap(b[piv * m_ + k], b[c * m_ + k]);
          std::swap(binv_[piv * m_ + k], binv_[c * m_ + k]);
        }
      }
      const double inv = 1.0 / b[c * m_ + c];
      for (std::size_t k = 0; k < m_; ++k) {
        b[c * m_ + k] *= inv;
        binv_[c * m_ + k] *= inv;
      }
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == c) continue;
        const double f = b[r * m_ + c];
        if (f == 0.0) continue;
        for (std::size_t k = 0; k < m_; ++k) {
          b[r * m_ + k] -= f * b[c * m_ + k];
          binv_[r * m_ + k] -= f * binv_[c * m_ + k];
        }
      }
    }
    recompute_basics();
  }

  // x_B = B^{-1} (-N x_N).
  void recompute_basics() {
    std::vector<double> rhs(m_, 0.0);
    std::vector<double> col;
    for (std::size_t j = 0; j < total_; ++j) {
      if (state_[j] == VarState::Basic || x_[j] == 0.0) continue;
      column(j, col);
      for (std::size_t i = 0; i < m_; ++i) rhs[i] -= col[i] * x_[j];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < m_; ++k) s += binv_[i * m_ + k] * rhs[k];
      x_[head_[i]] = s;
    }
  }

  void compute_duals() {
    pi_.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = cost_[head_[i]];
      if (cb == 0.0) continue;
      for (std::size_t k = 0; k < m_; ++k) pi_[k] += cb * binv_[i * m_ + k];
    }
  }

  double objective_value() const {
    double s = 0.0;
    for (std::size_t j = 0; j < total_; ++j) {
      if (cost_[j] != 0.0) s += cost_[j] * x_[j];
    }
    return s;
  }

  // Returns the entering column or total_ when the basis is optimal.
  std::size_t price(bool bland, double& d_out) const {
    std::size_t best = total_;
    double best_mag = 0.0;
    for (std::size_t j = 0; j < total_; ++j) {
      const VarState st = state_[j];
      if (st == VarState::Basic || st == VarState::Fixed) continue;
      const double d = reduced_cost(j);
      const bool eligible = (st == VarState::AtLower && d < -opt_.dual_tol) ||
                            (st == VarState::AtUpper && d > opt_.dual_tol) ||
                            (st == VarState::Free && std::abs(d) > opt_.dual_tol);
      if (!eligible) continue;
      if (bland) {
        d_out = d;
        return j;
      }
      if (std::abs(d) > best_mag) {
        best_mag = std::abs(d);
        best = j;
        d_out = d;
      }
    }
    return best;
  }

  Phase iterate(bool phase_two) {
    bool bland = false;
    std::size_t stall = 0;
    double best_obj = objective_value();
    const std::size_t stall_limit = 10 * (m_ + n_);
    std::vector<double> col, alpha(m_);
    bool fresh = false;
    for (;;) {
      if (++iterations_ > cap_) {
        throw Error(ErrorCode::NumericalFailure,
                    "simplex: iteration cap of " + std::to_string(cap_) +
                        " exceeded");
      }
      if (pivots_since_refactor_ >= opt_.refactor_period) refactor();
      compute_duals();
      double d = 0.0;
      const std::size_t q = price(bland, d);
      if (q == total_) {
        if (!fresh && pivots_since_refactor_ > 0) {
          refactor();
          fresh = true;
          continue;
        }
        return Phase::Optimal;
      }
      fresh = false;
      const double dir = d < 0 ? 1.0 : -1.0;

      column(q, col);
      for (std::size_t i = 0; i < m_; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < m_; ++k) s += binv_[i * m_ + k] * col[k];
        alpha[i] = s;
      }

      // Ratio test. delta_i is the rate of change of basic i per unit step.
      std::size_t leave = m_;
      double best_t = kInf;
      for (std::size_t i = 0; i < m_; ++i) {
        if (std::abs(alpha[i]) <= opt_.pivot_tol) continue;
        const std::size_t b = head_[i];
        const double delta = -dir * alpha[i];
        double t = kInf;
        if (delta < 0 && std::isfinite(lo_[b])) {
          t = (x_[b] - lo_[b]) / -delta;
        } else if (delta > 0 && std::isfinite(up_[b])) {
          t = (up_[b] - x_[b]) / delta;
        }
        if (!std::isfinite(t)) continue;
        t = std::max(t, 0.0);
        const double tie = 1e-12 * std::max(1.0, best_t == kInf ? 1.0 : best_t);
        if (leave == m_ || t < best_t - tie) {
          best_t = t;
          leave = i;
        } else if (bland && t <= best_t + tie && head_[i] < head_[leave]) {
          // Bland: among ties, the lowest variable index leaves.
          best_t = std::min(best_t, t);
          leave = i;
        }
      }
      const double range = up_[q] - lo_[q];
      const bool flip = std::isfinite(range) && range <= best_t;
      if (!flip && leave == m_) {
        if (!phase_two) {
          throw Error(ErrorCode::NumericalFailure,
                      "simplex: unbounded direction in phase one");
        }
        ray_.assign(n_, 0.0);
        if (q < n_) ray_[q] = dir;
        for (std::size_t i = 0; i < m_; ++i) {
          if (head_[i] < n_) ray_[head_[i]] = -dir * alpha[i];
        }
        return Phase::Unbounded;
      }
      const double theta = flip ? range : best_t;

      if (theta != 0.0) {
        x_[q] += dir * theta;
        for (std::size_t i = 0; i < m_; ++i) {
          x_[head_[i]] -= dir * alpha[i] * theta;
        }
      }
      if (flip) {
        if (state_[q] == VarState::AtLower) {
          state_[q] = VarState::AtUpper;
          x_[q] = up_[q];
        } else {
          state_[q] = VarState::AtLower;
          x_[q] = lo_[q];
        }
      } else {
        const std::size_t b = head_[leave];
        const double delta = -dir * alpha[leave];
        if (lo_[b] == up_[b]) {
          state_[b] = VarState::Fixed;
          x_[b] = lo_[b];
        } else if (delta < 0) {
          state_[b] = VarState::AtLower;
          x_[b] = lo_[b];
        } else {
          state_[b] = VarState::AtUpper;
          x_[b] = up_[b];
        }
        head_[leave] = q;
        state_[q] = VarState::Basic;
        pivot_inverse(leave, alpha);
        ++pivots_since_refactor_;
      }

      const double obj = objective_value();
      if (obj < best_obj - 1e-12 * (1.0 + std::abs(best_obj))) {
        best_obj = obj;
        stall = 0;
      } else if (++stall >= stall_limit) {
        bland = true;
      }
    }
  }

  void pivot_inverse(std::size_t r, const std::vector<double>& alpha) {
    const double inv = 1.0 / alpha[r];
    double* row_r = binv_.data() + r * m_;
    for (std::size_t k = 0; k < m_; ++k) row_r[k] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || alpha[i] == 0.0) continue;
      const double f = alpha[i];
      double* row_i = binv_.data() + i * m_;
      for (std::size_t k = 0; k < m_; ++k) row_i[k] -= f * row_r[k];
    }
  }

  LpOptions opt_;
  std::size_t n_, m_, total_;
  std::vector<double> dense_;  // structural columns, column-major m x n
  std::vector<double> objective_;
  std::vector<double> lo_, up_, x_, cost_, sigma_;
  std::vector<VarState> state_;
  std::vector<std::size_t> head_;
  std::vector<double> binv_;  // row-major m x m
  std::vector<double> pi_;
  std::vector<double> ray_;
  std::size_t iterations_ = 0;
  std::size_t pivots_since_refactor_ = 0;
  std::size_t cap_ = 0;
  bool infeasible_bounds_ = false;
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp, const LpOptions& options) {
  Simplex simplex(lp, options);
  return simplex.run();
}

}  // namespace invmilo
