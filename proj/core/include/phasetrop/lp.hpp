#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "phasetrop/rational.hpp"

namespace phasetrop {

/// Comparison policy for simplex scalars: exact for Rat, tolerant for double.
template <class T>
struct LpTraits;

template <>
struct LpTraits<Rat> {
  static bool is_zero(const Rat& x) { return x.is_zero(); }
  static bool positive(const Rat& x) { return x.sign() > 0; }
  static bool negative(const Rat& x) { return x.sign() < 0; }
};

template <>
struct LpTraits<double> {
  static constexpr double kTol = 1e-11;
  static bool is_zero(double x) { return std::abs(x) <= kTol; }
  static bool positive(double x) { return x > kTol; }
  static bool negative(double x) { return x < -kTol; }
};

enum class Relation { LessEq, GreaterEq, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class T>
struct LpConstraint {
  std::vector<T> coeffs;
  Relation rel = Relation::LessEq;
  T rhs{};
};

/// maximize objective·x subject to the constraints. Variables are free unless
/// flagged nonnegative.
template <class T>
struct LinearProgram {
  explicit LinearProgram(std::size_t vars) : num_vars(vars), nonnegative(vars, false), objective(vars, T{}) {}

  void add(std::vector<T> coeffs, Relation rel, T rhs) {
    if (coeffs.size() != num_vars) throw Error("constraint length mismatch");
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }

  std::size_t num_vars;
  std::vector<bool> nonnegative;
  std::vector<T> objective;
  std::vector<LpConstraint<T>> constraints;
};

template <class T>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  T value{};
  std::vector<T> x;
};

namespace detail {

/// Dense two-phase tableau simplex with Bland's rule.
template <class T>
class Tableau {
  using Tr = LpTraits<T>;

 public:
  explicit Tableau(const LinearProgram<T>& lp) : lp_(lp) {
    // Column layout: split original variables, then slack/surplus, then artificials.
    for (std::size_t v = 0; v < lp.num_vars; ++v) {
      plus_col_.push_back(ncols_++);
      minus_col_.push_back(lp.nonnegative[v] ? npos : ncols_++);
    }
    const std::size_t m = lp.constraints.size();
    std::vector<std::size_t> slack(m, npos);
    std::vector<std::size_t> artificial(m, npos);
    std::vector<bool> needs_artificial(m, false);
    std::vector<bool> flip(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& con = lp.constraints[i];
      flip[i] = Tr::negative(con.rhs);
      Relation rel = con.rel;
      if (flip[i] && rel != Relation::Equal) rel = rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
      if (rel != Relation::Equal) slack[i] = ncols_++;
      needs_artificial[i] = rel != Relation::LessEq;
    }
    first_artificial_ = ncols_;
    for (std::size_t i = 0; i < m; ++i) {
      if (needs_artificial[i]) artificial[i] = ncols_++;
    }
    a_.assign(m, std::vector<T>(ncols_, T{}));
    b_.assign(m, T{});
    basis_.assign(m, npos);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& con = lp.constraints[i];
      const T sign = flip[i] ? T(-1) : T(1);
      for (std::size_t v = 0; v < lp.num_vars; ++v) {
        if (Tr::is_zero(con.coeffs[v])) continue;
        a_[i][plus_col_[v]] = sign * con.coeffs[v];
        if (minus_col_[v] != npos) a_[i][minus_col_[v]] = -(sign * con.coeffs[v]);
      }
      b_[i] = sign * con.rhs;
      Relation rel = con.rel;
      if (flip[i] && rel != Relation::Equal) rel = rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
      if (rel == Relation::LessEq) {
        a_[i][slack[i]] = T(1);
        basis_[i] = slack[i];
      } else {
        if (rel == Relation::GreaterEq) a_[i][slack[i]] = T(-1);
        a_[i][artificial[i]] = T(1);
        basis_[i] = artificial[i];
      }
    }
  }

  LpResult<T> solve() {
    LpResult<T> res;
    if (first_artificial_ < ncols_) {
      std::vector<T> phase1(ncols_, T{});
      for (std::size_t j = first_artificial_; j < ncols_; ++j) phase1[j] = T(-1);
      optimize(phase1, ncols_);
      T infeas{};
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i] >= first_artificial_) infeas += b_[i];
      }
      if (Tr::positive(infeas)) return res;
      evict_artificials();
    }
    std::vector<T> cost(ncols_, T{});
    for (std::size_t v = 0; v < lp_.num_vars; ++v) {
      cost[plus_col_[v]] = lp_.objective[v];
      if (minus_col_[v] != npos) cost[minus_col_[v]] = -lp_.objective[v];
    }
    if (!optimize(cost, first_artificial_)) {
      res.status = LpStatus::Unbounded;
      return res;
    }
    std::vector<T> col_value(ncols_, T{});
    for (std::size_t i = 0; i < basis_.size(); ++i) col_value[basis_[i]] = b_[i];
    res.status = LpStatus::Optimal;
    res.x.assign(lp_.num_vars, T{});
    for (std::size_t v = 0; v < lp_.num_vars; ++v) {
      res.x[v] = col_value[plus_col_[v]];
      if (minus_col_[v] != npos) res.x[v] -= col_value[minus_col_[v]];
      res.value += lp_.objective[v] * res.x[v];
    }
    return res;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Maximizes cost over columns [0, limit). Returns false if unbounded.
  bool optimize(const std::vector<T>& cost, std::size_t limit) {
    const std::size_t m = a_.size();
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < limit && enter == npos; ++j) {
        if (is_basic(j)) continue;
        T reduced = cost[j];
        for (std::size_t i = 0; i < m; ++i) {
          if (!Tr::is_zero(a_[i][j])) reduced -= cost[basis_[i]] * a_[i][j];
        }
        if (Tr::positive(reduced)) enter = j;
      }
      if (enter == npos) return true;
      std::size_t leave = npos;
      T best_ratio{};
      for (std::size_t i = 0; i < m; ++i) {
        if (!Tr::positive(a_[i][enter])) continue;
        const T ratio = b_[i] / a_[i][enter];
        if (leave == npos || ratio < best_ratio ||
            (!(best_ratio < ratio) && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter);
    }
  }

  void evict_artificials() {
    for (std::size_t i = 0; i < basis_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = npos;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!Tr::is_zero(a_[i][j]) && !is_basic(j)) {
          col = j;
          break;
        }
      }
      if (col == npos) {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto c : basis_) {
      if (c == j) return true;
    }
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    const T p = a_[r][c];
    for (auto& x : a_[r]) x = Tr::is_zero(x) ? T{} : x / p;
    b_[r] = b_[r] / p;
    a_[r][c] = T(1);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r) continue;
      const T f = a_[i][c];
      if (Tr::is_zero(f)) {
        a_[i][c] = T{};
        continue;
      }
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!Tr::is_zero(a_[r][j])) a_[i][j] -= f * a_[r][j];
      }
      a_[i][c] = T{};
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  const LinearProgram<T>& lp_;
  std::size_t ncols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::size_t> plus_col_;
  std::vector<std::size_t> minus_col_;
  std::vector<std::vector<T>> a_;
  std::vector<T> b_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

template <class T>
LpResult<T> solve(const LinearProgram<T>& lp) {
  return detail::Tableau<T>(lp).solve();
}

/// Feasibility only: the objective is ignored.
template <class T>
bool feasible(const LinearProgram<T>& lp) {
  LinearProgram<T> copy = lp;
  std::fill(copy.objective.begin(), copy.objective.end(), T{});
  return solve(copy).status == LpStatus::Optimal;
}

}  // namespace phasetrop
