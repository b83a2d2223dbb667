#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "phasetrop/lattice.hpp"
#include "phasetrop/series.hpp"

namespace phasetrop {

/// Laurent polynomial with coefficients in the valued field.
class KPoly {
 public:
  KPoly() = default;
  explicit KPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  /// Adds c·x^m, merging with an existing term; zero results are removed.
  void add_term(const IntVec& m, const Series& c);

  [[nodiscard]] const std::vector<std::string>& vars() const { return vars_; }
  [[nodiscard]] std::size_t nvars() const { return vars_.size(); }
  [[nodiscard]] const std::map<IntVec, Series>& terms() const { return terms_; }
  [[nodiscard]] std::vector<IntVec> support() const;

  /// f(x) for series arguments; negative exponents and truncation follow Series rules.
  [[nodiscard]] Series evaluate(const std::vector<Series>& x, std::optional<Rat> order = std::nullopt) const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<IntVec, Series> terms_;
};

/// Laurent polynomial with complex coefficients.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  void add_term(const IntVec& m, const PolarC& c);

  [[nodiscard]] const std::vector<std::string>& vars() const { return vars_; }
  [[nodiscard]] std::size_t nvars() const { return vars_.size(); }
  [[nodiscard]] const std::map<IntVec, PolarC>& terms() const { return terms_; }
  [[nodiscard]] std::vector<IntVec> support() const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] std::complex<double> evaluate(const std::vector<std::complex<double>>& x) const;
  /// Every coefficient multiplied by c.
  [[nodiscard]] CPoly scaled(const PolarC& c) const;
  /// The substitution x_j -> s_j · x_j.
  [[nodiscard]] CPoly substituted(const std::vector<PolarC>& s) const;
  /// Divided by the coefficient of the lexicographically least exponent.
  [[nodiscard]] CPoly normalized() const;
  /// The constant-coefficient polynomial over the valued field.
  [[nodiscard]] KPoly to_kpoly() const;

  /// Same support and coefficients compared as PolarC.
  friend bool operator==(const CPoly& a, const CPoly& b);

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<IntVec, PolarC> terms_;
};

/// Equality up to a nonzero scalar: both sides normalized first.
bool equal_up_to_scalar(const CPoly& a, const CPoly& b);

/// A polynomial divided by its base term: 1 + Σ a_i x^(rows of A).
struct MonicForm {
  IntMatrix A;              // rows m_i - m_0, in lexicographic order of m_i
  PhaseVec shifts;          // phases of a_i
  std::vector<PolarC> coefficients;  // a_i
  IntVec base;              // m_0, the lexicographically least exponent
};

/// Monic polynomials whose reduced supports are jointly linearly independent.
struct SimpleSystem {
  std::size_t rank = 0;
  std::vector<CPoly> polys;
  std::vector<MonicForm> forms;
};

/// Thrown by check_simple_system; `dependent` lists the offending exponent set.
class NotSimpleError : public Error {
 public:
  NotSimpleError(const std::string& what, std::vector<IntVec> dependent)
      : Error(what), dependent(std::move(dependent)) {}
  std::vector<IntVec> dependent;
};

/// Minimal value of ν(c_m) + <m, w> over the support.
Rat tropical_value(const KPoly& f, const RatVec& w);
/// Exponents achieving the minimum of ν(c_m) + <m, w>, in lexicographic order.
std::vector<IntVec> argmin_support(const KPoly& f, const RatVec& w);
bool is_in_trop(const KPoly& f, const RatVec& w);
/// Σ over the argmin of lead(c_m)·α(ν(c_m))⁻¹ x^m, where α is the section's twist.
CPoly tropical_reduction(const KPoly& f, const RatVec& w, const Section& s);
/// Terms of g minimizing <m, w>.
CPoly initial_form(const CPoly& g, const RatVec& w);
/// Restriction of g to the listed exponents.
CPoly restricted(const CPoly& g, const std::vector<IntVec>& exponents);
MonicForm monic_reduced(const CPoly& g);
SimpleSystem check_simple_system(const std::vector<CPoly>& polys);

}  // namespace phasetrop
