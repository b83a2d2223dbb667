#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phasetrop/phase.hpp"
#include "phasetrop/rational.hpp"

namespace phasetrop {

struct SeriesTerm {
  Rat gamma;
  PolarC coeff;
};

/// A finite generalized power series Σ c_γ t^γ with rational exponents.
///
/// Terms are sorted by strictly increasing exponent with nonzero
/// coefficients. A truncation order T means the series is known only modulo
/// t^T; every stored exponent is below T. No truncation means the sum is exact.
class Series {
 public:
  Series() = default;  // exact zero

  static Series constant(const PolarC& c, std::optional<Rat> trunc = std::nullopt);
  static Series monomial(const PolarC& c, const Rat& gamma, std::optional<Rat> trunc = std::nullopt);
  /// Sorts, merges equal exponents, and drops zero terms and terms at or past `trunc`.
  static Series from_terms(std::vector<SeriesTerm> terms, std::optional<Rat> trunc = std::nullopt);

  [[nodiscard]] const std::vector<SeriesTerm>& terms() const { return terms_; }
  [[nodiscard]] const std::optional<Rat>& truncation() const { return trunc_; }
  /// No known terms. For a truncated series this means "zero to the known order".
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Least exponent, or nullopt for +∞.
  [[nodiscard]] std::optional<Rat> valuation() const;
  /// Leading term. Throws on zero.
  [[nodiscard]] const SeriesTerm& leading() const;

  /// The same series known only modulo t^order.
  [[nodiscard]] Series truncated(const Rat& order) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b);
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// a / b. Exact quotients by monomials need no order. Otherwise the result is
  /// known to the precision of the inputs, or to `order` when both are exact.
  static Series divide(const Series& a, const Series& b, std::optional<Rat> order = std::nullopt);

  /// Integer power; negative powers go through divide.
  [[nodiscard]] Series pow(std::int64_t k, std::optional<Rat> order = std::nullopt) const;
  /// A d-th root, with the leading coefficient's root chosen by `branch`.
  [[nodiscard]] Series nth_root(std::int64_t d, std::int64_t branch = 0,
                                std::optional<Rat> order = std::nullopt) const;

  /// Same terms and truncation; coefficients compared as PolarC.
  friend bool operator==(const Series& a, const Series& b);

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<SeriesTerm> terms_;
  std::optional<Rat> trunc_;
};

/// A section of the valuation on a cyclic subgroup gℤ of the rationals.
///
/// The canonical section sends γ to t^γ. A twisted section sends γ = k·g to
/// α(g)^k t^γ and is undefined off gℤ.
class Section {
 public:
  Section() = default;  // canonical

  static Section canonical() { return Section(); }
  static Section twisted(const Rat& generator, const PolarC& alpha_generator);

  [[nodiscard]] bool is_canonical() const { return canonical_; }
  [[nodiscard]] const Rat& generator() const { return generator_; }
  [[nodiscard]] const PolarC& alpha_generator() const { return alpha_; }

  [[nodiscard]] bool defined_at(const Rat& gamma) const;
  /// Ratio of this section to the canonical one at γ.
  /// Throws Error("section undefined at γ") off the subgroup.
  [[nodiscard]] PolarC alpha_at(const Rat& gamma) const;
  /// The section's value at γ as a series.
  [[nodiscard]] Series at(const Rat& gamma) const;

  [[nodiscard]] std::string to_string() const;

 private:
  bool canonical_ = true;
  Rat generator_{1};
  PolarC alpha_ = PolarC::one();
};

std::optional<Rat> valuation(const Series& x);
PolarC alpha_at(const Section& s, const Rat& gamma);
/// Phase of the unit a_x with x = a_x · s(ν(x)). Throws on zero.
Phase arg_section(const Series& x, const Section& s);

}  // namespace phasetrop
