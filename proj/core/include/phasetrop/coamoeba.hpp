#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phasetrop/laurent.hpp"
#include "phasetrop/polyhedron.hpp"

namespace phasetrop {

/// One hyperplane factor pulled back along a monomial map: the polynomial
/// 1 + Σ a_i x^(row i of A), with shift_i = arg a_i.
struct CoaFactor {
  IntMatrix A;
  PhaseVec shift;
  /// Full coefficients a_i when known (needed only for sampling actual points).
  std::vector<PolarC> coefficients;

  friend bool operator==(const CoaFactor& a, const CoaFactor& b) { return a.A == b.A && a.shift == b.shift; }
};

/// Combinatorial description of the coamoeba closure of a simple variety.
struct SimpleCoA {
  std::size_t rank = 0;
  std::vector<CoaFactor> factors;

  /// 1 + x_1 + ... + x_n in rank n.
  static SimpleCoA standard(std::size_t n);
  /// Factors read off a checked simple system.
  static SimpleCoA from_system(const SimpleSystem& sys);
  static SimpleCoA single(const IntMatrix& A, const PhaseVec& shift);

  /// Throws unless the stacked rows are linearly independent and lengths agree.
  void validate() const;
  /// Row count summed over factors.
  [[nodiscard]] std::size_t total_rows() const;
  /// The factors as monic polynomials with unit coefficients e^(i·shift), or the stored coefficients.
  [[nodiscard]] std::vector<CPoly> polynomials() const;
  /// Every shift moved by A·delta.
  [[nodiscard]] SimpleCoA translated(const PhaseVec& delta) const;

  friend bool operator==(const SimpleCoA& a, const SimpleCoA& b) = default;
  [[nodiscard]] std::string to_string() const;
};

/// Open zonotope test in the chart θ_0 = 0. Float lifts must clear the boundary by kPhaseEpsilon.
bool in_open_zonotope(const PhaseVec& theta);

/// θ lies in the closure iff A·θ + shift leaves the open zonotope for every factor.
bool closure_membership(const SimpleCoA& desc, const PhaseVec& theta);

/// Outcome of the strict-membership LP for 1 + Σ r_i e^(i(θ_i + arg a_i)) = 0, r > 0.
struct LpWitness {
  bool feasible = false;
  /// Whether the decision was made in exact arithmetic.
  bool exact = false;
  /// Exact solution of the piecewise-linear direction model (exact phases only).
  RatVec model_radii;
  /// Radii for the actual unit directions, from a floating-point LP.
  std::vector<double> radii;
};

/// Float phases are decided with r_i >= kLpRadiusFloor.
inline constexpr double kLpRadiusFloor = 1e-7;

LpWitness lp_witness(const PhaseVec& coeff_phases, const PhaseVec& theta);

/// An initial system attached to a nonzero cone of the fan of the descriptor.
struct LimitPiece {
  Polyhedron cone;
  /// Per factor, the indices (0 for the constant term, i for row i) of the face kept.
  std::vector<std::vector<std::size_t>> faces;
  SimpleCoA coa;
};

std::vector<LimitPiece> phase_limit_pieces(const SimpleCoA& desc);

/// Closure membership decided by strict-membership LPs on the full system and all limit pieces.
bool closure_via_limit_lps(const SimpleCoA& desc, const PhaseVec& theta);

/// Number of components of the complement of a single-factor coamoeba.
std::int64_t complement_component_count(const SimpleCoA& desc);

int coa_dimension(const SimpleCoA& desc);

}  // namespace phasetrop
