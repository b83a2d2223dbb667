#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phasetrop/rational.hpp"

namespace phasetrop {

/// Tolerance, in radians, for every comparison involving a float phase.
inline constexpr double kPhaseEpsilon = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A point of the circle R / 2piZ.
///
/// Exact phases are rational numbers of turns reduced into [0, 1); float
/// phases are radians reduced into [0, 2pi). Combining an exact and a float
/// phase produces a float phase.
class Phase {
 public:
  Phase() = default;

  static Phase turns(const Rat& t);
  static Phase radians(double r);
  static Phase zero() { return Phase(); }

  [[nodiscard]] bool is_exact() const { return exact_; }
  /// Exact turns in [0, 1). Throws for float phases.
  [[nodiscard]] const Rat& exact_turns() const;
  [[nodiscard]] double to_radians() const;
  /// Turns as a double in [0, 1).
  [[nodiscard]] double to_turns() const;

  /// Canonical lift into (-1/2, 1/2] turns. Exact phases only.
  [[nodiscard]] Rat exact_lift() const;
  /// Canonical lift into (-pi, pi] radians.
  [[nodiscard]] double lift_radians() const;

  Phase operator-() const;
  friend Phase operator+(const Phase& a, const Phase& b);
  friend Phase operator-(const Phase& a, const Phase& b);
  Phase& operator+=(const Phase& o) { return *this = *this + o; }
  Phase& operator-=(const Phase& o) { return *this = *this - o; }
  [[nodiscard]] Phase scaled(std::int64_t k) const;
  /// One of the d phases whose d-fold multiple is this phase.
  [[nodiscard]] Phase divided(std::int64_t d, std::int64_t branch = 0) const;

  /// Exact equality for two exact phases, circular distance <= kPhaseEpsilon otherwise.
  friend bool operator==(const Phase& a, const Phase& b);

  /// Circular distance in radians, in [0, pi].
  [[nodiscard]] double distance(const Phase& other) const;

  [[nodiscard]] std::string to_string() const;

 private:
  bool exact_ = true;
  Rat turns_;
  double radians_ = 0.0;
};

using PhaseVec = std::vector<Phase>;

PhaseVec operator+(const PhaseVec& a, const PhaseVec& b);
PhaseVec operator-(const PhaseVec& a, const PhaseVec& b);
PhaseVec operator-(const PhaseVec& a);
bool all_exact(const PhaseVec& v);
std::string to_string(const PhaseVec& v);

/// A complex number in polar form, with an exact-zero flag.
///
/// The modulus is a double, optionally shadowed by an exact rational. Products
/// and quotients act on phases exactly. Sums stay exact when the two phases
/// coincide or are antipodal; any other sum goes through std::complex<double>
/// and yields a float phase.
class PolarC {
 public:
  PolarC() = default;  // zero

  static PolarC zero() { return PolarC(); }
  static PolarC one() { return polar(Rat(1), Phase::zero()); }
  static PolarC polar(const Rat& modulus, const Phase& phase);
  static PolarC polar(double modulus, const Phase& phase);
  /// Real rational number; negative values get phase 1/2 turn.
  static PolarC real(const Rat& value);
  static PolarC from_complex(std::complex<double> z);

  [[nodiscard]] bool is_zero() const { return zero_; }
  [[nodiscard]] double modulus() const { return modulus_; }
  [[nodiscard]] const std::optional<Rat>& exact_modulus() const { return exact_modulus_; }
  [[nodiscard]] const Phase& phase() const { return phase_; }
  [[nodiscard]] std::complex<double> to_complex() const;

  PolarC operator-() const;
  friend PolarC operator*(const PolarC& a, const PolarC& b);
  friend PolarC operator/(const PolarC& a, const PolarC& b);
  friend PolarC operator+(const PolarC& a, const PolarC& b);
  friend PolarC operator-(const PolarC& a, const PolarC& b) { return a + (-b); }
  PolarC& operator*=(const PolarC& o) { return *this = *this * o; }
  PolarC& operator+=(const PolarC& o) { return *this = *this + o; }

  [[nodiscard]] PolarC pow(std::int64_t k) const;
  [[nodiscard]] PolarC inverse() const;
  [[nodiscard]] PolarC nth_root(std::int64_t d, std::int64_t branch = 0) const;

  /// Phases compared as Phase; moduli exactly when both are exact,
  /// otherwise to a relative tolerance of 1e-10.
  friend bool operator==(const PolarC& a, const PolarC& b);

  [[nodiscard]] std::string to_string() const;

 private:
  bool zero_ = true;
  double modulus_ = 0.0;
  std::optional<Rat> exact_modulus_;
  Phase phase_;
};

}  // namespace phasetrop
