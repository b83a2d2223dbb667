#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phasetrop/phase.hpp"
#include "phasetrop/rational.hpp"

namespace phasetrop {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Builds a matrix from rows of equal length. `cols` is used when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols = 0);
  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] IntVec row(std::size_t r) const;
  [[nodiscard]] IntVec col(std::size_t c) const;
  [[nodiscard]] std::vector<IntVec> row_list() const;
  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVec operator*(const IntMatrix& a, const IntVec& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// A·v over the rationals, A integral.
RatVec apply(const IntMatrix& a, const RatVec& v);
/// A·θ on the torus: sum of integer multiples of phases.
PhaseVec apply(const IntMatrix& a, const PhaseVec& theta);

/// U·M·V = diag(divisors), with U and V unimodular and V_inv = V⁻¹.
struct SmithForm {
  IntMatrix U;
  IntVec divisors;  // min(rows, cols) entries, each dividing the next; zeros last
  IntMatrix V;
  IntMatrix V_inv;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form with zero rows removed: echelon rows, positive
/// pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::int64_t determinant(const IntMatrix& m);

/// Index of the integer span of independent vectors inside its saturation.
/// Throws Error("not linearly independent") on dependent input.
std::int64_t lattice_index(const std::vector<IntVec>& vectors);

/// Basis, in Hermite form, of the saturation of the integer span.
std::vector<IntVec> span_lattice(const std::vector<IntVec>& vectors, std::size_t dim);
std::vector<IntVec> span_lattice(const std::vector<RatVec>& vectors, std::size_t dim);

/// Basis, in Hermite form, of the integer vectors x with M·x = 0.
std::vector<IntVec> integer_kernel(const IntMatrix& m);

/// Some integer x with M·x = b, if one exists.
std::optional<IntVec> integer_solve(const IntMatrix& m, const RatVec& b);

/// Whether θ lies in the subtorus spanned by the given integer directions.
/// Exact for exact phases; float phases are tested with a tolerance scaled from kPhaseEpsilon.
bool subtorus_contains(const std::vector<IntVec>& basis, const PhaseVec& theta);

/// Scales a rational vector to the primitive integer vector on the same ray. Zero stays zero.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

}  // namespace phasetrop
