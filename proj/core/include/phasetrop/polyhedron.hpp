#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "phasetrop/lattice.hpp"
#include "phasetrop/rational.hpp"

namespace phasetrop {

/// The linear condition <normal, w> (= or >=) rhs.
struct LinearCondition {
  IntVec normal;
  Rat rhs;
  friend bool operator==(const LinearCondition&, const LinearCondition&) = default;
  friend auto operator<=>(const LinearCondition& a, const LinearCondition& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

/// A rational polyhedron {w : <a, w> = b for equalities, <a, w> >= b for inequalities}.
///
/// Construction canonicalizes: implicit equalities are promoted, equalities are
/// put in reduced echelon form with primitive integer normals and positive
/// pivots, inequality normals are reduced modulo the equalities and made
/// primitive, duplicates and redundant inequalities are removed, and both lists
/// are sorted. Two polyhedra are equal as sets iff their canonical forms agree.
class Polyhedron {
 public:
  Polyhedron() = default;
  /// The whole space of the given dimension.
  explicit Polyhedron(std::size_t ambient) : ambient_(ambient), relint_(ambient) {}
  Polyhedron(std::size_t ambient, std::vector<LinearCondition> equalities, std::vector<LinearCondition> inequalities);

  static Polyhedron point(const RatVec& p);

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] bool is_empty() const { return empty_; }
  [[nodiscard]] const std::vector<LinearCondition>& equalities() const { return eqs_; }
  [[nodiscard]] const std::vector<LinearCondition>& inequalities() const { return ineqs_; }
  /// Dimension of the affine hull; -1 when empty.
  [[nodiscard]] int dimension() const;

  [[nodiscard]] bool contains(const RatVec& w) const;
  [[nodiscard]] bool in_relint(const RatVec& w) const;
  /// A point of the relative interior; empty for the empty polyhedron.
  [[nodiscard]] const RatVec& relint_point() const { return relint_; }
  /// A pseudo-random relative-interior point, reproducible from the generator state.
  [[nodiscard]] RatVec random_relint_point(std::mt19937_64& rng) const;

  /// Basis of the saturated lattice of integer directions parallel to the affine hull.
  [[nodiscard]] std::vector<IntVec> direction_lattice() const;
  /// Whether the recession cone is {0}.
  [[nodiscard]] bool is_bounded() const;
  /// For a one-dimensional polyhedron: the primitive direction of its recession
  /// cone when that cone is a single ray.
  [[nodiscard]] std::optional<IntVec> ray_direction() const;

  /// Intersection, canonicalized.
  [[nodiscard]] Polyhedron intersect(const Polyhedron& other) const;
  /// The tangent cone at a point w of this polyhedron: equalities with zero
  /// right-hand side and the inequalities tight at w, homogenized.
  [[nodiscard]] Polyhedron tangent_cone(const RatVec& w) const;

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.ambient_ == b.ambient_ && a.empty_ == b.empty_ && a.eqs_ == b.eqs_ && a.ineqs_ == b.ineqs_;
  }
  friend bool operator<(const Polyhedron& a, const Polyhedron& b) {
    if (a.eqs_ != b.eqs_) return a.eqs_ < b.eqs_;
    return a.ineqs_ < b.ineqs_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  void canonicalize();

  std::size_t ambient_ = 0;
  bool empty_ = false;
  std::vector<LinearCondition> eqs_;
  std::vector<LinearCondition> ineqs_;
  RatVec relint_;
};

/// Exact rational feasibility of {<a,w> = b} ∪ {<a,w> >= b}.
bool feasible_system(std::size_t ambient, const std::vector<LinearCondition>& equalities,
                     const std::vector<LinearCondition>& inequalities);
/// Same, with every inequality strict.
bool strictly_feasible_system(std::size_t ambient, const std::vector<LinearCondition>& equalities,
                              const std::vector<LinearCondition>& inequalities);

}  // namespace phasetrop
