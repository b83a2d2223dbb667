#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phasetrop/laurent.hpp"
#include "phasetrop/polyhedron.hpp"

namespace phasetrop {

/// Exponents attaining the minimum, one set per defining polynomial.
using ArgminSets = std::vector<std::vector<IntVec>>;

struct Face {
  Polyhedron poly;
  ArgminSets argmin;
  int dim = 0;
  std::vector<IntVec> lattice;  // basis of the directions of the affine hull
};

/// A rational polyhedral complex with per-face argmin data.
class TropComplex {
 public:
  TropComplex() = default;
  explicit TropComplex(std::size_t ambient) : ambient_(ambient) {}

  /// Appends a face, filling dimension, lattice and incidence.
  std::size_t add_face(Polyhedron poly, ArgminSets argmin);

  [[nodiscard]] std::size_t ambient() const { return ambient_; }
  [[nodiscard]] const std::vector<Face>& faces() const { return faces_; }
  [[nodiscard]] std::size_t size() const { return faces_.size(); }
  [[nodiscard]] const Face& face(std::size_t i) const { return faces_.at(i); }
  [[nodiscard]] bool empty() const { return faces_.empty(); }

  /// Pairs (sub, super) with sub a proper face of super.
  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>>& incidence() const { return incidence_; }
  [[nodiscard]] std::vector<std::size_t> subfaces(std::size_t i) const;
  [[nodiscard]] std::vector<std::size_t> superfaces(std::size_t i) const;

  [[nodiscard]] std::vector<std::size_t> faces_containing(const RatVec& w) const;
  /// The face whose relative interior contains w.
  [[nodiscard]] std::optional<std::size_t> locate(const RatVec& w) const;
  [[nodiscard]] std::vector<std::size_t> minimal_faces() const;
  [[nodiscard]] std::vector<std::size_t> faces_of_dimension(int d) const;
  [[nodiscard]] int dimension() const;
  [[nodiscard]] bool is_pure() const;
  /// Connectivity of the support, through the incidence graph.
  [[nodiscard]] bool is_connected() const;

  /// Canonical polyhedra, sorted; complexes with the same cells compare equal.
  [[nodiscard]] std::vector<Polyhedron> cells() const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Face> faces_;
  std::vector<std::pair<std::size_t, std::size_t>> incidence_;
};

/// The tropical hypersurface of f as the dual of the regular subdivision
/// induced by the valuations of the coefficients. Each face stores its argmin set.
/// Throws Error("tropical variety empty") for a monomial.
TropComplex trop_complex(const KPoly& f);
/// The fan of tangent cones at w of the faces containing w; empty when w is off the support.
TropComplex local_fan(const TropComplex& c, const RatVec& w);
std::vector<std::size_t> minimal_faces(const TropComplex& c);
std::optional<std::size_t> face_locate(const TropComplex& c, const RatVec& w);
/// Cones of the min-convention normal fan of conv(vertices), full-dimensional ones removed.
TropComplex normal_fan_skeleton(const std::vector<IntVec>& vertices);

}  // namespace phasetrop
