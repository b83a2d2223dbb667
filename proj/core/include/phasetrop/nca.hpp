#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phasetrop/coamoeba.hpp"
#include "phasetrop/trop_complex.hpp"

namespace phasetrop {

enum class ModelSource { Hypersurface, Pullback, Fixture };

std::string to_string(ModelSource s);

/// Reduction data attached to one face of the tropical complex.
struct FaceModel {
  std::vector<CPoly> reductions;  // one per defining polynomial
  SimpleSystem system;
  SimpleCoA coa;
};

/// Tropical complex with per-face reductions and coamoeba descriptors.
struct TropModel {
  std::size_t rank = 0;
  ModelSource source = ModelSource::Hypersurface;
  /// Defining polynomials in the ambient variables.
  std::vector<KPoly> polys;
  /// Pullback presentation, when the model came from one.
  std::optional<IntMatrix> phi;
  std::vector<KPoly> factor_polys;
  TropComplex complex;
  std::vector<FaceModel> faces;
  Section section;

  /// Dimension of the variety, i.e. of the complex.
  [[nodiscard]] int dimension() const { return complex.dimension(); }
  [[nodiscard]] std::vector<std::size_t> minimal_faces() const { return complex.minimal_faces(); }
};

/// A face whose reduction is not simple.
class NotTropicallySimpleError : public Error {
 public:
  NotTropicallySimpleError(const std::string& what, std::size_t face, std::vector<IntVec> dependent)
      : Error(what), face(face), dependent(std::move(dependent)) {}
  std::size_t face;
  std::vector<IntVec> dependent;
};

/// A fixture that fails one of its consistency checks.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t face, std::string property)
      : Error(what), face(face), property(std::move(property)) {}
  std::size_t face;
  std::string property;
};

TropModel build_trop_model(const KPoly& f, const Section& s);

/// The preimage of a product of hyperplanes under the torus map whose
/// character matrix is phi: row j of phi is the exponent vector, in the
/// ambient lattice, of the j-th factor coordinate (factors concatenated).
TropModel build_pullback_model(const IntMatrix& phi, const std::vector<KPoly>& hyperplanes, const Section& s);

/// A user-supplied complex for a variety given by several polynomials.
struct FixtureFace {
  Polyhedron poly;
  /// Reductions stated by the fixture author; checked against the polynomials.
  std::optional<std::vector<CPoly>> declared;
};

struct FixtureSpec {
  std::size_t rank = 0;
  std::vector<KPoly> polys;
  std::vector<FixtureFace> faces;
  /// Seed for the relative-interior spot checks.
  std::uint64_t seed = 1;
};

/// Builds and validates a fixture model. Checks run in this order and the
/// first failure throws ValidationError naming the face and the property:
///   "tropical"  every reduction at the face sample has at least two terms
///   "simple"    every face system is simple
///   "initial"   at every minimal face, each larger face's reduction is the
///               initial form of the minimal face's reduction in its direction
///   "constant"  reductions at 5 random relative-interior points agree with
///               the face's reduction up to scalars
TropModel build_fixture_model(const FixtureSpec& input, const Section& s);

struct NcaResult {
  bool member = false;
  std::optional<std::size_t> witness;  // minimal face whose closure contains θ
};

NcaResult nca_membership(const TropModel& model, const PhaseVec& theta);
bool ptrop_membership(const TropModel& model, const RatVec& w, const PhaseVec& theta);

struct PieceDimension {
  std::size_t face = 0;
  int face_dim = 0;
  int coa_dim = 0;
  [[nodiscard]] int total() const { return face_dim + coa_dim; }
};

struct DimensionReport {
  int variety_dim = 0;
  std::vector<PieceDimension> pieces;
  int max_total = 0;
  /// Pieces over minimal faces, whose coamoeba closures make up the non-archimedean coamoeba.
  std::vector<PieceDimension> nca_pieces;
  int max_nca = 0;
  /// Whether some face reduction has a factor with at least three terms.
  bool has_nonbinomial_face = false;
};

DimensionReport piece_dimensions(const TropModel& model);

struct SectionChangeReport {
  /// Per minimal face, the phases of the ratio of the new section to the old at a lattice point.
  std::vector<std::pair<std::size_t, PhaseVec>> translations;
  /// Per minimal face, whether a second lattice point gives a translation in the same coset.
  std::vector<std::pair<std::size_t, bool>> well_defined;
  /// Per face, whether the translations of its minimal subfaces differ by its subtorus.
  std::vector<std::pair<std::size_t, bool>> coset_checks;
  /// Whether the translated model equals the one rebuilt under the new section.
  bool matches_direct = false;

  [[nodiscard]] bool ok() const;
};

/// Translates every face by the ratio of the sections at a lattice point of one
/// of its minimal subfaces. Throws when a section is undefined there.
std::pair<TropModel, SectionChangeReport> apply_section_change(const TropModel& model, const Section& next);

/// Recomputes every face's reductions from the polynomials under s.
TropModel rebuild_under(const TropModel& model, const Section& s);

/// A point of an affine minimal face with all coordinates in step·ℤ.
std::optional<RatVec> lattice_point(const Polyhedron& face, const Rat& step);

}  // namespace phasetrop
