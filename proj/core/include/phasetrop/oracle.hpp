#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "phasetrop/nca.hpp"

namespace phasetrop {

struct SampleFailure {
  std::size_t index = 0;
  std::string input;  // the sampled point, printed
  RatVec w;           // valuations, for field samples
  PhaseVec theta;
  std::string expected;
};

struct SampleReport {
  std::size_t count = 0;
  /// Degenerate draws that were replaced.
  std::size_t resampled = 0;
  std::uint64_t seed = 0;
  std::vector<SampleFailure> failures;
  /// Accepted samples per preimage branch of the monomial map.
  std::vector<std::size_t> branch_counts;

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Samples complex points of the variety described by `desc` (which must
/// carry coefficients): free coordinates of each hyperplane are random, the
/// last is solved, and the point is pulled back through the monomial map on
/// a random branch. Every argument vector must pass closure_membership(desc).
SampleReport sample_complex(const SimpleCoA& desc, std::size_t count, std::uint64_t seed, unsigned threads = 0);

struct KPointOptions {
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  /// Truncation order for series arithmetic.
  Rat trunc{6};
  /// Multiplies the exponent menu {0, 1/2, 1, 3/2, 2}.
  Rat exponent_scale{1};
  unsigned threads = 0;
};

/// Samples points over the valued field. Hypersurface models must be linear in
/// their last variable; pullback models are sampled factor by factor and
/// pulled back with roots of series. Each point is checked to solve the
/// equations up to truncation, then against ptrop_membership at
/// (valuations, arguments) and nca_membership at the arguments.
SampleReport sample_kpoints(const TropModel& model, const KPointOptions& options);
SampleReport sample_kpoints(const KPoly& f, const Section& s, const KPointOptions& options);

using PhasePredicate = std::function<bool(const PhaseVec&)>;

struct GridOptions {
  /// Window [lower, lower + width) in turns, per coordinate.
  Rat lower{-1, 2};
  Rat width{1};
  unsigned threads = 0;
  /// When set, points closer than `band` radians to a boundary are skipped.
  std::function<double(const PhaseVec&)> boundary_distance;
  double band = kPhaseEpsilon;
  std::size_t max_reported = 16;
};

struct GridReport {
  std::size_t resolution = 0;
  std::size_t dimension = 0;
  std::size_t evaluated = 0;
  std::size_t mismatches = 0;
  std::size_t excluded = 0;
  std::vector<PhaseVec> mismatch_points;  // the first max_reported, in grid order
};

/// Cell centre `index` (row-major, last coordinate fastest) of the uniform grid, in exact turns.
PhaseVec grid_point(std::size_t dim, std::size_t resolution, std::size_t index, const GridOptions& options = {});

GridReport grid_compare(const PhasePredicate& a, const PhasePredicate& b, std::size_t dim, std::size_t resolution,
                        const GridOptions& options = {});

/// Distance in radians from A·θ + shift to the nearest boundary hyperplane of
/// the zonotope chart, minimized over factors.
double zonotope_boundary_distance(const SimpleCoA& desc, const PhaseVec& theta);

/// 1 + Σ a_i x_i in the given rank with unit coefficients at random multiples of 1/den turn.
SimpleCoA random_hyperplane(std::mt19937_64& rng, std::size_t rank, std::int64_t den = 24);
/// Phases k/den turns with k uniform.
PhaseVec random_exact_phases(std::mt19937_64& rng, std::size_t n, std::int64_t den);

/// Membership in the union of the limit pieces whose faces are triangles in
/// every factor (the cylinders over three-term initial forms).
PhasePredicate triangle_cover(const SimpleCoA& desc);

}  // namespace phasetrop
