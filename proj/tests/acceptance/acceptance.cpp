// End-to-end acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "builders.hpp"
#include "oracles.hpp"
#include "phasetrop/phasetrop.hpp"

using namespace phasetrop;
using namespace build;

namespace {

// Pinned limits.
constexpr double kPlanarLineSeconds = 5.0;
constexpr std::size_t kPlanarLineRes = 512;
constexpr std::size_t kLimitLpRes = 256;
constexpr std::size_t kLimitLpHyperplanes = 20;
constexpr std::size_t kLimitLpPoints = 10000;
constexpr std::int64_t kShiftDen = 24;
constexpr std::int64_t kPointDen = 360;
constexpr std::size_t kRidgeRes = 64;
constexpr int kFloodRes = 256;
constexpr int kFloodReach = 3;
constexpr std::size_t kKPoints = 10000;
constexpr std::size_t kAllowedMismatches = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fixture(const std::string& name) { return std::string(PHASETROP_FIXTURE_DIR) + "/" + name; }

TropModel load(const std::string& name, const Section& s = Section::canonical()) {
  return io::model_from_json(io::read_json_file(fixture(name)), s);
}

PhaseVec tv(std::initializer_list<Rat> turns_list) {
  PhaseVec out;
  for (const auto& t : turns_list) out.push_back(Phase::turns(t));
  return out;
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome planar_line() {
  const auto start = std::chrono::steady_clock::now();
  const SimpleCoA line = SimpleCoA::standard(2);
  const GridReport r = grid_compare([&](const PhaseVec& t) { return closure_membership(line, t); },
                                    [](const PhaseVec& t) { return oracle::two_triangles(t[0].exact_lift(), t[1].exact_lift()); },
                                    2, kPlanarLineRes);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::vector<PhaseVec> dots{tv({Rat(1, 2), 0}), tv({0, Rat(1, 2)}), tv({Rat(1, 2), Rat(1, 2)}),
                                   tv({Rat(1, 3), Rat(-1, 3)}), tv({Rat(-1, 3), Rat(1, 3)})};
  bool dots_ok = true;
  for (const auto& d : dots) dots_ok = dots_ok && closure_membership(line, d);
  const bool interior_out = !closure_membership(line, tv({Rat(1, 8), Rat(-1, 8)}));
  return {r.mismatches <= kAllowedMismatches && dots_ok && interior_out && seconds < kPlanarLineSeconds,
          fmt("%zux%zu grid, %zu mismatches, %zu excluded, dots and triangle interiors %s, %.2fs (limit %.0fs)",
              kPlanarLineRes, kPlanarLineRes, r.mismatches, r.excluded, dots_ok ? "inside" : "WRONG", seconds,
              kPlanarLineSeconds)};
}

Outcome limit_pieces() {
  const SimpleCoA line = SimpleCoA::standard(2);
  const GridReport grid = grid_compare([&](const PhaseVec& t) { return closure_membership(line, t); },
                                       [&](const PhaseVec& t) { return closure_via_limit_lps(line, t); }, 2, kLimitLpRes);
  std::mt19937_64 rng(2024);
  std::size_t mismatches = 0;
  std::size_t members = 0;
  std::size_t total = 0;
  for (std::size_t h = 0; h < kLimitLpHyperplanes; ++h) {
    const std::size_t rank = h < kLimitLpHyperplanes / 2 ? 2 : 3;
    const SimpleCoA d = random_hyperplane(rng, rank, kShiftDen);
    std::vector<PhaseVec> points;
    for (std::size_t i = 0; i < kLimitLpPoints; ++i) points.push_back(random_exact_phases(rng, rank, kPointDen));
    std::vector<char> verdict(kLimitLpPoints, 0);
    parallel_for(kLimitLpPoints, 0, [&](std::size_t i) {
      const bool a = closure_membership(d, points[i]);
      const bool b = closure_via_limit_lps(d, points[i]);
      verdict[i] = static_cast<char>((a ? 1 : 0) | (a != b ? 2 : 0));
    });
    for (const char v : verdict) {
      members += v & 1;
      mismatches += (v & 2) ? 1 : 0;
      ++total;
    }
  }
  return {grid.mismatches + mismatches <= kAllowedMismatches,
          fmt("line %zux%zu: %zu mismatches; %zu random 3/4-term hyperplanes x %zu points: %zu mismatches "
              "(%zu of %zu points in the closure)",
              kLimitLpRes, kLimitLpRes, grid.mismatches, kLimitLpHyperplanes, kLimitLpPoints, mismatches, members, total)};
}

// Union of the four triangle cylinders of 1+x+y+z, each tested on its own two phase differences.
bool triangle_cylinders(const PhaseVec& t) {
  const Rat x = t[0].exact_lift();
  const Rat y = t[1].exact_lift();
  const Rat z = t[2].exact_lift();
  return oracle::two_triangles(x, y) || oracle::two_triangles(x, z) || oracle::two_triangles(y, z) ||
         oracle::two_triangles(y - x, z - x);
}

Outcome ridges() {
  const PhasePredicate complement = [](const PhaseVec& t) { return !in_open_zonotope(t); };
  const GridReport oracle_run = grid_compare(complement, triangle_cylinders, 3, kRidgeRes);
  const GridReport library_run = grid_compare(complement, triangle_cover(SimpleCoA::standard(3)), 3, kRidgeRes);
  return {oracle_run.mismatches + library_run.mismatches <= kAllowedMismatches,
          fmt("%zu^3 grid: %zu mismatches against the test-side cylinders, %zu against the library limit pieces",
              kRidgeRes, oracle_run.mismatches, library_run.mismatches)};
}

Outcome nvol() {
  const std::int64_t curve = lattice_index({{2, 1}, {1, 2}});
  const std::int64_t m[2][2] = {{2, 1}, {1, 2}};
  const std::int64_t fill = oracle::complement_components_2x2(m, kFloodRes, kFloodReach);
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  std::string first_bad;
  for (int e = 0; e < 256; ++e) {
    const std::int64_t a[2][2] = {{e & 3, (e >> 2) & 3}, {(e >> 4) & 3, (e >> 6) & 3}};
    if (a[0][0] * a[1][1] - a[0][1] * a[1][0] == 0) continue;
    ++checked;
    const SimpleCoA d = SimpleCoA::single(IntMatrix::from_rows({{a[0][0], a[0][1]}, {a[1][0], a[1][1]}}), PhaseVec(2));
    const std::int64_t lib = complement_component_count(d);
    const std::int64_t flood = oracle::complement_components_2x2(a, kFloodRes, kFloodReach);
    const std::int64_t cosets = oracle::coset_count_2d({a[0][0], a[0][1]}, {a[1][0], a[1][1]});
    if (lib != flood || lib != cosets) {
      if (disagreements++ == 0) {
        first_bad = fmt(" first: [[%ld,%ld],[%ld,%ld]] index %ld flood %ld", a[0][0], a[0][1], a[1][0], a[1][1], lib,
                        flood);
      }
    }
  }
  return {curve == 3 && fill == 3 && disagreements == 0,
          fmt("index{(2,1),(1,2)} = %ld, flood fill %ld; %zu nonsingular matrices in [0,3]: %zu disagreements",
              curve, fill, checked, disagreements) +
              first_bad};
}

Outcome plane_line_complex() {
  const TropComplex c = trop_complex(plane_line());
  const auto vertices = c.faces_of_dimension(0);
  const auto edges = c.faces_of_dimension(1);
  bool ok = vertices.size() == 1 && edges.size() == 3 && c.size() == 4;
  if (ok) ok = c.face(vertices.front()).poly.relint_point() == rv({1, 1});
  std::vector<IntVec> dirs;
  for (const auto e : edges) {
    if (auto d = c.face(e).poly.ray_direction()) dirs.push_back(*d);
  }
  std::sort(dirs.begin(), dirs.end());
  ok = ok && dirs == std::vector<IntVec>{{-1, -1}, {0, 1}, {1, 0}};
  const CPoly red = tropical_reduction(plane_line(), rv({1, 1}), Section::canonical());
  const CPoly expected = cpoly(2, {{{1, 0}, PolarC::one()}, {{0, 1}, PolarC::one()}, {{0, 0}, PolarC::one()}});
  ok = ok && red == expected;
  return {ok, fmt("%zu vertex at (1,1), %zu rays (-1,-1),(0,1),(1,0); vertex reduction %s", vertices.size(),
                  dirs.size(), red.to_string().c_str())};
}

// Checks, for every minimal face and each larger face through it, that the
// larger face's computed reduction is exactly the initial form of the minimal one.
std::size_t initial_form_failures(const TropModel& m) {
  std::size_t bad = 0;
  for (const auto low : m.minimal_faces()) {
    const RatVec& base = m.complex.face(low).poly.relint_point();
    for (const auto high : m.complex.superfaces(low)) {
      RatVec w = m.complex.face(high).poly.relint_point();
      RatVec dir = w;
      for (std::size_t j = 0; j < dir.size(); ++j) dir[j] -= base[j];
      for (const auto& f : m.polys) {
        const CPoly low_red = tropical_reduction(f, base, Section::canonical());
        if (!(initial_form(low_red, dir) == tropical_reduction(f, w, Section::canonical()))) ++bad;
      }
    }
  }
  return bad;
}

nlohmann::json without_declared(nlohmann::json j) {
  for (auto& f : j["faces"]) f.erase("reductions");
  return j;
}

Outcome local_fans() {
  const TropComplex c = trop_complex(plane_line());
  const TropComplex fan = local_fan(c, rv({1, 1}));
  const KPoly constant = cpoly(2, {{{1, 0}, PolarC::one()}, {{0, 1}, PolarC::one()}, {{0, 0}, PolarC::one()}}).to_kpoly();
  const bool fan_ok = fan.cells() == trop_complex(constant).cells();
  const std::size_t plane_bad = initial_form_failures(build_trop_model(plane_line(), Section::canonical()));
  const TropModel space =
      io::load_fixture_model(without_declared(io::read_json_file(fixture("space_line.json"))), Section::canonical());
  const std::size_t space_bad = initial_form_failures(space);
  return {fan_ok && plane_bad == 0 && space_bad == 0,
          fmt("local fan at (1,1) %s trop(x+y+1); initial-form mismatches: plane line %zu, space line %zu",
              fan_ok ? "equals" : "DIFFERS from", plane_bad, space_bad)};
}

// Piece over (0,0,0): x + ζy and i·x + z - ω, written as exact conditions on turns.
bool space_piece_vertical(const Rat& x, const Rat& y, const Rat& z) {
  const bool binomial = (x - y - Rat(5, 6)).frac() == Rat(0);
  return binomial && oracle::two_triangles(x + Rat(5, 8), z + Rat(3, 8));
}

// Piece over (1,1,0): x + ζy + ζ² and z - ω.
bool space_piece_horizontal(const Rat& x, const Rat& y, const Rat& z) {
  return (z - Rat(1, 8)).frac() == Rat(0) && oracle::two_triangles(x - Rat(2, 3), y - Rat(1, 3));
}

Outcome space_line() {
  const auto json = io::read_json_file(fixture("space_line.json"));
  const FixtureSpec table = io::fixture_from_json(json);
  const TropModel m = io::load_fixture_model(without_declared(json), Section::canonical());
  std::size_t matched = 0;
  for (std::size_t i = 0; i < m.complex.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < 2; ++k) ok = ok && equal_up_to_scalar(m.faces[i].reductions[k], (*table.faces[i].declared)[k]);
    matched += ok;
  }

  // Ten points in the piece over the origin, built from points of the two triangles.
  const std::vector<std::pair<Rat, Rat>> tri{{Rat(1, 3), Rat(-1, 3)}, {Rat(-1, 3), Rat(1, 3)}, {Rat(2, 5), Rat(-1, 5)},
                                             {Rat(1, 2), 0},          {0, Rat(1, 2)},          {Rat(1, 2), Rat(1, 2)},
                                             {Rat(-2, 5), Rat(1, 4)}, {Rat(3, 7), Rat(-1, 7)}, {Rat(1, 4), Rat(-1, 4)},
                                             {Rat(-1, 6), Rat(9, 20)}};
  std::vector<std::pair<PhaseVec, bool>> points;
  for (const auto& [a, b] : tri) {
    const Rat x = a - Rat(5, 8);
    const Rat z = b - Rat(3, 8);
    points.push_back({tv({x, x - Rat(5, 6), z}), true});
  }
  // Ten points off both pieces: wrong binomial phase and z away from 1/8, or inside the zonotope.
  const std::vector<std::array<Rat, 3>> off{{0, 0, 0},
                                            {Rat(1, 3), Rat(1, 3), Rat(1, 3)},
                                            {Rat(-7, 24), Rat(-7, 24) - Rat(5, 6), Rat(1, 2)},
                                            {Rat(1, 10), Rat(1, 5), Rat(1, 7)},
                                            {Rat(-5, 8), Rat(-5, 8) - Rat(5, 6), Rat(-3, 8)},
                                            {Rat(2, 3), Rat(1, 3), Rat(1, 4)},
                                            {Rat(1, 2), Rat(1, 2), 0},
                                            {Rat(-1, 8), Rat(3, 8), Rat(5, 8)},
                                            {Rat(1, 12), Rat(7, 12), Rat(1, 9)},
                                            {Rat(2, 3) + Rat(1, 8), Rat(1, 3) - Rat(1, 8), Rat(1, 8)}};
  for (const auto& p : off) points.push_back({tv({p[0], p[1], p[2]}), false});

  std::size_t oracle_agrees = 0;
  std::size_t nca_agrees = 0;
  for (const auto& [theta, expected] : points) {
    const Rat x = theta[0].exact_lift();
    const Rat y = theta[1].exact_lift();
    const Rat z = theta[2].exact_lift();
    const bool truth = space_piece_vertical(x, y, z) || space_piece_horizontal(x, y, z);
    oracle_agrees += truth == expected;
    nca_agrees += nca_membership(m, theta).member == truth;
  }
  return {matched == 7 && oracle_agrees == 20 && nca_agrees == 20,
          fmt("%zu/7 faces match the initial-ideal table; hand-picked points confirmed by the factor oracle %zu/20, "
              "nca_membership agrees %zu/20",
              matched, oracle_agrees, nca_agrees)};
}

Outcome kpoints() {
  KPointOptions o;
  o.count = kKPoints;
  o.seed = 20240601;
  const SampleReport line = sample_kpoints(plane_line(), Section::canonical(), o);
  const SampleReport curve = sample_kpoints(load("pullback_curve.json"), o);
  std::size_t branches = 0;
  for (const auto c : curve.branch_counts) branches += c > 0;
  return {line.passed() && curve.passed(),
          fmt("x+y+t: %zu points, %zu failures (%zu redraws); pullback curve: %zu points, %zu failures, %zu/%zu "
              "branches hit",
              line.count, line.failures.size(), line.resampled, curve.count, curve.failures.size(), branches,
              curve.branch_counts.size())};
}

Outcome section_change() {
  const Section twist = Section::twisted(Rat(1), unit(1, 4));
  const TropModel plane = build_trop_model(plane_line(), Section::canonical());
  const auto [moved, report] = apply_section_change(plane, twist);
  const TropModel direct = build_trop_model(plane_line(), twist);
  bool equal = moved.faces.size() == direct.faces.size();
  for (std::size_t i = 0; equal && i < moved.faces.size(); ++i) equal = moved.faces[i].coa == direct.faces[i].coa;

  const TropModel space = load("space_line.json");
  const auto space_report = apply_section_change(space, twist).second;
  bool coset = space_report.translations.size() == 2;
  if (coset) {
    const auto edge = space.complex.locate(rv({Rat(1, 2), Rat(1, 2), 0}));
    const PhaseVec ratio = space_report.translations[1].second - space_report.translations[0].second;
    coset = edge && subtorus_contains(space.complex.face(*edge).lattice, ratio);
  }
  return {equal && report.ok() && coset && space_report.ok(),
          fmt("plane line: a = %s, descriptors %s direct reconstruction; space line: translation ratio %s the edge "
              "subtorus",
              to_string(report.translations.front().second).c_str(), equal ? "equal" : "DIFFER from",
              coset ? "lies in" : "is NOT in")};
}

Outcome dimensions() {
  const std::vector<std::pair<std::string, TropModel>> models{
      {"plane line", build_trop_model(plane_line(), Section::canonical())},
      {"space line", load("space_line.json")},
      {"pullback curve", load("pullback_curve.json")}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [name, m] : models) {
    const DimensionReport r = piece_dimensions(m);
    const bool twice = r.max_total == 2 * r.variety_dim;
    const bool plus_one = !r.has_nonbinomial_face || r.max_nca == r.variety_dim + 1;
    ok = ok && twice && plus_one;
    detail << name << ": max " << r.max_total << " (2 dim X = " << 2 * r.variety_dim << "), nca " << r.max_nca
           << (r.has_nonbinomial_face ? " (dim X + 1 = " + std::to_string(r.variety_dim + 1) + ")" : "") << "; ";
  }
  std::string text = detail.str();
  text.resize(text.size() - 2);
  return {ok, text};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"planar line coamoeba", planar_line},
      {"zonotope complement equals limit-LP union", limit_pieces},
      {"triangle cylinders cover the plane coamoeba", ridges},
      {"lattice index counts complement components", nvol},
      {"tropical line x+y+t", plane_line_complex},
      {"local fans and initial forms", local_fans},
      {"space line fixture", space_line},
      {"series-field sampling", kpoints},
      {"section change", section_change},
      {"piece dimensions", dimensions},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
