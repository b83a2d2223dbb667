#pragma once

// JSON encodings shared by the CLI, fixtures and reports.
//
//   Rat       "p/q" or an integer
//   Phase     {"turns": "p/q"} | {"pi": "p/q"} | {"rad": 1.25}
//   PolarC    {"mod": "p/q" | 1.41, <phase keys>} | {"re": 1, "im": 1} | "p/q"
//   Series    {"terms": [{"gamma": "1", "coeff": PolarC}], "trunc": "5"} | PolarC
//   KPoly     {"vars": ["x", "y"], "terms": [{"exp": [1, 0], "coeff": Series}]}
//   CPoly     {"vars": [...], "terms": [{"exp": [...], "coeff": PolarC}]}
//   Section   "canonical" | {"generator": "1", "alpha": PolarC}
//   SimpleCoA {"rank": 3, "factors": [{"A": [[1,0,0]], "shift": [Phase], "coefficients": [PolarC]}]}

#include <string>

#include <nlohmann/json.hpp>

#include "phasetrop/nca.hpp"

namespace phasetrop::io {

using nlohmann::json;

Rat rat_from_json(const json& j);
json to_json(const Rat& r);

/// Text forms: "p/q" turns, "p/q pi" or "p/qpi" multiples of pi, "x.y rad" radians.
Phase parse_phase(const std::string& text);
/// Comma-separated phases.
PhaseVec parse_phase_list(const std::string& text);
/// Comma-separated rationals.
RatVec parse_rat_list(const std::string& text);
/// Rows separated by ';', entries by ','.
IntMatrix parse_matrix(const std::string& text);

Phase phase_from_json(const json& j);
json to_json(const Phase& p);
PhaseVec phases_from_json(const json& j);
json to_json(const PhaseVec& v);

PolarC polar_from_json(const json& j);
json to_json(const PolarC& c);

Series series_from_json(const json& j);
json to_json(const Series& s);

KPoly kpoly_from_json(const json& j);
json to_json(const KPoly& f);
CPoly cpoly_from_json(const json& j);
json to_json(const CPoly& g);

Section section_from_json(const json& j);
json to_json(const Section& s);

IntMatrix matrix_from_json(const json& j);
json to_json(const IntMatrix& m);
json to_json(const IntVec& v);
json to_json(const RatVec& v);

SimpleCoA coa_from_json(const json& j);
json to_json(const SimpleCoA& d);

Polyhedron polyhedron_from_json(const json& j, std::size_t ambient);
json to_json(const Polyhedron& p);

json to_json(const TropComplex& c);

/// {"rank", "polys": [KPoly], "faces": [{"equalities", "inequalities", "reductions"?}], "seed"?}
FixtureSpec fixture_from_json(const json& j);
TropModel load_fixture_model(const json& j, const Section& s);

/// Builds a model from any supported input: a fixture (has "faces"), a
/// pullback ({"phi": matrix, "factors": [KPoly]}) or a single KPoly.
TropModel model_from_json(const json& j, const Section& s);

json to_json(const TropModel& m);
json to_json(const DimensionReport& r);
json to_json(const SectionChangeReport& r);
json to_json(const LpWitness& w);

json read_json_file(const std::string& path);

}  // namespace phasetrop::io
