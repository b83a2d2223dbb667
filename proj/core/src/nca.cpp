#include "phasetrop/nca.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace phasetrop {

namespace {

std::vector<std::string> ambient_names(std::size_t n) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 3 ? small[i] : "x" + std::to_string(i + 1));
  return out;
}

std::vector<CPoly> reductions_at(const std::vector<KPoly>& polys, const RatVec& w, const Section& s) {
  std::vector<CPoly> out;
  for (const auto& f : polys) out.push_back(tropical_reduction(f, w, s));
  return out;
}

FaceModel face_model(std::vector<CPoly> reductions, std::size_t face) {
  FaceModel fm;
  try {
    fm.system = check_simple_system(reductions);
  } catch (const NotSimpleError& e) {
    throw NotTropicallySimpleError("not tropically simple: face " + std::to_string(face) + ": " + e.what(), face,
                                   e.dependent);
  }
  fm.coa = SimpleCoA::from_system(fm.system);
  fm.reductions = std::move(reductions);
  return fm;
}

void fill_faces(TropModel& m) {
  m.faces.clear();
  for (std::size_t i = 0; i < m.complex.size(); ++i) {
    m.faces.push_back(face_model(reductions_at(m.polys, m.complex.face(i).poly.relint_point(), m.section), i));
  }
}

// Common refinement of complexes on the same space: every nonempty
// intersection whose relative interior sits in the relative interiors of the
// chosen faces.
TropComplex refine(const std::vector<TropComplex>& parts, std::size_t ambient) {
  TropComplex out(ambient);
  std::vector<std::size_t> pick;
  std::function<void(const Polyhedron&)> walk = [&](const Polyhedron& acc) {
    const std::size_t k = pick.size();
    if (k == parts.size()) {
      const RatVec& p = acc.relint_point();
      ArgminSets argmin;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (!parts[j].face(pick[j]).poly.in_relint(p)) return;
        const auto& sets = parts[j].face(pick[j]).argmin;
        argmin.insert(argmin.end(), sets.begin(), sets.end());
      }
      out.add_face(acc, std::move(argmin));
      return;
    }
    for (std::size_t i = 0; i < parts[k].size(); ++i) {
      const Polyhedron next = acc.intersect(parts[k].face(i).poly);
      if (next.is_empty()) continue;
      pick.push_back(i);
      walk(next);
      pick.pop_back();
    }
  };
  walk(Polyhedron(ambient));
  return out;
}

// Step g with both sections defined on g·ℤ, or nullopt when both are canonical.
std::optional<Rat> common_step(const Section& a, const Section& b) {
  if (a.is_canonical() && b.is_canonical()) return std::nullopt;
  if (a.is_canonical()) return b.generator();
  if (b.is_canonical()) return a.generator();
  const Rat& x = a.generator();
  const Rat& y = b.generator();
  const std::int64_t num = std::lcm(x.num(), y.num());
  const std::int64_t den = std::gcd(x.den(), y.den());
  return Rat(num, den);
}

std::vector<PolarC> section_ratio(const Section& from, const Section& to, const RatVec& w) {
  std::vector<PolarC> out;
  for (const auto& c : w) out.push_back(to.alpha_at(c) / from.alpha_at(c));
  return out;
}

PhaseVec phases(const std::vector<PolarC>& v) {
  PhaseVec out;
  for (const auto& c : v) out.push_back(c.phase());
  return out;
}

}  // namespace

std::string to_string(ModelSource s) {
  switch (s) {
    case ModelSource::Hypersurface:
      return "hypersurface";
    case ModelSource::Pullback:
      return "pullback";
    case ModelSource::Fixture:
      return "fixture";
  }
  return "unknown";
}

TropModel build_trop_model(const KPoly& f, const Section& s) {
  if (f.terms().size() < 2) throw Error("a hypersurface model needs at least two terms");
  TropModel m;
  m.rank = f.nvars();
  m.source = ModelSource::Hypersurface;
  m.polys = {f};
  m.complex = trop_complex(f);
  m.section = s;
  fill_faces(m);
  return m;
}

TropModel build_pullback_model(const IntMatrix& phi, const std::vector<KPoly>& hyperplanes, const Section& s) {
  if (hyperplanes.empty()) throw Error("a pullback model needs at least one hyperplane");
  std::size_t rows = 0;
  for (const auto& h : hyperplanes) rows += h.nvars();
  if (phi.rows() != rows) throw Error("map has " + std::to_string(phi.rows()) + " rows but the factors have " +
                                      std::to_string(rows) + " variables");
  if (rank(phi) != rows) throw Error("map is not surjective: its rows are linearly dependent");

  TropModel m;
  m.rank = phi.cols();
  m.source = ModelSource::Pullback;
  m.phi = phi;
  m.factor_polys = hyperplanes;
  m.section = s;

  std::size_t offset = 0;
  for (const auto& h : hyperplanes) {
    if (h.terms().size() < 2) throw Error("hyperplane factor with fewer than two terms");
    const auto support = h.support();
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < support.size(); ++i) {
      IntVec d(h.nvars());
      for (std::size_t j = 0; j < d.size(); ++j) d[j] = support[i][j] - support[0][j];
      diffs.push_back(d);
    }
    if (rank(IntMatrix::from_rows(diffs, h.nvars())) != diffs.size()) {
      throw Error("factor " + h.to_string() + " is not a hyperplane: its support is affinely dependent");
    }
    KPoly pulled(ambient_names(m.rank));
    for (const auto& [exp, coeff] : h.terms()) {
      IntVec e(m.rank, 0);
      for (std::size_t j = 0; j < exp.size(); ++j) {
        for (std::size_t c = 0; c < m.rank; ++c) e[c] += exp[j] * phi(offset + j, c);
      }
      pulled.add_term(e, coeff);
    }
    m.polys.push_back(std::move(pulled));
    offset += h.nvars();
  }

  if (m.polys.size() == 1) {
    m.complex = trop_complex(m.polys.front());
  } else {
    std::vector<TropComplex> parts;
    for (const auto& p : m.polys) parts.push_back(trop_complex(p));
    m.complex = refine(parts, m.rank);
  }
  fill_faces(m);
  return m;
}

TropModel build_fixture_model(const FixtureSpec& input, const Section& s) {
  if (input.polys.empty()) throw Error("fixture without polynomials");
  for (const auto& p : input.polys) {
    if (p.nvars() != input.rank) throw Error("fixture polynomial over the wrong number of variables");
  }
  TropModel m;
  m.rank = input.rank;
  m.source = ModelSource::Fixture;
  m.polys = input.polys;
  m.section = s;
  m.complex = TropComplex(input.rank);

  for (std::size_t i = 0; i < input.faces.size(); ++i) {
    const Polyhedron& poly = input.faces[i].poly;
    if (poly.is_empty()) throw ValidationError("face " + std::to_string(i) + " is empty", i, "tropical");
    ArgminSets argmin;
    for (const auto& f : input.polys) {
      argmin.push_back(argmin_support(f, poly.relint_point()));
      if (argmin.back().size() < 2) {
        throw ValidationError("face " + std::to_string(i) + " is not in the tropical variety of " + f.to_string(), i,
                              "tropical");
      }
    }
    m.complex.add_face(poly, std::move(argmin));
  }

  for (std::size_t i = 0; i < input.faces.size(); ++i) {
    std::vector<CPoly> reds = input.faces[i].declared ? *input.faces[i].declared
                                                      : reductions_at(input.polys, m.complex.face(i).poly.relint_point(), s);
    if (reds.size() != input.polys.size()) {
      throw ValidationError("face " + std::to_string(i) + " declares the wrong number of reductions", i, "simple");
    }
    try {
      m.faces.push_back(face_model(std::move(reds), i));
    } catch (const NotTropicallySimpleError& e) {
      throw ValidationError(e.what(), i, "simple");
    }
  }

  for (const std::size_t low : m.complex.minimal_faces()) {
    const RatVec& base = m.complex.face(low).poly.relint_point();
    for (const std::size_t high : m.complex.superfaces(low)) {
      RatVec dir = m.complex.face(high).poly.relint_point();
      for (std::size_t j = 0; j < dir.size(); ++j) dir[j] -= base[j];
      for (std::size_t k = 0; k < input.polys.size(); ++k) {
        const CPoly expected = initial_form(m.faces[low].reductions[k], dir);
        if (!equal_up_to_scalar(expected, m.faces[high].reductions[k])) {
          throw ValidationError("face " + std::to_string(high) + ": reduction " +
                                    m.faces[high].reductions[k].to_string() +
                                    " is not the initial form of minimal face " + std::to_string(low) +
                                    "'s reduction, expected " + expected.to_string(),
                                high, "initial");
        }
      }
    }
  }

  std::mt19937_64 rng(input.seed);
  for (std::size_t i = 0; i < m.complex.size(); ++i) {
    for (int sample = 0; sample < 5; ++sample) {
      const RatVec w = m.complex.face(i).poly.random_relint_point(rng);
      const std::vector<CPoly> reds = reductions_at(input.polys, w, s);
      for (std::size_t k = 0; k < reds.size(); ++k) {
        if (!equal_up_to_scalar(reds[k], m.faces[i].reductions[k])) {
          throw ValidationError("face " + std::to_string(i) + ": reduction at " + to_string(w) + " is " +
                                    reds[k].to_string() + ", not " + m.faces[i].reductions[k].to_string(),
                                i, "constant");
        }
      }
    }
  }
  return m;
}

NcaResult nca_membership(const TropModel& model, const PhaseVec& theta) {
  for (const std::size_t i : model.minimal_faces()) {
    if (closure_membership(model.faces[i].coa, theta)) return {true, i};
  }
  return {false, std::nullopt};
}

bool ptrop_membership(const TropModel& model, const RatVec& w, const PhaseVec& theta) {
  if (w.size() != model.rank) throw Error("weight dimension mismatch");
  const auto face = model.complex.locate(w);
  if (!face) return false;
  return closure_membership(model.faces[*face].coa, theta);
}

DimensionReport piece_dimensions(const TropModel& model) {
  DimensionReport r;
  r.variety_dim = model.dimension();
  for (std::size_t i = 0; i < model.complex.size(); ++i) {
    const PieceDimension p{i, model.complex.face(i).dim, coa_dimension(model.faces[i].coa)};
    r.max_total = std::max(r.max_total, p.total());
    r.pieces.push_back(p);
    for (const auto& f : model.faces[i].coa.factors) {
      if (f.A.rows() >= 2) r.has_nonbinomial_face = true;
    }
  }
  for (const std::size_t i : model.minimal_faces()) {
    r.nca_pieces.push_back(r.pieces[i]);
    r.max_nca = std::max(r.max_nca, r.pieces[i].coa_dim);
  }
  return r;
}

bool SectionChangeReport::ok() const {
  auto all = [](const std::vector<std::pair<std::size_t, bool>>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& p) { return p.second; });
  };
  return matches_direct && all(well_defined) && all(coset_checks);
}

std::optional<RatVec> lattice_point(const Polyhedron& face, const Rat& step) {
  if (face.is_empty()) return std::nullopt;
  if (!face.inequalities().empty()) throw Error("minimal face is not an affine subspace: " + face.to_string());
  std::vector<IntVec> rows;
  RatVec rhs;
  for (const auto& e : face.equalities()) {
    rows.push_back(e.normal);
    rhs.push_back(e.rhs / step);
  }
  if (rows.empty()) return RatVec(face.ambient(), Rat(0));
  const auto k = integer_solve(IntMatrix::from_rows(rows, face.ambient()), rhs);
  if (!k) return std::nullopt;
  RatVec w;
  for (const auto v : *k) w.push_back(step * Rat(v));
  return w;
}

TropModel rebuild_under(const TropModel& model, const Section& s) {
  TropModel out = model;
  out.section = s;
  fill_faces(out);
  return out;
}

std::pair<TropModel, SectionChangeReport> apply_section_change(const TropModel& model, const Section& next) {
  SectionChangeReport report;
  const std::optional<Rat> step = common_step(model.section, next);
  const auto minimal = model.minimal_faces();

  std::vector<std::vector<PolarC>> ratio(model.complex.size());
  for (const std::size_t i : minimal) {
    const Face& face = model.complex.face(i);
    RatVec w = face.poly.relint_point();
    if (step) {
      const auto p = lattice_point(face.poly, *step);
      if (!p) {
        throw Error("section undefined on minimal face " + std::to_string(i) + ": no point with coordinates in " +
                    step->to_string() + "Z");
      }
      w = *p;
    }
    ratio[i] = section_ratio(model.section, next, w);
    const PhaseVec a = phases(ratio[i]);
    report.translations.emplace_back(i, a);

    bool same_coset = true;
    if (!face.lattice.empty()) {
      RatVec w2 = w;
      const Rat unit = step ? *step : Rat(1);
      for (std::size_t j = 0; j < w2.size(); ++j) w2[j] += unit * Rat(face.lattice.front()[j]);
      same_coset = subtorus_contains(face.lattice, phases(section_ratio(model.section, next, w2)) - a);
    }
    report.well_defined.emplace_back(i, same_coset);
  }

  TropModel out = model;
  out.section = next;
  for (std::size_t r = 0; r < model.complex.size(); ++r) {
    std::vector<std::size_t> below;
    for (const std::size_t i : minimal) {
      if (i == r || model.complex.face(r).poly.contains(model.complex.face(i).poly.relint_point())) below.push_back(i);
    }
    if (below.empty()) throw Error("face " + std::to_string(r) + " contains no minimal face");
    bool coset = true;
    for (std::size_t k = 1; k < below.size(); ++k) {
      coset = coset && subtorus_contains(model.complex.face(r).lattice,
                                         phases(ratio[below[k]]) - phases(ratio[below.front()]));
    }
    report.coset_checks.emplace_back(r, coset);

    std::vector<CPoly> moved;
    for (const auto& g : model.faces[r].reductions) moved.push_back(g.substituted(ratio[below.front()]));
    out.faces[r] = face_model(std::move(moved), r);
  }

  const TropModel direct = rebuild_under(model, next);
  report.matches_direct = true;
  for (std::size_t r = 0; r < out.faces.size() && report.matches_direct; ++r) {
    if (!(out.faces[r].coa == direct.faces[r].coa)) report.matches_direct = false;
    for (std::size_t k = 0; k < out.faces[r].reductions.size(); ++k) {
      if (!equal_up_to_scalar(out.faces[r].reductions[k], direct.faces[r].reductions[k])) {
        report.matches_direct = false;
      }
    }
  }
  return {std::move(out), std::move(report)};
}

}  // namespace phasetrop
