// Command-line front end: queries print JSON on stdout, verifications print a
// summary. Exit codes: 0 pass or member, 2 not a member, 1 failure or error.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "phasetrop/phasetrop.hpp"

using namespace phasetrop;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kNotMember = 2;

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

Section load_section(const std::string& path) {
  if (path.empty()) return Section::canonical();
  return io::section_from_json(io::read_json_file(path));
}

json phases_json(const PhaseVec& v) { return io::to_json(v); }

int membership_exit(bool member) { return member ? kPass : kNotMember; }

json grid_json(const GridReport& r) {
  json pts = json::array();
  for (const auto& p : r.mismatch_points) pts.push_back(to_string(p));
  return {{"resolution", r.resolution},     {"dimension", r.dimension}, {"evaluated", r.evaluated},
          {"mismatches", r.mismatches},     {"excluded", r.excluded},   {"mismatch_points", pts}};
}

json sample_json(const SampleReport& r) {
  json fails = json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) {
    const auto& f = r.failures[i];
    json entry = {{"index", f.index}, {"input", f.input}, {"theta", to_string(f.theta)}, {"expected", f.expected}};
    if (!f.w.empty()) entry["w"] = to_string(f.w);
    fails.push_back(entry);
  }
  return {{"count", r.count},
          {"resampled", r.resampled},
          {"seed", r.seed},
          {"failures", r.failures.size()},
          {"first_failures", fails},
          {"branch_counts", r.branch_counts}};
}

struct VerifyOptions {
  std::size_t res = 0;
  std::size_t count = 0;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string input;
  std::string trunc = "6";
  std::string scale = "1";
};

int verify_limit_pieces(const VerifyOptions& o) {
  const std::size_t res = o.res ? o.res : 256;
  const std::size_t count = o.count ? o.count : 10000;
  const SimpleCoA line = SimpleCoA::standard(2);
  GridOptions g;
  g.threads = o.threads;
  const GridReport grid = grid_compare([&](const PhaseVec& t) { return closure_membership(line, t); },
                                       [&](const PhaseVec& t) { return closure_via_limit_lps(line, t); }, 2, res, g);
  std::size_t mismatches = grid.mismatches;
  json randoms = json::array();
  std::mt19937_64 rng(o.seed);
  for (int h = 0; h < 20; ++h) {
    const std::size_t rank = h % 2 == 0 ? 2 : 3;
    const SimpleCoA d = random_hyperplane(rng, rank, 24);
    std::vector<PhaseVec> points;
    for (std::size_t i = 0; i < count; ++i) points.push_back(random_exact_phases(rng, rank, 60));
    std::vector<char> bad(count, 0);
    parallel_for(count, o.threads, [&](std::size_t i) {
      bad[i] = closure_membership(d, points[i]) != closure_via_limit_lps(d, points[i]);
    });
    const auto m = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
    mismatches += m;
    randoms.push_back({{"terms", rank + 1}, {"shift", phases_json(d.factors.front().shift)}, {"mismatches", m}});
  }
  print({{"grid", grid_json(grid)}, {"random_hyperplanes", randoms}, {"total_mismatches", mismatches}});
  return mismatches == 0 ? kPass : kFail;
}

int verify_ridges(const VerifyOptions& o) {
  const std::size_t res = o.res ? o.res : 64;
  const SimpleCoA plane = SimpleCoA::standard(3);
  GridOptions g;
  g.threads = o.threads;
  const GridReport r = grid_compare([&](const PhaseVec& t) { return !in_open_zonotope(t); }, triangle_cover(plane), 3,
                                    res, g);
  print(grid_json(r));
  return r.mismatches == 0 ? kPass : kFail;
}

int verify_samples(const VerifyOptions& o) {
  const std::size_t count = o.count ? o.count : 10000;
  std::vector<std::pair<std::string, SimpleCoA>> cases;
  if (!o.input.empty()) {
    cases.emplace_back(o.input, io::coa_from_json(io::read_json_file(o.input)));
  } else {
    cases.emplace_back("standard line", SimpleCoA::standard(2));
    cases.emplace_back("curve 1+x^2y+xy^2", SimpleCoA::single(IntMatrix::from_rows({{2, 1}, {1, 2}}), PhaseVec(2)));
    cases.emplace_back("standard plane", SimpleCoA::standard(3));
    for (auto& [name, d] : cases) d.factors.front().coefficients.assign(d.factors.front().A.rows(), PolarC::one());
  }
  json out = json::array();
  bool ok = true;
  for (const auto& [name, d] : cases) {
    const SampleReport r = sample_complex(d, count, o.seed, o.threads);
    ok = ok && r.passed();
    json entry = sample_json(r);
    entry["input"] = name;
    out.push_back(entry);
  }
  print(out);
  return ok ? kPass : kFail;
}

int verify_kpoints(const VerifyOptions& o, const Section& s) {
  KPointOptions k;
  k.count = o.count ? o.count : 10000;
  k.seed = o.seed;
  k.threads = o.threads;
  k.trunc = Rat::parse(o.trunc);
  k.exponent_scale = Rat::parse(o.scale);
  std::vector<std::pair<std::string, TropModel>> cases;
  if (!o.input.empty()) {
    cases.emplace_back(o.input, io::model_from_json(io::read_json_file(o.input), s));
  } else {
    KPoly line({"x", "y"});
    line.add_term({1, 0}, Series::constant(PolarC::one()));
    line.add_term({0, 1}, Series::constant(PolarC::one()));
    line.add_term({0, 0}, Series::monomial(PolarC::one(), Rat(1)));
    KPoly factor({"u", "v"});
    factor.add_term({1, 0}, Series::constant(PolarC::one()));
    factor.add_term({0, 1}, Series::constant(PolarC::one()));
    factor.add_term({0, 0}, Series::monomial(PolarC::one(), Rat(1)));
    cases.emplace_back("x+y+t", build_trop_model(line, s));
    cases.emplace_back("pullback of u+v+t along [[2,1],[1,2]]",
                       build_pullback_model(IntMatrix::from_rows({{2, 1}, {1, 2}}), {factor}, s));
  }
  json out = json::array();
  bool ok = true;
  for (const auto& [name, m] : cases) {
    const SampleReport r = sample_kpoints(m, k);
    ok = ok && r.passed();
    json entry = sample_json(r);
    entry["input"] = name;
    out.push_back(entry);
  }
  print(out);
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase tropical varieties: tropical complexes, coamoebae and their verification"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware)");

  int code = kPass;

  // trop
  std::string poly_path;
  auto* trop = app.add_subcommand("trop", "Tropical hypersurface of a polynomial over the series field");
  trop->add_option("poly", poly_path, "KPoly JSON")->required()->check(CLI::ExistingFile);
  trop->callback([&] { print(io::to_json(trop_complex(io::kpoly_from_json(io::read_json_file(poly_path))))); });

  // reduce
  std::string w_text;
  std::string section_path;
  auto* reduce = app.add_subcommand("reduce", "Tropical reduction at a weight");
  reduce->add_option("poly", poly_path, "KPoly JSON")->required()->check(CLI::ExistingFile);
  reduce->add_option("--w", w_text, "Weight, e.g. 1,1")->required();
  reduce->add_option("--section", section_path, "Section JSON")->check(CLI::ExistingFile);
  reduce->callback([&] {
    const KPoly f = io::kpoly_from_json(io::read_json_file(poly_path));
    const RatVec w = io::parse_rat_list(w_text);
    const CPoly g = tropical_reduction(f, w, load_section(section_path));
    print({{"w", io::to_json(w)}, {"in_trop", is_in_trop(f, w)}, {"reduction", io::to_json(g)}});
  });

  // initial
  auto* initial = app.add_subcommand("initial", "Initial form of a complex polynomial");
  initial->add_option("poly", poly_path, "CPoly JSON")->required()->check(CLI::ExistingFile);
  initial->add_option("--w", w_text, "Direction, e.g. 1,0")->required();
  initial->callback([&] {
    const CPoly g = io::cpoly_from_json(io::read_json_file(poly_path));
    print(io::to_json(initial_form(g, io::parse_rat_list(w_text))));
  });

  // coamoeba
  std::string desc_path;
  std::string theta_text;
  auto* coa = app.add_subcommand("coamoeba", "Queries on simple coamoeba descriptors");
  coa->require_subcommand(1);
  auto* coa_member = coa->add_subcommand("member", "Closure membership, with an LP witness for hyperplanes");
  coa_member->add_option("desc", desc_path, "Descriptor JSON")->required()->check(CLI::ExistingFile);
  coa_member->add_option("--theta", theta_text, "Phases, e.g. 2/3pi,-2/3pi")->required();
  coa_member->callback([&] {
    const SimpleCoA d = io::coa_from_json(io::read_json_file(desc_path));
    const PhaseVec theta = io::parse_phase_list(theta_text);
    const bool member = closure_membership(d, theta);
    json out = {{"theta", phases_json(theta)}, {"member", member}};
    if (d.factors.size() == 1 && d.factors.front().A == IntMatrix::identity(d.rank)) {
      out["lp"] = io::to_json(lp_witness(d.factors.front().shift, theta));
      out["via_limit_lps"] = closure_via_limit_lps(d, theta);
    }
    print(out);
    code = membership_exit(member);
  });
  auto* coa_count = coa->add_subcommand("count", "Complement components of a single-factor coamoeba");
  coa_count->add_option("desc", desc_path, "Descriptor JSON")->required()->check(CLI::ExistingFile);
  coa_count->callback([&] {
    print({{"components", complement_component_count(io::coa_from_json(io::read_json_file(desc_path)))}});
  });
  auto* coa_dim = coa->add_subcommand("dim", "Dimension of the coamoeba closure");
  coa_dim->add_option("desc", desc_path, "Descriptor JSON")->required()->check(CLI::ExistingFile);
  coa_dim->callback(
      [&] { print({{"dimension", coa_dimension(io::coa_from_json(io::read_json_file(desc_path)))}}); });
  auto* coa_pieces = coa->add_subcommand("pieces", "Phase limit pieces with their cones");
  coa_pieces->add_option("desc", desc_path, "Descriptor JSON")->required()->check(CLI::ExistingFile);
  coa_pieces->callback([&] {
    json out = json::array();
    for (const auto& p : phase_limit_pieces(io::coa_from_json(io::read_json_file(desc_path)))) {
      out.push_back({{"cone", io::to_json(p.cone)}, {"faces", p.faces}, {"descriptor", io::to_json(p.coa)}});
    }
    print(out);
  });

  // nca
  std::string model_path;
  std::string from_path;
  auto* nca = app.add_subcommand("nca", "Non-archimedean coamoeba models");
  nca->require_subcommand(1);
  auto* nca_build = nca->add_subcommand("build", "Build and validate a model, with its dimension report");
  nca_build->add_option("model", model_path, "KPoly, pullback or fixture JSON")->required()->check(CLI::ExistingFile);
  nca_build->add_option("--section", section_path, "Section JSON")->check(CLI::ExistingFile);
  nca_build->callback([&] {
    const TropModel m = io::model_from_json(io::read_json_file(model_path), load_section(section_path));
    print({{"model", io::to_json(m)}, {"dimensions", io::to_json(piece_dimensions(m))}});
  });
  auto* nca_member = nca->add_subcommand("member", "Membership in the non-archimedean coamoeba");
  nca_member->add_option("model", model_path, "Model JSON")->required()->check(CLI::ExistingFile);
  nca_member->add_option("--theta", theta_text, "Phases")->required();
  nca_member->add_option("--section", section_path, "Section JSON")->check(CLI::ExistingFile);
  nca_member->callback([&] {
    const TropModel m = io::model_from_json(io::read_json_file(model_path), load_section(section_path));
    const PhaseVec theta = io::parse_phase_list(theta_text);
    const NcaResult r = nca_membership(m, theta);
    json out = {{"theta", phases_json(theta)}, {"member", r.member}};
    if (r.witness) {
      out["witness_face"] = *r.witness;
      out["witness_point"] = io::to_json(m.complex.face(*r.witness).poly.relint_point());
    }
    print(out);
    code = membership_exit(r.member);
  });
  auto* nca_change = nca->add_subcommand("change", "Change the section and check the translation cosets");
  nca_change->add_option("model", model_path, "Model JSON")->required()->check(CLI::ExistingFile);
  nca_change->add_option("--section", section_path, "New section JSON")->required()->check(CLI::ExistingFile);
  nca_change->add_option("--from", from_path, "Original section JSON (default canonical)")->check(CLI::ExistingFile);
  nca_change->callback([&] {
    const TropModel m = io::model_from_json(io::read_json_file(model_path), load_section(from_path));
    const auto [moved, report] = apply_section_change(m, load_section(section_path));
    print({{"report", io::to_json(report)}, {"model", io::to_json(moved)}});
    code = report.ok() ? kPass : kFail;
  });

  // ptrop
  auto* ptrop = app.add_subcommand("ptrop", "Phase tropical variety queries");
  ptrop->require_subcommand(1);
  auto* ptrop_member = ptrop->add_subcommand("member", "Membership of (w, theta)");
  ptrop_member->add_option("model", model_path, "Model JSON")->required()->check(CLI::ExistingFile);
  ptrop_member->add_option("--w", w_text, "Weight")->required();
  ptrop_member->add_option("--theta", theta_text, "Phases")->required();
  ptrop_member->add_option("--section", section_path, "Section JSON")->check(CLI::ExistingFile);
  ptrop_member->callback([&] {
    const TropModel m = io::model_from_json(io::read_json_file(model_path), load_section(section_path));
    const RatVec w = io::parse_rat_list(w_text);
    const PhaseVec theta = io::parse_phase_list(theta_text);
    const bool member = ptrop_membership(m, w, theta);
    json out = {{"w", io::to_json(w)}, {"theta", phases_json(theta)}, {"member", member}};
    if (const auto face = m.complex.locate(w)) out["face"] = *face;
    print(out);
    code = membership_exit(member);
  });

  // nvol
  std::string matrix_text;
  auto* nvol = app.add_subcommand("nvol", "Index of the span of the rows in its saturation");
  nvol->add_option("--matrix", matrix_text, "Rows separated by ';', e.g. 2,1;1,2")->required();
  nvol->callback([&] {
    const IntMatrix a = io::parse_matrix(matrix_text);
    print({{"matrix", io::to_json(a)}, {"index", lattice_index(a.row_list())}});
  });

  // verify
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run an equivalence or sampling check");
  verify->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--res", vo.res, "Grid resolution per axis");
    sub->add_option("--count", vo.count, "Number of random points");
    sub->add_option("--seed", vo.seed, "Random seed");
  };
  auto* v_limit = verify->add_subcommand("prop6", "Zonotope complement against the union of limit LPs");
  add_common(v_limit);
  v_limit->callback([&] {
    vo.threads = threads;
    code = verify_limit_pieces(vo);
  });
  auto* v_ridges = verify->add_subcommand("ridges", "1+x+y+z against its triangle cylinders");
  add_common(v_ridges);
  v_ridges->callback([&] {
    vo.threads = threads;
    code = verify_ridges(vo);
  });
  auto* v_samples = verify->add_subcommand("samples", "Complex sampling oracle");
  add_common(v_samples);
  v_samples->add_option("--desc", vo.input, "Descriptor JSON with coefficients")->check(CLI::ExistingFile);
  v_samples->callback([&] {
    vo.threads = threads;
    code = verify_samples(vo);
  });
  auto* v_kpoints = verify->add_subcommand("kpoints", "Series-field sampling oracle");
  add_common(v_kpoints);
  v_kpoints->add_option("--model", vo.input, "Hypersurface or pullback JSON")->check(CLI::ExistingFile);
  v_kpoints->add_option("--trunc", vo.trunc, "Series truncation order");
  v_kpoints->add_option("--scale", vo.scale, "Exponent menu scale");
  v_kpoints->add_option("--section", section_path, "Section JSON")->check(CLI::ExistingFile);
  v_kpoints->callback([&] {
    vo.threads = threads;
    code = verify_kpoints(vo, load_section(section_path));
  });

  // render
  std::string out_path;
  std::string slice_text;
  RenderOptions ro;
  auto* render = app.add_subcommand("render", "SVG picture of a coamoeba over the fundamental domain");
  render->add_option("--out", out_path, "Output SVG path")->required();
  auto* render_desc = render->add_option("--desc", desc_path, "Descriptor JSON")->check(CLI::ExistingFile);
  auto* render_model =
      render->add_option("--model", model_path, "Model JSON (draws the non-archimedean coamoeba)")->check(CLI::ExistingFile);
  render_desc->excludes(render_model);
  render->add_option("--res", ro.resolution, "Pixels per axis");
  render->add_option("--slice", slice_text, "Third phase for rank-3 inputs");
  render->add_option("--section", section_path, "Section JSON")->check(CLI::ExistingFile);
  render->callback([&] {
    ro.threads = threads;
    if (!slice_text.empty()) ro.slice = io::parse_phase(slice_text);
    PhasePredicate pred;
    std::size_t rank = 2;
    if (!model_path.empty()) {
      auto m = std::make_shared<TropModel>(io::model_from_json(io::read_json_file(model_path), load_section(section_path)));
      rank = m->rank;
      pred = [m](const PhaseVec& t) { return nca_membership(*m, t).member; };
      ro.title = "non-archimedean coamoeba of " + model_path;
    } else {
      const SimpleCoA d = desc_path.empty() ? SimpleCoA::standard(2) : io::coa_from_json(io::read_json_file(desc_path));
      rank = d.rank;
      pred = [d](const PhaseVec& t) { return closure_membership(d, t); };
      ro.title = "coamoeba closure of " + (desc_path.empty() ? std::string("1+x+y") : desc_path);
    }
    write_text_file(out_path, render_svg(pred, rank, ro));
    print({{"out", out_path}, {"resolution", ro.resolution}, {"rank", rank}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ValidationError& e) {
    print({{"error", e.what()}, {"face", e.face}, {"property", e.property}});
    return kFail;
  } catch (const NotTropicallySimpleError& e) {
    print({{"error", e.what()}, {"face", e.face}, {"dependent", e.dependent}});
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return code;
}
