#include "phasetrop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "phasetrop/parallel.hpp"

namespace phasetrop {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr int kMaxRedraws = 1000;
constexpr double kResidualTolerance = 1e-6;

std::mt19937_64 stream(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

IntMatrix stacked_rows(const SimpleCoA& desc) {
  std::vector<IntVec> rows;
  for (const auto& f : desc.factors) {
    for (const auto& r : f.A.row_list()) rows.push_back(r);
  }
  return IntMatrix::from_rows(rows, desc.rank);
}

std::string describe(const std::vector<std::complex<double>>& y) {
  std::ostringstream out;
  out.precision(6);
  out << "(";
  for (std::size_t i = 0; i < y.size(); ++i) out << (i ? ", " : "") << y[i];
  out << ")";
  return out.str();
}

// One sampled complex point, or an empty theta after a failure of the generator.
struct ComplexDraw {
  PhaseVec theta;
  std::size_t branch = 0;
  std::size_t redraws = 0;
  std::string input;
};

ComplexDraw draw_complex(const SimpleCoA& desc, const SmithForm& snf, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> log_mod(-1.5, 1.5);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  ComplexDraw d;
  std::vector<std::complex<double>> y;
  for (const auto& f : desc.factors) {
    const std::size_t n = f.A.rows();
    std::vector<std::complex<double>> a;
    for (const auto& c : f.coefficients) a.push_back(c.to_complex());
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxRedraws) throw Error("hyperplane sampler keeps degenerating");
      std::vector<std::complex<double>> v(n);
      std::complex<double> rest = 1.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        v[i] = std::polar(std::exp(log_mod(rng)), angle(rng));
        rest += a[i] * v[i];
      }
      v[n - 1] = -rest / a[n - 1];
      if (std::abs(v[n - 1]) < 1e-6 || std::abs(v[n - 1]) > 1e6) {
        ++d.redraws;
        continue;
      }
      y.insert(y.end(), v.begin(), v.end());
      break;
    }
  }
  d.input = describe(y);

  // Solve B·θ ≡ arg y with U·B·V = D: θ = V·η, D·η ≡ U·arg y.
  const std::size_t r = snf.rank;
  const std::size_t N = desc.rank;
  std::vector<double> psi;
  for (const auto& v : y) psi.push_back(std::arg(v));
  std::vector<double> eta(N);
  std::size_t branch = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (i < r) {
      double rhs = 0.0;
      for (std::size_t k = 0; k < psi.size(); ++k) rhs += static_cast<double>(snf.U(i, k)) * psi[k];
      const std::int64_t di = snf.divisors[i];
      std::uniform_int_distribution<std::int64_t> pick(0, di - 1);
      const std::int64_t b = pick(rng);
      branch = branch * static_cast<std::size_t>(di) + static_cast<std::size_t>(b);
      eta[i] = (rhs + kTwoPi * static_cast<double>(b)) / static_cast<double>(di);
    } else {
      eta[i] = angle(rng);
    }
  }
  for (std::size_t c = 0; c < N; ++c) {
    double t = 0.0;
    for (std::size_t j = 0; j < N; ++j) t += static_cast<double>(snf.V(c, j)) * eta[j];
    d.theta.push_back(Phase::radians(t));
  }
  // The preimage must map back onto the sampled arguments.
  const IntMatrix B = stacked_rows(desc);
  const PhaseVec image = phasetrop::apply(B, d.theta);
  for (std::size_t k = 0; k < psi.size(); ++k) {
    if (image[k].distance(Phase::radians(psi[k])) > 1e-7) throw Error("preimage solve drifted from the sample");
  }
  d.branch = branch;
  return d;
}

// Series sampler for a polynomial linear in its last variable.
struct LinearSolver {
  const KPoly* f = nullptr;
  IntVec last_monomial;  // exponents of the other variables in the solved term
  Series last_coeff;
  std::int64_t last_power = 1;

  explicit LinearSolver(const KPoly& poly) : f(&poly) {
    const std::size_t n = poly.nvars();
    bool found = false;
    for (const auto& [m, c] : poly.terms()) {
      if (m[n - 1] == 0) continue;
      if (found) throw Error("cannot solve " + poly.to_string() + ": the last variable occurs in several terms");
      if (m[n - 1] != 1 && m[n - 1] != -1) {
        throw Error("cannot solve " + poly.to_string() + ": the last variable occurs with exponent " +
                    std::to_string(m[n - 1]));
      }
      found = true;
      last_monomial = m;
      last_monomial.pop_back();
      last_coeff = c;
      last_power = m[n - 1];
    }
    if (!found) throw Error("cannot solve " + poly.to_string() + ": the last variable does not occur");
  }

  static Series monomial(const std::vector<Series>& x, const IntVec& m, const Rat& order) {
    Series acc = Series::constant(PolarC::one());
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (m[j] != 0) acc = (acc * x[j].pow(m[j], order)).truncated(order);
    }
    return acc;
  }

  // The last coordinate given the others, or nullopt when it vanishes to the truncation order.
  std::optional<Series> solve(const std::vector<Series>& others, const Rat& order) const {
    const std::size_t n = f->nvars();
    Series rest;
    for (const auto& [m, c] : f->terms()) {
      if (m[n - 1] != 0) continue;
      rest += (c * monomial(others, IntVec(m.begin(), m.end() - 1), order)).truncated(order);
    }
    if (rest.is_zero()) return std::nullopt;
    const Series denom = (last_coeff * monomial(others, last_monomial, order)).truncated(order);
    Series value = Series::divide(-rest, denom, order);
    if (value.is_zero()) return std::nullopt;
    if (last_power == -1) value = Series::divide(Series::constant(PolarC::one()), value, order);
    return value;
  }
};

std::vector<Rat> exponent_menu(const KPointOptions& o, const Section& s) {
  std::vector<Rat> menu;
  for (int k = 0; k <= 4; ++k) {
    const Rat e = Rat(k, 2) * o.exponent_scale;
    if (s.defined_at(e) && e < o.trunc) menu.push_back(e);
  }
  if (menu.empty()) throw Error("no exponent of the sampling menu is usable with this section and truncation");
  return menu;
}

Series random_series(std::mt19937_64& rng, const std::vector<Rat>& menu, const Rat& order) {
  static const Rat moduli[] = {Rat(1), Rat(2), Rat(1, 2), Rat(3)};
  std::uniform_int_distribution<std::size_t> pick_exp(0, menu.size() - 1);
  std::uniform_int_distribution<int> pick_mod(0, 3);
  std::uniform_int_distribution<int> pick_turn(0, 11);
  std::uniform_int_distribution<int> pick_len(1, 2);
  for (;;) {
    std::vector<SeriesTerm> terms;
    const int len = pick_len(rng);
    for (int i = 0; i < len; ++i) {
      terms.push_back(
          {menu[pick_exp(rng)], PolarC::polar(moduli[pick_mod(rng)], Phase::turns(Rat(pick_turn(rng), 12)))});
    }
    // Two opposite terms at one exponent cancel; draw again.
    Series s = Series::from_terms(std::move(terms), order);
    if (!s.is_zero()) return s;
  }
}

struct KDraw {
  std::vector<Series> x;
  std::size_t branch = 0;
  std::size_t redraws = 0;
};

double max_modulus(const Series& s) {
  double m = 0.0;
  for (const auto& t : s.terms()) m = std::max(m, t.coeff.modulus());
  return m;
}

// f(x) vanishes to the truncation order, up to float error relative to the
// size of its individual terms. Roots of series amplify rounding in the
// highest known coefficients, hence the loose tolerance.
bool solves(const KPoly& f, const std::vector<Series>& x, const Rat& order) {
  double scale = 1.0;
  for (const auto& [m, c] : f.terms()) {
    KPoly term(f.vars());
    term.add_term(m, c);
    scale = std::max(scale, max_modulus(term.evaluate(x, order)));
  }
  return max_modulus(f.evaluate(x, order)) <= kResidualTolerance * scale;
}

bool usable(const Series& s, const Rat& order) {
  return !s.is_zero() && *s.valuation() < order;
}

std::optional<std::vector<Series>> draw_on_hyperplane(const KPoly& h, const LinearSolver& solver,
                                                      const std::vector<Rat>& menu, const Rat& order,
                                                      std::mt19937_64& rng) {
  std::vector<Series> x;
  for (std::size_t j = 0; j + 1 < h.nvars(); ++j) x.push_back(random_series(rng, menu, order));
  const auto last = solver.solve(x, order);
  if (!last || !usable(*last, order)) return std::nullopt;
  x.push_back(*last);
  return x;
}

KDraw draw_kpoint(const TropModel& model, const std::vector<LinearSolver>& solvers, const std::vector<Rat>& menu,
                  const KPointOptions& o, const SmithForm* snf, std::mt19937_64& rng) {
  KDraw d;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxRedraws) throw Error("field sampler keeps degenerating");
    if (model.source == ModelSource::Hypersurface) {
      auto x = draw_on_hyperplane(model.polys.front(), solvers.front(), menu, o.trunc, rng);
      if (!x) {
        ++d.redraws;
        continue;
      }
      d.x = std::move(*x);
      return d;
    }
    // Pullback: sample each factor, then solve x^phi = u through the Smith form.
    std::vector<Series> u;
    bool ok = true;
    for (std::size_t k = 0; k < model.factor_polys.size() && ok; ++k) {
      auto part = draw_on_hyperplane(model.factor_polys[k], solvers[k], menu, o.trunc, rng);
      if (!part) {
        ok = false;
        break;
      }
      u.insert(u.end(), part->begin(), part->end());
    }
    if (!ok) {
      ++d.redraws;
      continue;
    }
    const std::size_t N = model.rank;
    std::vector<Series> z(N);
    std::size_t branch = 0;
    for (std::size_t j = 0; j < N; ++j) {
      if (j < snf->rank) {
        Series target = Series::constant(PolarC::one());
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (snf->U(j, i) != 0) target = (target * u[i].pow(snf->U(j, i), o.trunc)).truncated(o.trunc);
        }
        const std::int64_t dj = snf->divisors[j];
        std::uniform_int_distribution<std::int64_t> pick(0, dj - 1);
        const std::int64_t b = pick(rng);
        branch = branch * static_cast<std::size_t>(dj) + static_cast<std::size_t>(b);
        z[j] = target.nth_root(dj, b, o.trunc);
      } else {
        z[j] = random_series(rng, menu, o.trunc);
      }
    }
    d.x.assign(N, Series::constant(PolarC::one()));
    for (std::size_t c = 0; c < N; ++c) {
      for (std::size_t j = 0; j < N; ++j) {
        if (snf->V(c, j) != 0) d.x[c] = (d.x[c] * z[j].pow(snf->V(c, j), o.trunc)).truncated(o.trunc);
      }
    }
    bool good = true;
    for (const auto& s : d.x) good = good && usable(s, o.trunc);
    if (!good) {
      ++d.redraws;
      continue;
    }
    d.branch = branch;
    return d;
  }
}

}  // namespace

SampleReport sample_complex(const SimpleCoA& desc, std::size_t count, std::uint64_t seed, unsigned threads) {
  desc.validate();
  for (const auto& f : desc.factors) {
    if (f.coefficients.empty()) throw Error("sampling needs a descriptor with explicit coefficients");
  }
  const SmithForm snf = smith_normal_form(stacked_rows(desc));
  std::size_t branches = 1;
  for (std::size_t i = 0; i < snf.rank; ++i) branches *= static_cast<std::size_t>(snf.divisors[i]);

  std::vector<ComplexDraw> draws(count);
  std::vector<char> member(count, 0);
  parallel_for(count, threads, [&](std::size_t i) {
    auto rng = stream(seed, i);
    draws[i] = draw_complex(desc, snf, rng);
    member[i] = closure_membership(desc, draws[i].theta);
  });

  SampleReport report;
  report.seed = seed;
  report.count = count;
  report.branch_counts.assign(branches, 0);
  for (std::size_t i = 0; i < count; ++i) {
    report.resampled += draws[i].redraws;
    ++report.branch_counts[draws[i].branch];
    if (!member[i]) report.failures.push_back({i, draws[i].input, {}, draws[i].theta, "closure_membership"});
  }
  return report;
}

SampleReport sample_kpoints(const TropModel& model, const KPointOptions& o) {
  if (model.source == ModelSource::Fixture) throw Error("field sampling needs a hypersurface or pullback model");
  std::vector<LinearSolver> solvers;
  std::optional<SmithForm> snf;
  if (model.source == ModelSource::Hypersurface) {
    solvers.emplace_back(model.polys.front());
  } else {
    for (const auto& h : model.factor_polys) solvers.emplace_back(h);
    snf = smith_normal_form(*model.phi);
  }
  const std::vector<Rat> menu = exponent_menu(o, model.section);
  std::size_t branches = 1;
  if (snf) {
    for (std::size_t i = 0; i < snf->rank; ++i) branches *= static_cast<std::size_t>(snf->divisors[i]);
  }

  struct Outcome {
    std::size_t redraws = 0;
    std::size_t branch = 0;
    RatVec w;
    PhaseVec theta;
    std::string input;
    std::string failed;
  };
  std::vector<Outcome> outcomes(o.count);
  parallel_for(o.count, o.threads, [&](std::size_t i) {
    auto rng = stream(o.seed, i);
    const KDraw d = draw_kpoint(model, solvers, menu, o, snf ? &*snf : nullptr, rng);
    Outcome& out = outcomes[i];
    out.redraws = d.redraws;
    out.branch = d.branch;
    for (const auto& s : d.x) {
      out.w.push_back(*s.valuation());
      out.theta.push_back(arg_section(s, model.section));
      out.input += (out.input.empty() ? "" : "; ") + s.to_string();
    }
    for (const auto& f : model.polys) {
      if (!solves(f, d.x, o.trunc)) {
        out.failed = "solution of " + f.to_string();
        return;
      }
    }
    if (!ptrop_membership(model, out.w, out.theta)) {
      out.failed = "ptrop_membership";
    } else if (!nca_membership(model, out.theta).member) {
      out.failed = "nca_membership";
    }
  });

  SampleReport report;
  report.seed = o.seed;
  report.count = o.count;
  report.branch_counts.assign(branches, 0);
  for (std::size_t i = 0; i < o.count; ++i) {
    const Outcome& out = outcomes[i];
    report.resampled += out.redraws;
    ++report.branch_counts[out.branch];
    if (!out.failed.empty()) report.failures.push_back({i, out.input, out.w, out.theta, out.failed});
  }
  return report;
}

SampleReport sample_kpoints(const KPoly& f, const Section& s, const KPointOptions& options) {
  return sample_kpoints(build_trop_model(f, s), options);
}

PhaseVec grid_point(std::size_t dim, std::size_t resolution, std::size_t index, const GridOptions& o) {
  PhaseVec out(dim);
  const auto res = static_cast<std::int64_t>(resolution);
  for (std::size_t k = dim; k-- > 0;) {
    const auto cell = static_cast<std::int64_t>(index % resolution);
    index /= resolution;
    out[k] = Phase::turns(o.lower + o.width * Rat(2 * cell + 1, 2 * res));
  }
  return out;
}

GridReport grid_compare(const PhasePredicate& a, const PhasePredicate& b, std::size_t dim, std::size_t resolution,
                        const GridOptions& o) {
  if (dim == 0 || resolution == 0) throw Error("grid needs a positive dimension and resolution");
  std::size_t per_slice = 1;
  for (std::size_t k = 1; k < dim; ++k) per_slice *= resolution;

  struct Slice {
    std::size_t evaluated = 0;
    std::size_t mismatches = 0;
    std::size_t excluded = 0;
    std::vector<PhaseVec> points;
  };
  std::vector<Slice> slices(resolution);
  parallel_for(resolution, o.threads, [&](std::size_t s) {
    Slice& out = slices[s];
    for (std::size_t k = 0; k < per_slice; ++k) {
      const PhaseVec theta = grid_point(dim, resolution, s * per_slice + k, o);
      if (o.boundary_distance && o.boundary_distance(theta) < o.band) {
        ++out.excluded;
        continue;
      }
      ++out.evaluated;
      if (a(theta) != b(theta)) {
        ++out.mismatches;
        if (out.points.size() < o.max_reported) out.points.push_back(theta);
      }
    }
  });

  GridReport report;
  report.resolution = resolution;
  report.dimension = dim;
  for (auto& s : slices) {
    report.evaluated += s.evaluated;
    report.mismatches += s.mismatches;
    report.excluded += s.excluded;
    for (auto& p : s.points) {
      if (report.mismatch_points.size() < o.max_reported) report.mismatch_points.push_back(std::move(p));
    }
  }
  return report;
}

double zonotope_boundary_distance(const SimpleCoA& desc, const PhaseVec& theta) {
  double best = std::numbers::pi;
  for (const auto& f : desc.factors) {
    const PhaseVec psi = phasetrop::apply(f.A, theta) + f.shift;
    std::vector<double> lifts{0.0};
    for (const auto& p : psi) lifts.push_back(p.lift_radians());
    for (std::size_t i = 0; i < lifts.size(); ++i) {
      best = std::min(best, std::numbers::pi - std::abs(lifts[i]));
      for (std::size_t j = i + 1; j < lifts.size(); ++j) {
        best = std::min(best, std::abs(std::numbers::pi - std::abs(lifts[i] - lifts[j])));
      }
    }
  }
  return best;
}

SimpleCoA random_hyperplane(std::mt19937_64& rng, std::size_t rank, std::int64_t den) {
  SimpleCoA d = SimpleCoA::standard(rank);
  auto& f = d.factors.front();
  f.shift = random_exact_phases(rng, rank, den);
  for (const auto& p : f.shift) f.coefficients.push_back(PolarC::polar(Rat(1), p));
  return d;
}

PhaseVec random_exact_phases(std::mt19937_64& rng, std::size_t n, std::int64_t den) {
  std::uniform_int_distribution<std::int64_t> pick(0, den - 1);
  PhaseVec out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Phase::turns(Rat(pick(rng), den)));
  return out;
}

PhasePredicate triangle_cover(const SimpleCoA& desc) {
  std::vector<SimpleCoA> pieces;
  for (auto& piece : phase_limit_pieces(desc)) {
    const bool triangles =
        std::all_of(piece.faces.begin(), piece.faces.end(), [](const auto& f) { return f.size() == 3; });
    if (triangles) pieces.push_back(std::move(piece.coa));
  }
  return [pieces = std::move(pieces)](const PhaseVec& theta) {
    return std::any_of(pieces.begin(), pieces.end(), [&](const SimpleCoA& p) { return closure_membership(p, theta); });
  };
}

}  // namespace phasetrop
