#include "phasetrop/coamoeba.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "phasetrop/lp.hpp"

namespace phasetrop {

namespace {

std::vector<std::string> torus_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

// Piecewise-linear image of a rational turn on the square |x| + |y| = 1.
// It commutes with the antipodal map and keeps cyclic order, which is all
// positive-cone feasibility depends on.
std::pair<Rat, Rat> diamond_point(const Rat& turns) {
  const Rat scaled = turns * Rat(4);
  const std::int64_t quadrant = arith::floor_div(scaled.num(), scaled.den());
  const Rat u = scaled - Rat(quadrant);
  Rat x = Rat(1) - u;
  Rat y = u;
  for (std::int64_t q = 0; q < quadrant; ++q) {
    const Rat nx = -y;
    y = x;
    x = nx;
  }
  return {x, y};
}

// max s subject to Σ r_i u_i = -(1, 0), r_i >= s, s <= 1.
template <class T>
LpResult<T> radius_lp(const std::vector<std::pair<T, T>>& dirs) {
  const std::size_t n = dirs.size();
  LinearProgram<T> lp(n + 1);
  std::vector<T> re(n + 1, T{});
  std::vector<T> im(n + 1, T{});
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = dirs[i].first;
    im[i] = dirs[i].second;
  }
  lp.add(re, Relation::Equal, T(-1));
  lp.add(im, Relation::Equal, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> row(n + 1, T{});
    row[i] = T(1);
    row[n] = T(-1);
    lp.add(row, Relation::GreaterEq, T(0));
  }
  std::vector<T> cap(n + 1, T{});
  cap[n] = T(1);
  lp.add(cap, Relation::LessEq, T(1));
  lp.objective = cap;
  return solve(lp);
}

std::vector<double> float_radii(const PhaseVec& psi) {
  std::vector<std::pair<double, double>> dirs;
  for (const auto& p : psi) dirs.emplace_back(std::cos(p.to_radians()), std::sin(p.to_radians()));
  const LpResult<double> res = radius_lp(dirs);
  if (res.status != LpStatus::Optimal || res.value < kLpRadiusFloor) return {};
  return {res.x.begin(), res.x.end() - 1};
}

// Strict LP test for the face F of the simplex {0, 1, ..., n} of the
// hyperplane 1 + Σ a_i y_i, at phases psi_i = arg a_i + arg y_i.
bool face_lp(const PhaseVec& psi, const std::vector<std::size_t>& face) {
  const std::size_t base = face.front();
  PhaseVec rel;
  for (std::size_t k = 1; k < face.size(); ++k) {
    const std::size_t i = face[k];
    rel.push_back(base == 0 ? psi[i - 1] : psi[i - 1] - psi[base - 1]);
  }
  return lp_witness(PhaseVec(rel.size()), rel).feasible;
}

// Subsets of {0..n} with at least two elements, in lexicographic bitmask order.
std::vector<std::vector<std::size_t>> simplex_faces(std::size_t n, bool include_full) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t full = (std::size_t{1} << (n + 1)) - 1;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (!include_full && mask == full) continue;
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i <= n; ++i) {
      if (mask & (std::size_t{1} << i)) face.push_back(i);
    }
    if (face.size() >= 2) out.push_back(std::move(face));
  }
  return out;
}

}  // namespace

SimpleCoA SimpleCoA::standard(std::size_t n) { return single(IntMatrix::identity(n), PhaseVec(n)); }

SimpleCoA SimpleCoA::single(const IntMatrix& A, const PhaseVec& shift) {
  SimpleCoA d;
  d.rank = A.cols();
  d.factors.push_back({A, shift, {}});
  d.validate();
  return d;
}

SimpleCoA SimpleCoA::from_system(const SimpleSystem& sys) {
  SimpleCoA d;
  d.rank = sys.rank;
  for (const auto& f : sys.forms) d.factors.push_back({f.A, f.shifts, f.coefficients});
  return d;
}

std::size_t SimpleCoA::total_rows() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.A.rows();
  return n;
}

void SimpleCoA::validate() const {
  std::vector<IntVec> rows;
  for (const auto& f : factors) {
    if (f.A.cols() != rank) throw Error("factor matrix width differs from the rank");
    if (f.A.rows() == 0) throw Error("factor without reduced support");
    if (f.shift.size() != f.A.rows()) throw Error("shift length differs from the factor's row count");
    if (!f.coefficients.empty() && f.coefficients.size() != f.A.rows()) {
      throw Error("coefficient count differs from the factor's row count");
    }
    for (const auto& r : f.A.row_list()) rows.push_back(r);
  }
  if (!rows.empty() && phasetrop::rank(IntMatrix::from_rows(rows, rank)) < rows.size()) {
    throw Error("factor rows are not jointly linearly independent");
  }
}

std::vector<CPoly> SimpleCoA::polynomials() const {
  std::vector<CPoly> out;
  for (const auto& f : factors) {
    CPoly g(torus_names(rank));
    g.add_term(IntVec(rank, 0), PolarC::one());
    for (std::size_t i = 0; i < f.A.rows(); ++i) {
      g.add_term(f.A.row(i), f.coefficients.empty() ? PolarC::polar(Rat(1), f.shift[i]) : f.coefficients[i]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

SimpleCoA SimpleCoA::translated(const PhaseVec& delta) const {
  SimpleCoA out = *this;
  for (auto& f : out.factors) {
    const PhaseVec move = phasetrop::apply(f.A, delta);
    f.shift = f.shift + move;
    for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
      f.coefficients[i] = f.coefficients[i] * PolarC::polar(Rat(1), move[i]);
    }
  }
  return out;
}

std::string SimpleCoA::to_string() const {
  std::string s = "rank " + std::to_string(rank) + ":";
  for (const auto& f : factors) s += " [A=" + f.A.to_string() + " shift=" + phasetrop::to_string(f.shift) + "]";
  return s;
}

bool in_open_zonotope(const PhaseVec& theta) {
  if (all_exact(theta)) {
    const Rat half(1, 2);
    Rat hi(0);
    Rat lo(0);
    for (const auto& p : theta) {
      const Rat l = p.exact_lift();
      if (l == half) return false;
      hi = std::max(hi, l);
      lo = std::min(lo, l);
    }
    return hi - lo < half;
  }
  const double limit = std::numbers::pi - kPhaseEpsilon;
  double hi = 0.0;
  double lo = 0.0;
  for (const auto& p : theta) {
    const double l = p.lift_radians();
    if (std::abs(l) >= limit) return false;
    hi = std::max(hi, l);
    lo = std::min(lo, l);
  }
  return hi - lo < limit;
}

bool closure_membership(const SimpleCoA& desc, const PhaseVec& theta) {
  if (theta.size() != desc.rank) throw Error("phase vector length differs from the rank");
  for (const auto& f : desc.factors) {
    if (in_open_zonotope(phasetrop::apply(f.A, theta) + f.shift)) return false;
  }
  return true;
}

LpWitness lp_witness(const PhaseVec& coeff_phases, const PhaseVec& theta) {
  if (coeff_phases.size() != theta.size()) throw Error("phase vector lengths differ");
  if (theta.empty()) throw Error("strict-membership LP needs at least one variable");
  const PhaseVec psi = theta + coeff_phases;
  LpWitness w;
  if (all_exact(psi)) {
    w.exact = true;
    std::vector<std::pair<Rat, Rat>> dirs;
    for (const auto& p : psi) dirs.push_back(diamond_point(p.exact_turns()));
    const LpResult<Rat> res = radius_lp(dirs);
    w.feasible = res.status == LpStatus::Optimal && res.value.sign() > 0;
    if (w.feasible) {
      w.model_radii.assign(res.x.begin(), res.x.end() - 1);
      w.radii = float_radii(psi);
    }
    return w;
  }
  w.radii = float_radii(psi);
  w.feasible = !w.radii.empty();
  return w;
}

std::vector<LimitPiece> phase_limit_pieces(const SimpleCoA& desc) {
  const std::vector<CPoly> polys = desc.polynomials();
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (const auto& f : desc.factors) choices.push_back(simplex_faces(f.A.rows(), true));

  std::vector<LimitPiece> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    bool all_full = true;
    std::vector<LinearCondition> eqs;
    std::vector<LinearCondition> ineqs;
    LimitPiece piece;
    piece.coa.rank = desc.rank;
    for (std::size_t k = 0; k < choices.size(); ++k) {
      const auto& face = choices[k][pick[k]];
      const IntMatrix& A = desc.factors[k].A;
      if (face.size() != A.rows() + 1) all_full = false;
      auto exponent = [&](std::size_t i) { return i == 0 ? IntVec(desc.rank, 0) : A.row(i - 1); };
      const IntVec base = exponent(face.front());
      std::vector<IntVec> kept;
      for (std::size_t i = 0; i <= A.rows(); ++i) {
        IntVec diff = exponent(i);
        for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= base[j];
        const bool in_face = std::find(face.begin(), face.end(), i) != face.end();
        if (in_face) {
          kept.push_back(exponent(i));
          if (i != face.front()) eqs.push_back({diff, Rat(0)});
        } else {
          ineqs.push_back({diff, Rat(0)});
        }
      }
      const MonicForm form = monic_reduced(restricted(polys[k], kept));
      piece.coa.factors.push_back({form.A, form.shifts,
                                   desc.factors[k].coefficients.empty() ? std::vector<PolarC>{} : form.coefficients});
      piece.faces.push_back(face);
    }
    if (!all_full) {
      piece.cone = Polyhedron(desc.rank, eqs, ineqs);
      out.push_back(std::move(piece));
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

bool closure_via_limit_lps(const SimpleCoA& desc, const PhaseVec& theta) {
  if (theta.size() != desc.rank) throw Error("phase vector length differs from the rank");
  for (const auto& f : desc.factors) {
    const PhaseVec psi = phasetrop::apply(f.A, theta) + f.shift;
    bool hit = false;
    for (const auto& face : simplex_faces(f.A.rows(), true)) {
      if (face_lp(psi, face)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::int64_t complement_component_count(const SimpleCoA& desc) {
  if (desc.factors.size() != 1) throw Error("component count needs a single-factor descriptor");
  return lattice_index(desc.factors.front().A.row_list());
}

int coa_dimension(const SimpleCoA& desc) {
  int dim = static_cast<int>(desc.rank) - static_cast<int>(desc.total_rows());
  for (const auto& f : desc.factors) {
    const int n = static_cast<int>(f.A.rows());
    dim += n >= 2 ? n : n - 1;
  }
  return dim;
}

}  // namespace phasetrop
