#include "phasetrop/polyhedron.hpp"

#include <algorithm>
#include <sstream>

#include "phasetrop/lp.hpp"

namespace phasetrop {

namespace {

struct RatRow {
  RatVec normal;
  Rat rhs;
};

RatVec to_ratvec(const IntVec& v) { return RatVec(v.begin(), v.end()); }

Rat dot_rat(const RatVec& a, const RatVec& b) {
  Rat acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

bool is_zero_vec(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

// Positive scale making the rational normal a primitive integer vector.
Rat primitive_scale(const RatVec& v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = arith::lcm(l, x.den());
  std::int64_t g = 0;
  for (const auto& x : v) g = arith::gcd(g, (x * Rat(l)).num());
  return g == 0 ? Rat(1) : Rat(l) / Rat(g);
}

LinearCondition to_condition(const RatRow& row) {
  const Rat s = primitive_scale(row.normal);
  LinearCondition c;
  c.normal.resize(row.normal.size());
  for (std::size_t i = 0; i < row.normal.size(); ++i) c.normal[i] = (row.normal[i] * s).num();
  c.rhs = row.rhs * s;
  return c;
}

// Reduced row echelon form with unit pivots. Returns false on an inconsistent row.
bool rref(std::vector<RatRow>& rows, std::vector<std::size_t>& pivots, std::size_t n) {
  pivots.clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p].normal[c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rat inv = Rat(1) / rows[r].normal[c];
    for (auto& x : rows[r].normal) x *= inv;
    rows[r].rhs *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i].normal[c].is_zero()) continue;
      const Rat f = rows[i].normal[c];
      for (std::size_t j = 0; j < n; ++j) rows[i].normal[j] -= f * rows[r].normal[j];
      rows[i].rhs -= f * rows[r].rhs;
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (!rows[i].rhs.is_zero()) return false;
  }
  rows.resize(r);
  return true;
}

LinearProgram<Rat> base_program(std::size_t n, std::size_t extra, const std::vector<LinearCondition>& eqs,
                                const std::vector<LinearCondition>& ineqs, bool slack_on_ineqs) {
  LinearProgram<Rat> lp(n + extra);
  for (const auto& e : eqs) {
    RatVec row(n + extra);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rat(e.normal[i]);
    lp.add(std::move(row), Relation::Equal, e.rhs);
  }
  for (const auto& q : ineqs) {
    RatVec row(n + extra);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rat(q.normal[i]);
    if (slack_on_ineqs) row[n] = Rat(-1);
    lp.add(std::move(row), Relation::GreaterEq, q.rhs);
  }
  return lp;
}

// max t s.t. equalities, <a,w> - t >= b, t <= 1. Returns the optimal (w, t) or nullopt if infeasible.
std::optional<RatVec> interior_solution(std::size_t n, const std::vector<LinearCondition>& eqs,
                                        const std::vector<LinearCondition>& ineqs) {
  LinearProgram<Rat> lp = base_program(n, 1, eqs, ineqs, true);
  RatVec cap(n + 1);
  cap[n] = Rat(1);
  lp.add(std::move(cap), Relation::LessEq, Rat(1));
  lp.objective[n] = Rat(1);
  const auto res = solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.x;
}

}  // namespace

bool feasible_system(std::size_t ambient, const std::vector<LinearCondition>& equalities,
                     const std::vector<LinearCondition>& inequalities) {
  return feasible(base_program(ambient, 0, equalities, inequalities, false));
}

bool strictly_feasible_system(std::size_t ambient, const std::vector<LinearCondition>& equalities,
                              const std::vector<LinearCondition>& inequalities) {
  if (inequalities.empty()) return feasible_system(ambient, equalities, inequalities);
  const auto sol = interior_solution(ambient, equalities, inequalities);
  return sol && (*sol)[ambient].sign() > 0;
}

Polyhedron::Polyhedron(std::size_t ambient, std::vector<LinearCondition> equalities,
                       std::vector<LinearCondition> inequalities)
    : ambient_(ambient), eqs_(std::move(equalities)), ineqs_(std::move(inequalities)) {
  for (const auto& c : eqs_) {
    if (c.normal.size() != ambient_) throw Error("constraint dimension mismatch");
  }
  for (const auto& c : ineqs_) {
    if (c.normal.size() != ambient_) throw Error("constraint dimension mismatch");
  }
  canonicalize();
}

Polyhedron Polyhedron::point(const RatVec& p) {
  std::vector<LinearCondition> eqs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    IntVec e(p.size(), 0);
    e[i] = 1;
    eqs.push_back({e, p[i]});
  }
  return Polyhedron(p.size(), std::move(eqs), {});
}

void Polyhedron::canonicalize() {
  const std::size_t n = ambient_;
  if (!feasible_system(n, eqs_, ineqs_)) {
    empty_ = true;
    eqs_.clear();
    ineqs_.clear();
    relint_.clear();
    return;
  }

  // Promote implicit equalities.
  if (!ineqs_.empty()) {
    const auto sol = interior_solution(n, eqs_, ineqs_);
    if ((*sol)[n].sign() <= 0) {
      std::vector<LinearCondition> kept;
      std::vector<LinearCondition> promoted;
      for (std::size_t i = 0; i < ineqs_.size(); ++i) {
        LinearProgram<Rat> lp = base_program(n, 0, eqs_, ineqs_, false);
        for (std::size_t j = 0; j < n; ++j) lp.objective[j] = Rat(ineqs_[i].normal[j]);
        const auto res = solve(lp);
        if (res.status == LpStatus::Optimal && res.value == ineqs_[i].rhs) {
          promoted.push_back(ineqs_[i]);
        } else {
          kept.push_back(ineqs_[i]);
        }
      }
      eqs_.insert(eqs_.end(), promoted.begin(), promoted.end());
      ineqs_ = std::move(kept);
    }
  }

  std::vector<RatRow> rows;
  for (const auto& e : eqs_) rows.push_back({to_ratvec(e.normal), e.rhs});
  std::vector<std::size_t> pivots;
  if (!rref(rows, pivots, n)) throw Error("inconsistent equalities in a feasible polyhedron");
  eqs_.clear();
  for (const auto& r : rows) eqs_.push_back(to_condition(r));

  // Reduce inequalities modulo the equalities; keep the tightest per normal.
  std::vector<LinearCondition> reduced;
  for (const auto& q : ineqs_) {
    RatRow row{to_ratvec(q.normal), q.rhs};
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rat f = row.normal[pivots[k]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) row.normal[j] -= f * rows[k].normal[j];
      row.rhs -= f * rows[k].rhs;
    }
    if (is_zero_vec(row.normal)) continue;  // 0 >= rhs holds since the polyhedron is feasible
    LinearCondition c = to_condition(row);
    auto same = std::find_if(reduced.begin(), reduced.end(),
                             [&](const LinearCondition& o) { return o.normal == c.normal; });
    if (same == reduced.end()) {
      reduced.push_back(std::move(c));
    } else if (c.rhs > same->rhs) {
      same->rhs = c.rhs;
    }
  }
  std::sort(reduced.begin(), reduced.end());

  // Drop redundant inequalities one at a time.
  for (std::size_t i = 0; i < reduced.size();) {
    std::vector<LinearCondition> others;
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      if (j != i) others.push_back(reduced[j]);
    }
    LinearProgram<Rat> lp = base_program(n, 0, eqs_, others, false);
    for (std::size_t j = 0; j < n; ++j) lp.objective[j] = Rat(-reduced[i].normal[j]);
    const auto res = solve(lp);
    if (res.status == LpStatus::Optimal && -res.value >= reduced[i].rhs) {
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  ineqs_ = std::move(reduced);
  std::sort(eqs_.begin(), eqs_.end());

  const auto sol = interior_solution(n, eqs_, ineqs_);
  relint_.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(n));
}

int Polyhedron::dimension() const {
  if (empty_) return -1;
  return static_cast<int>(ambient_) - static_cast<int>(eqs_.size());
}

bool Polyhedron::contains(const RatVec& w) const {
  if (empty_) return false;
  if (w.size() != ambient_) throw Error("point dimension mismatch");
  for (const auto& e : eqs_) {
    if (dot(e.normal, w) != e.rhs) return false;
  }
  for (const auto& q : ineqs_) {
    if (dot(q.normal, w) < q.rhs) return false;
  }
  return true;
}

bool Polyhedron::in_relint(const RatVec& w) const {
  if (empty_) return false;
  if (w.size() != ambient_) throw Error("point dimension mismatch");
  for (const auto& e : eqs_) {
    if (dot(e.normal, w) != e.rhs) return false;
  }
  for (const auto& q : ineqs_) {
    if (dot(q.normal, w) <= q.rhs) return false;
  }
  return true;
}

RatVec Polyhedron::random_relint_point(std::mt19937_64& rng) const {
  if (empty_) throw Error("relative interior of an empty polyhedron");
  const std::vector<IntVec> basis = direction_lattice();
  RatVec p = relint_;
  if (basis.empty()) return p;
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> frac(1, 7);
  for (int step = 0; step < 2; ++step) {
    RatVec d(ambient_);
    for (const auto& b : basis) {
      const int c = coef(rng);
      for (std::size_t i = 0; i < ambient_; ++i) d[i] += Rat(c) * Rat(b[i]);
    }
    if (is_zero_vec(d)) continue;
    std::optional<Rat> limit;
    for (const auto& q : ineqs_) {
      const Rat ad = dot(q.normal, d);
      if (ad.sign() >= 0) continue;
      const Rat room = (dot(q.normal, p) - q.rhs) / (-ad);
      if (!limit || room < *limit) limit = room;
    }
    const Rat scale = (limit ? *limit : Rat(2)) * Rat(frac(rng), 8);
    for (std::size_t i = 0; i < ambient_; ++i) p[i] += scale * d[i];
  }
  return p;
}

std::vector<IntVec> Polyhedron::direction_lattice() const {
  if (empty_) return {};
  std::vector<IntVec> normals;
  for (const auto& e : eqs_) normals.push_back(e.normal);
  return integer_kernel(IntMatrix::from_rows(normals, ambient_));
}

bool Polyhedron::is_bounded() const {
  if (empty_) return true;
  std::vector<LinearCondition> eqs;
  std::vector<LinearCondition> ineqs;
  for (const auto& e : eqs_) eqs.push_back({e.normal, Rat(0)});
  for (const auto& q : ineqs_) ineqs.push_back({q.normal, Rat(0)});
  for (std::size_t j = 0; j < ambient_; ++j) {
    for (int sign : {1, -1}) {
      LinearProgram<Rat> lp = base_program(ambient_, 0, eqs, ineqs, false);
      for (std::size_t i = 0; i < ambient_; ++i) {
        RatVec box(ambient_);
        box[i] = Rat(1);
        lp.add(box, Relation::LessEq, Rat(1));
        lp.add(box, Relation::GreaterEq, Rat(-1));
      }
      lp.objective[j] = Rat(sign);
      const auto res = solve(lp);
      if (res.status == LpStatus::Optimal && res.value.sign() > 0) return false;
    }
  }
  return true;
}

std::optional<IntVec> Polyhedron::ray_direction() const {
  if (dimension() != 1) return std::nullopt;
  IntVec d = direction_lattice().front();
  bool pos = false;
  bool neg = false;
  for (const auto& q : ineqs_) {
    Rat ad;
    for (std::size_t i = 0; i < ambient_; ++i) ad += Rat(q.normal[i]) * Rat(d[i]);
    pos = pos || ad.sign() > 0;
    neg = neg || ad.sign() < 0;
  }
  if (pos == neg) return std::nullopt;  // a segment or a line
  if (neg) {
    for (auto& x : d) x = -x;
  }
  return d;
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  if (other.ambient_ != ambient_) throw Error("dimension mismatch in intersection");
  if (empty_) return *this;
  if (other.empty_) return other;
  std::vector<LinearCondition> eqs = eqs_;
  std::vector<LinearCondition> ineqs = ineqs_;
  eqs.insert(eqs.end(), other.eqs_.begin(), other.eqs_.end());
  ineqs.insert(ineqs.end(), other.ineqs_.begin(), other.ineqs_.end());
  return Polyhedron(ambient_, std::move(eqs), std::move(ineqs));
}

Polyhedron Polyhedron::tangent_cone(const RatVec& w) const {
  if (!contains(w)) throw Error("tangent cone at a point outside the polyhedron");
  std::vector<LinearCondition> eqs;
  std::vector<LinearCondition> ineqs;
  for (const auto& e : eqs_) eqs.push_back({e.normal, Rat(0)});
  for (const auto& q : ineqs_) {
    if (dot(q.normal, w) == q.rhs) ineqs.push_back({q.normal, Rat(0)});
  }
  return Polyhedron(ambient_, std::move(eqs), std::move(ineqs));
}

std::string Polyhedron::to_string() const {
  if (empty_) return "{empty}";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& e : eqs_) {
    os << (first ? "" : ", ") << phasetrop::to_string(e.normal) << ".w = " << e.rhs;
    first = false;
  }
  for (const auto& q : ineqs_) {
    os << (first ? "" : ", ") << phasetrop::to_string(q.normal) << ".w >= " << q.rhs;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace phasetrop
