#include "phasetrop/trop_complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace phasetrop {

std::size_t TropComplex::add_face(Polyhedron poly, ArgminSets argmin) {
  if (poly.ambient() != ambient_) throw Error("face dimension mismatch");
  if (poly.is_empty()) throw Error("empty face");
  Face f;
  f.dim = poly.dimension();
  f.lattice = poly.direction_lattice();
  f.poly = std::move(poly);
  f.argmin = std::move(argmin);
  const std::size_t j = faces_.size();
  for (std::size_t i = 0; i < j; ++i) {
    if (faces_[i].poly == f.poly) throw Error("duplicate face " + f.poly.to_string());
    if (f.poly.contains(faces_[i].poly.relint_point())) incidence_.emplace_back(i, j);
    if (faces_[i].poly.contains(f.poly.relint_point())) incidence_.emplace_back(j, i);
  }
  faces_.push_back(std::move(f));
  return j;
}

std::vector<std::size_t> TropComplex::subfaces(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [sub, super] : incidence_) {
    if (super == i) out.push_back(sub);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> TropComplex::superfaces(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [sub, super] : incidence_) {
    if (sub == i) out.push_back(super);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> TropComplex::faces_containing(const RatVec& w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].poly.contains(w)) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> TropComplex::locate(const RatVec& w) const {
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].poly.in_relint(w)) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> TropComplex::minimal_faces() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (subfaces(i).empty()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> TropComplex::faces_of_dimension(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].dim == d) out.push_back(i);
  }
  return out;
}

int TropComplex::dimension() const {
  int d = -1;
  for (const auto& f : faces_) d = std::max(d, f.dim);
  return d;
}

bool TropComplex::is_pure() const {
  const int d = dimension();
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].dim == d) continue;
    if (superfaces(i).empty()) return false;
  }
  return true;
}

bool TropComplex::is_connected() const {
  if (faces_.empty()) return true;
  std::vector<std::size_t> parent(faces_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [a, b] : incidence_) parent[find(a)] = find(b);
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < faces_.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

std::vector<Polyhedron> TropComplex::cells() const {
  std::vector<Polyhedron> out;
  for (const auto& f : faces_) out.push_back(f.poly);
  std::sort(out.begin(), out.end());
  return out;
}

std::string TropComplex::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    os << "face " << i << " dim " << faces_[i].dim << " " << faces_[i].poly.to_string() << " E=";
    for (const auto& set : faces_[i].argmin) {
      os << '{';
      for (const auto& m : set) os << phasetrop::to_string(m);
      os << '}';
    }
    os << '\n';
  }
  return os.str();
}

TropComplex trop_complex(const KPoly& f) {
  const std::size_t n = f.nvars();
  struct Term {
    IntVec m;
    Rat h;
  };
  std::vector<Term> terms;
  for (const auto& [m, c] : f.terms()) terms.push_back({m, *c.valuation()});
  TropComplex out(n);
  if (terms.size() < 2) throw Error("tropical variety empty");

  // Conditions making every term of S minimal: ties inside S, no smaller value outside.
  auto conditions = [&](const std::vector<std::size_t>& s, std::vector<LinearCondition>& eqs,
                        std::vector<LinearCondition>& ineqs) {
    const Term& base = terms[s.front()];
    std::vector<bool> in(terms.size(), false);
    for (auto i : s) in[i] = true;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k == s.front()) continue;
      IntVec normal(n);
      for (std::size_t j = 0; j < n; ++j) normal[j] = terms[k].m[j] - base.m[j];
      LinearCondition c{normal, base.h - terms[k].h};
      (in[k] ? eqs : ineqs).push_back(std::move(c));
    }
  };

  std::vector<std::size_t> current;
  std::function<void(std::size_t)> visit = [&](std::size_t start) {
    for (std::size_t i = start; i < terms.size(); ++i) {
      current.push_back(i);
      std::vector<LinearCondition> eqs;
      std::vector<LinearCondition> ineqs;
      conditions(current, eqs, ineqs);
      if (feasible_system(n, eqs, ineqs)) {
        if (current.size() >= 2 && strictly_feasible_system(n, eqs, ineqs)) {
          std::vector<IntVec> argmin;
          for (auto k : current) argmin.push_back(terms[k].m);
          out.add_face(Polyhedron(n, eqs, ineqs), {argmin});
        }
        visit(i + 1);
      }
      current.pop_back();
    }
  };
  visit(0);
  if (out.empty()) throw Error("tropical variety empty");
  return out;
}

TropComplex local_fan(const TropComplex& c, const RatVec& w) {
  TropComplex fan(c.ambient());
  for (auto i : c.faces_containing(w)) fan.add_face(c.face(i).poly.tangent_cone(w), c.face(i).argmin);
  return fan;
}

std::vector<std::size_t> minimal_faces(const TropComplex& c) { return c.minimal_faces(); }

std::optional<std::size_t> face_locate(const TropComplex& c, const RatVec& w) { return c.locate(w); }

TropComplex normal_fan_skeleton(const std::vector<IntVec>& vertices) {
  if (vertices.empty()) throw Error("polytope without vertices");
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < vertices.front().size(); ++j) vars.push_back("x" + std::to_string(j));
  KPoly f(vars);
  for (const auto& v : vertices) f.add_term(v, Series::constant(PolarC::one()));
  return trop_complex(f);
}

}  // namespace phasetrop
