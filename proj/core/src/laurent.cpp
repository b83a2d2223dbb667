#include "phasetrop/laurent.hpp"

#include <sstream>

namespace phasetrop {

namespace {

std::string monomial_string(const std::vector<std::string>& vars, const IntVec& m) {
  std::string s;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    const std::string name = j < vars.size() ? vars[j] : "x" + std::to_string(j);
    s += "*" + name;
    if (m[j] != 1) s += "^" + std::to_string(m[j]);
  }
  return s;
}

void check_length(std::size_t n, const IntVec& m) {
  if (m.size() != n) throw Error("exponent length does not match the variable count");
}

}  // namespace

void KPoly::add_term(const IntVec& m, const Series& c) {
  check_length(vars_.size(), m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<IntVec> KPoly::support() const {
  std::vector<IntVec> out;
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

Series KPoly::evaluate(const std::vector<Series>& x, std::optional<Rat> order) const {
  if (x.size() != vars_.size()) throw Error("point dimension mismatch");
  Series acc;
  for (const auto& [m, c] : terms_) {
    Series term = c;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] != 0) term *= x[j].pow(m[j], order);
    }
    acc += term;
  }
  if (order) acc = acc.truncated(*order);
  return acc;
}

std::string KPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + monomial_string(vars_, m);
  }
  return s;
}

void CPoly::add_term(const IntVec& m, const PolarC& c) {
  check_length(vars_.size(), m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<IntVec> CPoly::support() const {
  std::vector<IntVec> out;
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

std::complex<double> CPoly::evaluate(const std::vector<std::complex<double>>& x) const {
  if (x.size() != vars_.size()) throw Error("point dimension mismatch");
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] != 0) term *= std::pow(x[j], static_cast<int>(m[j]));
    }
    acc += term;
  }
  return acc;
}

CPoly CPoly::scaled(const PolarC& c) const {
  CPoly out(vars_);
  for (const auto& [m, a] : terms_) out.add_term(m, a * c);
  return out;
}

CPoly CPoly::substituted(const std::vector<PolarC>& s) const {
  if (s.size() != vars_.size()) throw Error("substitution length mismatch");
  CPoly out(vars_);
  for (const auto& [m, a] : terms_) {
    PolarC c = a;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] != 0) c *= s[j].pow(m[j]);
    }
    out.add_term(m, c);
  }
  return out;
}

CPoly CPoly::normalized() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.begin()->second.inverse());
}

KPoly CPoly::to_kpoly() const {
  KPoly out(vars_);
  for (const auto& [m, a] : terms_) out.add_term(m, Series::constant(a));
  return out;
}

bool operator==(const CPoly& a, const CPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

std::string CPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + monomial_string(vars_, m);
  }
  return s;
}

bool equal_up_to_scalar(const CPoly& a, const CPoly& b) { return a.normalized() == b.normalized(); }

Rat tropical_value(const KPoly& f, const RatVec& w) {
  if (w.size() != f.nvars()) throw Error("weight dimension mismatch");
  if (f.terms().empty()) throw Error("tropical value of the zero polynomial");
  bool first = true;
  Rat best;
  for (const auto& [m, c] : f.terms()) {
    const Rat v = *c.valuation() + dot(m, w);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

std::vector<IntVec> argmin_support(const KPoly& f, const RatVec& w) {
  const Rat best = tropical_value(f, w);
  std::vector<IntVec> out;
  for (const auto& [m, c] : f.terms()) {
    if (*c.valuation() + dot(m, w) == best) out.push_back(m);
  }
  return out;
}

bool is_in_trop(const KPoly& f, const RatVec& w) { return argmin_support(f, w).size() >= 2; }

CPoly tropical_reduction(const KPoly& f, const RatVec& w, const Section& s) {
  CPoly out(f.vars());
  for (const auto& m : argmin_support(f, w)) {
    const SeriesTerm& lead = f.terms().at(m).leading();
    out.add_term(m, lead.coeff / s.alpha_at(lead.gamma));
  }
  return out;
}

CPoly initial_form(const CPoly& g, const RatVec& w) {
  if (w.size() != g.nvars()) throw Error("weight dimension mismatch");
  CPoly out(g.vars());
  if (g.terms().empty()) return out;
  bool first = true;
  Rat best;
  for (const auto& [m, c] : g.terms()) {
    const Rat v = dot(m, w);
    if (first || v < best) best = v;
    first = false;
  }
  for (const auto& [m, c] : g.terms()) {
    if (dot(m, w) == best) out.add_term(m, c);
  }
  return out;
}

CPoly restricted(const CPoly& g, const std::vector<IntVec>& exponents) {
  CPoly out(g.vars());
  for (const auto& m : exponents) {
    auto it = g.terms().find(m);
    if (it == g.terms().end()) throw Error("exponent " + to_string(m) + " not in the support");
    out.add_term(m, it->second);
  }
  return out;
}

MonicForm monic_reduced(const CPoly& g) {
  if (g.terms().size() < 2) throw Error("monic reduction needs at least two terms");
  MonicForm out;
  auto it = g.terms().begin();
  out.base = it->first;
  const PolarC base_coeff = it->second;
  std::vector<IntVec> rows;
  for (++it; it != g.terms().end(); ++it) {
    IntVec row(it->first.size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = it->first[j] - out.base[j];
    rows.push_back(std::move(row));
    const PolarC a = it->second / base_coeff;
    out.coefficients.push_back(a);
    out.shifts.push_back(a.phase());
  }
  out.A = IntMatrix::from_rows(rows, g.nvars());
  return out;
}

SimpleSystem check_simple_system(const std::vector<CPoly>& polys) {
  SimpleSystem sys;
  if (polys.empty()) return sys;
  sys.rank = polys.front().nvars();
  std::vector<IntVec> all_rows;
  for (const auto& g : polys) {
    if (g.nvars() != sys.rank) throw Error("polynomials in a system must share their variables");
    if (g.terms().size() < 2) {
      throw NotSimpleError("polynomial " + g.to_string() + " has fewer than two terms", g.support());
    }
    MonicForm form = monic_reduced(g);
    const std::vector<IntVec> rows = form.A.row_list();
    if (rank(form.A) < rows.size()) {
      std::string names;
      for (const auto& r : rows) names += to_string(r);
      throw NotSimpleError("reduced support {" + names + "} of " + g.to_string() + " is not linearly independent",
                           rows);
    }
    all_rows.insert(all_rows.end(), rows.begin(), rows.end());
    CPoly monic(g.vars());
    monic.add_term(IntVec(sys.rank, 0), PolarC::one());
    for (std::size_t i = 0; i < rows.size(); ++i) monic.add_term(rows[i], form.coefficients[i]);
    sys.polys.push_back(std::move(monic));
    sys.forms.push_back(std::move(form));
  }
  if (rank(IntMatrix::from_rows(all_rows, sys.rank)) < all_rows.size()) {
    std::string names;
    for (const auto& r : all_rows) names += to_string(r);
    throw NotSimpleError("reduced supports {" + names + "} are not jointly linearly independent", all_rows);
  }
  return sys;
}

}  // namespace phasetrop
