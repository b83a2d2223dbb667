#include "phasetrop/series.hpp"

#include <algorithm>
#include <sstream>

namespace phasetrop {

namespace {

std::optional<Rat> min_order(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Least exponent that can carry a nonzero term: the valuation, or the truncation for an unknown series.
Rat floor_exponent(const Series& s) {
  if (auto v = s.valuation()) return *v;
  return *s.truncation();
}

// (s / lead - 1): the tail of a nonzero series normalized to start with 1.
Series normalized_tail(const Series& s) {
  const SeriesTerm& lead = s.leading();
  const Series scale = Series::monomial(lead.coeff.inverse(), -lead.gamma);
  const Series unit = s * scale;
  // The constant term is 1 up to rounding; drop it rather than trusting cancellation.
  std::vector<SeriesTerm> rest(unit.terms().begin() + 1, unit.terms().end());
  return Series::from_terms(std::move(rest), unit.truncation());
}

}  // namespace

Series Series::constant(const PolarC& c, std::optional<Rat> trunc) { return monomial(c, Rat(0), trunc); }

Series Series::monomial(const PolarC& c, const Rat& gamma, std::optional<Rat> trunc) {
  return from_terms({{gamma, c}}, trunc);
}

Series Series::from_terms(std::vector<SeriesTerm> terms, std::optional<Rat> trunc) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const SeriesTerm& a, const SeriesTerm& b) { return a.gamma < b.gamma; });
  Series s;
  s.trunc_ = trunc;
  for (auto& t : terms) {
    if (trunc && t.gamma >= *trunc) break;
    if (!s.terms_.empty() && s.terms_.back().gamma == t.gamma) {
      s.terms_.back().coeff += t.coeff;
      if (s.terms_.back().coeff.is_zero()) s.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      s.terms_.push_back(std::move(t));
    }
  }
  return s;
}

std::optional<Rat> Series::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().gamma;
}

const SeriesTerm& Series::leading() const {
  if (terms_.empty()) throw Error("leading term of a zero series");
  return terms_.front();
}

Series Series::truncated(const Rat& order) const { return from_terms(terms_, min_order(trunc_, order)); }

Series Series::operator-() const {
  Series s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

Series operator+(const Series& a, const Series& b) {
  std::vector<SeriesTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Series::from_terms(std::move(terms), min_order(a.trunc_, b.trunc_));
}

Series operator*(const Series& a, const Series& b) {
  if ((a.is_zero() && !a.trunc_) || (b.is_zero() && !b.trunc_)) return Series();
  std::optional<Rat> trunc;
  if (a.trunc_) trunc = min_order(trunc, *a.trunc_ + floor_exponent(b));
  if (b.trunc_) trunc = min_order(trunc, *b.trunc_ + floor_exponent(a));
  std::vector<SeriesTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const Rat g = x.gamma + y.gamma;
      if (trunc && g >= *trunc) break;
      terms.push_back({g, x.coeff * y.coeff});
    }
  }
  return Series::from_terms(std::move(terms), trunc);
}

Series Series::divide(const Series& a, const Series& b, std::optional<Rat> order) {
  if (b.is_zero()) throw Error("division by zero series");
  if (a.is_zero() && !a.trunc_) return Series();
  const SeriesTerm& lead = b.leading();
  const Series scaled = a * monomial(lead.coeff.inverse(), -lead.gamma);
  const Series tail = normalized_tail(b);
  if (tail.is_zero() && !tail.trunc_) return scaled;

  // Relative precision needed for 1 / (1 + tail).
  std::optional<Rat> rel;
  if (tail.trunc_) rel = min_order(rel, *tail.trunc_);
  if (a.trunc_) rel = min_order(rel, *a.trunc_ - floor_exponent(a));
  if (order) rel = min_order(rel, *order - (floor_exponent(a) - lead.gamma));
  if (!rel) throw Error("division by a non-monomial series needs a truncation order");

  const Series step = -tail.truncated(*rel);
  Series term = constant(PolarC::one(), *rel);
  Series inverse = term;
  for (;;) {
    term = (term * step).truncated(*rel);
    if (term.is_zero()) break;
    inverse += term;
  }
  return scaled * inverse;
}

Series Series::pow(std::int64_t k, std::optional<Rat> order) const {
  if (k < 0) return divide(constant(PolarC::one()), pow(-k), order);
  Series acc = constant(PolarC::one());
  Series base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  if (order) acc = acc.truncated(*order);
  return acc;
}

Series Series::nth_root(std::int64_t d, std::int64_t branch, std::optional<Rat> order) const {
  if (d <= 0) throw Error("root degree must be positive");
  if (is_zero()) throw Error("root of a zero series");
  const SeriesTerm& lead = leading();
  const Series head = monomial(lead.coeff.nth_root(d, branch), lead.gamma / Rat(d));
  const Series tail = normalized_tail(*this);
  if (tail.is_zero() && !tail.trunc_) return head;

  std::optional<Rat> rel;
  if (tail.trunc_) rel = min_order(rel, *tail.trunc_);
  if (order) rel = min_order(rel, *order - lead.gamma / Rat(d));
  if (!rel) throw Error("root of a non-monomial series needs a truncation order");

  // Binomial series (1 + tail)^(1/d).
  const Series step = tail.truncated(*rel);
  const Rat exponent(1, d);
  Rat binom(1);
  Series power = constant(PolarC::one(), *rel);
  Series sum = power;
  for (std::int64_t k = 0;; ++k) {
    binom = binom * (exponent - Rat(k)) / Rat(k + 1);
    power = (power * step).truncated(*rel);
    if (power.is_zero()) break;
    if (!binom.is_zero()) sum += power * constant(PolarC::real(binom));
  }
  return head * sum;
}

bool operator==(const Series& a, const Series& b) {
  if (a.trunc_ != b.trunc_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].gamma != b.terms_[i].gamma || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string Series::to_string() const {
  std::ostringstream os;
  if (terms_.empty()) os << "0";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    os << (i ? " + " : "") << terms_[i].coeff.to_string();
    if (!terms_[i].gamma.is_zero()) os << "*t^" << terms_[i].gamma;
  }
  if (trunc_) os << " + O(t^" << *trunc_ << ")";
  return os.str();
}

Section Section::twisted(const Rat& generator, const PolarC& alpha_generator) {
  if (generator.sign() <= 0) throw Error("section generator must be positive");
  if (alpha_generator.is_zero()) throw Error("section value must be nonzero");
  Section s;
  s.canonical_ = false;
  s.generator_ = generator;
  s.alpha_ = alpha_generator;
  return s;
}

bool Section::defined_at(const Rat& gamma) const { return canonical_ || (gamma / generator_).is_integer(); }

PolarC Section::alpha_at(const Rat& gamma) const {
  if (canonical_) return PolarC::one();
  const Rat k = gamma / generator_;
  if (!k.is_integer()) throw Error("section undefined at " + gamma.to_string());
  return alpha_.pow(k.num());
}

Series Section::at(const Rat& gamma) const { return Series::monomial(alpha_at(gamma), gamma); }

std::string Section::to_string() const {
  if (canonical_) return "canonical";
  return "twisted(g=" + generator_.to_string() + ", alpha=" + alpha_.to_string() + ")";
}

std::optional<Rat> valuation(const Series& x) { return x.valuation(); }

PolarC alpha_at(const Section& s, const Rat& gamma) { return s.alpha_at(gamma); }

Phase arg_section(const Series& x, const Section& s) {
  if (x.is_zero()) throw Error("argument of a zero series");
  const SeriesTerm& lead = x.leading();
  return lead.coeff.phase() - s.alpha_at(lead.gamma).phase();
}

}  // namespace phasetrop
