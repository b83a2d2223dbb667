#include <gtest/gtest.h>

#include <random>

#include "phasetrop/series.hpp"

using namespace phasetrop;

namespace {

PolarC unit(std::int64_t p, std::int64_t q) { return PolarC::polar(Rat(1), Phase::turns(Rat(p, q))); }
PolarC real(std::int64_t v) { return PolarC::real(Rat(v)); }
Series t_pow(const Rat& g, const PolarC& c = PolarC::one()) { return Series::monomial(c, g); }

Series random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> expo(-4, 8);
  std::uniform_int_distribution<int> ph(0, 11);
  std::uniform_int_distribution<int> mod(1, 5);
  std::vector<SeriesTerm> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms.push_back({Rat(expo(rng), 2), PolarC::polar(Rat(mod(rng)), Phase::turns(Rat(ph(rng), 12)))});
  return Series::from_terms(terms);
}

}  // namespace

TEST(Series, Valuation) {
  EXPECT_EQ(*(t_pow(1) + t_pow(2, real(3))).valuation(), Rat(1));
  EXPECT_FALSE(Series().valuation().has_value());
  const PolarC one_plus_i = PolarC::polar(std::sqrt(2.0), Phase::turns(Rat(1, 8)));
  EXPECT_EQ(*(t_pow(Rat(1, 2), one_plus_i) + t_pow(1, real(3))).valuation(), Rat(1, 2));
}

TEST(Series, Arithmetic) {
  const Series one = Series::constant(PolarC::one());
  const Series inv = Series::divide(one, one + t_pow(1), Rat(3));
  EXPECT_EQ(inv, Series::from_terms({{Rat(0), real(1)}, {Rat(1), real(-1)}, {Rat(2), real(1)}}, Rat(3)));
  EXPECT_EQ(t_pow(Rat(1, 2)) * t_pow(Rat(1, 2)), t_pow(1));
  EXPECT_EQ((t_pow(1) + t_pow(2)) + (-t_pow(1)), t_pow(2));
  EXPECT_THROW(Series::divide(one, Series()), Error);
  EXPECT_THROW(Series::divide(one, one + t_pow(1)), Error);
}

TEST(Series, TruncationPropagates) {
  const Series a = Series::from_terms({{Rat(0), real(1)}, {Rat(1), real(2)}}, Rat(3));
  const Series b = t_pow(1);
  EXPECT_EQ(*(a * b).truncation(), Rat(4));
  EXPECT_EQ(*(a + b).truncation(), Rat(3));
  const Series q = Series::divide(b, a);
  EXPECT_EQ(*q.truncation(), Rat(4));
  EXPECT_EQ(*q.valuation(), Rat(1));
}

TEST(Series, RootsAndPowers) {
  const Series one = Series::constant(PolarC::one());
  const Series x = (one + t_pow(1)).truncated(Rat(6));
  const Series r = x.nth_root(2);
  const Series back = r * r;
  ASSERT_EQ(back.terms().size(), 2u);
  EXPECT_EQ(back.terms()[1].gamma, Rat(1));
  EXPECT_NEAR(back.terms()[1].coeff.modulus(), 1.0, 1e-12);
  EXPECT_EQ(t_pow(3, real(-8)).nth_root(3, 0).leading().gamma, Rat(1));
  EXPECT_EQ(t_pow(1, unit(1, 4)).pow(-2), t_pow(-2, real(-1)));
}

TEST(Series, ValuationAxioms) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const Series a = random_series(rng);
    const Series b = random_series(rng);
    if (a.is_zero() || b.is_zero()) continue;
    const auto va = *a.valuation();
    const auto vb = *b.valuation();
    ASSERT_EQ(*(a * b).valuation(), va + vb);
    const Series s = a + b;
    if (va != vb) {
      ASSERT_EQ(*s.valuation(), std::min(va, vb));
    } else if (!s.is_zero()) {
      ASSERT_GE(*s.valuation(), va);
    }
  }
}

TEST(Section, AlphaAt) {
  const Section s = Section::twisted(Rat(1), unit(1, 4));
  EXPECT_EQ(s.alpha_at(Rat(2)), real(-1));
  EXPECT_EQ(s.alpha_at(Rat(0)), PolarC::one());
  EXPECT_THROW(s.alpha_at(Rat(1, 2)), Error);
  const Section half = Section::twisted(Rat(1, 2), unit(1, 3));
  EXPECT_EQ(half.alpha_at(Rat(3, 2)), PolarC::one());
  EXPECT_EQ(Section::canonical().alpha_at(Rat(7, 3)), PolarC::one());
}

TEST(Section, ArgSection) {
  const PolarC one_plus_i = PolarC::polar(std::sqrt(2.0), Phase::turns(Rat(1, 8)));
  EXPECT_EQ(arg_section(t_pow(Rat(1, 2), one_plus_i), Section::canonical()), Phase::turns(Rat(1, 8)));
  const Section tw = Section::twisted(Rat(1), unit(1, 4));
  EXPECT_EQ(arg_section(t_pow(1), tw), Phase::turns(Rat(-1, 4)));
  EXPECT_EQ(arg_section(Series::constant(real(5)), tw), Phase::zero());
  EXPECT_THROW(arg_section(t_pow(Rat(1, 3)), tw), Error);
}

TEST(Section, ArgIsMultiplicative) {
  std::mt19937_64 rng(5);
  const Section tw = Section::twisted(Rat(1, 2), unit(1, 5));
  for (int i = 0; i < 2000; ++i) {
    const Series a = random_series(rng);
    const Series b = random_series(rng);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(arg_section(a * b, tw), arg_section(a, tw) + arg_section(b, tw));
    EXPECT_EQ(arg_section(a, Section::canonical()), a.leading().coeff.phase());
  }
}
