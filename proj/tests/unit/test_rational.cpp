#include <gtest/gtest.h>

#include <random>

#include "phasetrop/phase.hpp"
#include "phasetrop/rational.hpp"

using namespace phasetrop;

TEST(Rat, CanonicalForm) {
  const Rat r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rat(0, 5), Rat(0));
  EXPECT_EQ(Rat(0, 5).den(), 1);
}

TEST(Rat, ParseForms) {
  EXPECT_EQ(Rat::parse("3/6"), Rat(1, 2));
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_EQ(Rat::parse("0.25"), Rat(1, 4));
  EXPECT_EQ(Rat::parse("-1.5"), Rat(-3, 2));
  EXPECT_THROW(Rat::parse("1/0"), Error);
  EXPECT_THROW(Rat::parse("abc"), Error);
}

TEST(Rat, FloorAndFrac) {
  EXPECT_EQ(Rat(-1, 3).floor(), -1);
  EXPECT_EQ(Rat(-1, 3).frac(), Rat(2, 3));
  EXPECT_EQ(Rat(7, 2).frac(), Rat(1, 2));
}

TEST(Rat, OverflowIsReported) {
  const Rat big(INT64_MAX);
  EXPECT_THROW(big + Rat(1), OverflowError);
  EXPECT_THROW(big * Rat(2), OverflowError);
}

TEST(Rat, OrderMatchesDoubles) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  for (int i = 0; i < 2000; ++i) {
    const Rat a(num(rng), den(rng));
    const Rat b(num(rng), den(rng));
    EXPECT_EQ(a < b, a.to_double() < b.to_double() && !(a == b));
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Phase, ExactReduction) {
  EXPECT_EQ(Phase::turns(Rat(5, 4)).exact_turns(), Rat(1, 4));
  EXPECT_EQ(Phase::turns(Rat(-1, 3)).exact_turns(), Rat(2, 3));
  EXPECT_EQ(Phase::turns(Rat(3, 4)).exact_lift(), Rat(-1, 4));
  EXPECT_EQ(Phase::turns(Rat(1, 2)).exact_lift(), Rat(1, 2));
}

TEST(Phase, GroupLawRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 24);
  for (int i = 0; i < 2000; ++i) {
    const Phase a = Phase::turns(Rat(num(rng), den(rng)));
    const Phase b = Phase::turns(Rat(num(rng), den(rng)));
    EXPECT_TRUE(((a + b) - b).is_exact());
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(Phase::turns(a.exact_turns()), a);
  }
}

TEST(Phase, MixedModeIsFloat) {
  const Phase exact = Phase::turns(Rat(1, 4));
  const Phase fl = Phase::radians(kPi / 2);
  EXPECT_FALSE((exact + fl).is_exact());
  EXPECT_EQ(exact, fl);
  EXPECT_EQ(exact + fl, Phase::turns(Rat(1, 2)));
  EXPECT_FALSE(Phase::radians(1e-7) == Phase::zero());
  EXPECT_TRUE(Phase::radians(kTwoPi - 1e-11) == Phase::zero());
}

TEST(Phase, Division) {
  const Phase p = Phase::turns(Rat(1, 2));
  EXPECT_EQ(p.divided(2, 0), Phase::turns(Rat(1, 4)));
  EXPECT_EQ(p.divided(2, 1), Phase::turns(Rat(3, 4)));
  EXPECT_EQ(p.divided(3, 2).scaled(3), p);
}

TEST(PolarC, ExactProducts) {
  const PolarC i = PolarC::polar(Rat(1), Phase::turns(Rat(1, 4)));
  EXPECT_EQ(i * i, PolarC::real(Rat(-1)));
  EXPECT_EQ(i.pow(4), PolarC::one());
  EXPECT_EQ(i.inverse().phase(), Phase::turns(Rat(3, 4)));
  EXPECT_TRUE((i * i).exact_modulus().has_value());
}

TEST(PolarC, AdditionModes) {
  const PolarC a = PolarC::real(Rat(3));
  const PolarC b = PolarC::real(Rat(-3));
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ(a + a, PolarC::real(Rat(6)));
  EXPECT_EQ(a + PolarC::real(Rat(-1)), PolarC::real(Rat(2)));
  const PolarC i = PolarC::polar(Rat(1), Phase::turns(Rat(1, 4)));
  const PolarC s = PolarC::one() + i;
  EXPECT_FALSE(s.phase().is_exact());
  EXPECT_EQ(s, PolarC::polar(std::sqrt(2.0), Phase::turns(Rat(1, 8))));
  // third roots of unity cancel through the float path
  const PolarC z = PolarC::polar(Rat(1), Phase::turns(Rat(1, 3)));
  EXPECT_TRUE((PolarC::one() + z + z * z).is_zero());
}

TEST(PolarC, Roots) {
  const PolarC m1 = PolarC::real(Rat(-1));
  EXPECT_EQ(m1.nth_root(2, 0), PolarC::polar(Rat(1), Phase::turns(Rat(1, 4))));
  const PolarC eight = PolarC::real(Rat(8));
  EXPECT_NEAR(eight.nth_root(3).modulus(), 2.0, 1e-12);
}
