#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "phasetrop/lattice.hpp"

using namespace phasetrop;

namespace {

IntMatrix diag_of(const SmithForm& s, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < s.divisors.size(); ++i) d(i, i) = s.divisors[i];
  return d;
}

Phase turns(std::int64_t p, std::int64_t q) { return Phase::turns(Rat(p, q)); }

}  // namespace

TEST(Smith, Identity) {
  const SmithForm s = smith_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(s.divisors, (IntVec{1, 1}));
}

TEST(Smith, HandExamples) {
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 1}, {1, 2}})).divisors, (IntVec{1, 3}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 4}})).divisors, (IntVec{2}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 4}, {1, 2}})).divisors, (IntVec{1, 0}));
}

TEST(Smith, RandomReconstruction) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    }
    const SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, diag_of(s, rows, cols)) << m.to_string();
    EXPECT_EQ(s.V * s.V_inv, IntMatrix::identity(cols));
    EXPECT_EQ(std::llabs(determinant(s.U)), 1);
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) {
      if (s.divisors[i] == 0) {
        EXPECT_EQ(s.divisors[i + 1], 0);
      } else {
        EXPECT_EQ(s.divisors[i + 1] % s.divisors[i], 0);
      }
    }
    for (auto d : s.divisors) EXPECT_GE(d, 0);
  }
}

TEST(Hermite, CanonicalRows) {
  const IntMatrix h = hermite_normal_form(IntMatrix::from_rows({{2, 2}, {4, 6}}));
  EXPECT_EQ(h, IntMatrix::from_rows({{2, 0}, {0, 2}}));
  EXPECT_EQ(hermite_normal_form(IntMatrix::from_rows({{0, 0}})).rows(), 0u);
}

TEST(LatticeIndex, Examples) {
  EXPECT_EQ(lattice_index({{2, 1}, {1, 2}}), 3);
  EXPECT_EQ(lattice_index({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 1);
  EXPECT_EQ(lattice_index({{2, 0}, {0, 2}}), 4);
  EXPECT_EQ(lattice_index({{2, 2}}), 2);
  EXPECT_THROW(lattice_index({{1, 2}, {2, 4}}), Error);
}

TEST(LatticeIndex, MatchesCosetEnumeration) {
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; ++c) {
        for (int d = -3; d <= 3; ++d) {
          if (a * d - b * c == 0) continue;
          const IntVec r1{a, b};
          const IntVec r2{c, d};
          const std::int64_t expected = oracle::coset_count_2d(r1, r2);
          ASSERT_EQ(lattice_index({r1, r2}), expected);
          ASSERT_EQ(expected, std::llabs(a * d - b * c));
        }
      }
    }
  }
}

TEST(SpanLattice, Examples) {
  EXPECT_EQ(span_lattice(std::vector<IntVec>{{1, 1, 0}}, 3), (std::vector<IntVec>{{1, 1, 0}}));
  EXPECT_EQ(span_lattice(std::vector<IntVec>{{2, 2}}, 2), (std::vector<IntVec>{{1, 1}}));
  EXPECT_TRUE(span_lattice(std::vector<IntVec>{}, 2).empty());
  EXPECT_EQ(span_lattice(std::vector<RatVec>{{Rat(1, 2), Rat(1, 3)}}, 2), (std::vector<IntVec>{{3, 2}}));
  EXPECT_EQ(span_lattice(std::vector<IntVec>{{2, 1}, {1, 2}}, 2), (std::vector<IntVec>{{1, 0}, {0, 1}}));
}

TEST(Kernel, AndSolve) {
  const IntMatrix m = IntMatrix::from_rows({{1, -1, 0}, {0, 0, 1}});
  EXPECT_EQ(integer_kernel(m), (std::vector<IntVec>{{1, 1, 0}}));
  const auto x = integer_solve(IntMatrix::from_rows({{2, 1}, {1, 2}}), {Rat(3), Rat(3)});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (IntVec{1, 1}));
  EXPECT_FALSE(integer_solve(IntMatrix::from_rows({{2, 0}}), {Rat(1)}));
  EXPECT_FALSE(integer_solve(IntMatrix::from_rows({{1, 0}}), {Rat(1, 2)}));
}

TEST(Subtorus, Examples) {
  EXPECT_TRUE(subtorus_contains({{1, 1}}, {turns(1, 3), turns(1, 3)}));
  EXPECT_FALSE(subtorus_contains({{1, 1}}, {turns(1, 3), turns(0, 1)}));
  EXPECT_TRUE(subtorus_contains({{1, 0}, {0, 1}}, {turns(2, 7), turns(5, 11)}));
  EXPECT_TRUE(subtorus_contains({}, {turns(0, 1), turns(0, 1)}));
  EXPECT_FALSE(subtorus_contains({}, {turns(1, 2), turns(0, 1)}));
  // (2,0) spans a circle through (1/2, 0) as well: 2φ covers everything.
  EXPECT_TRUE(subtorus_contains({{2, 0}}, {turns(1, 3), turns(0, 1)}));
  EXPECT_TRUE(subtorus_contains({{1, 1}}, {Phase::radians(1.0), Phase::radians(1.0 + 1e-12)}));
  EXPECT_FALSE(subtorus_contains({{1, 1}}, {Phase::radians(1.0), Phase::radians(1.1)}));
}

TEST(Subtorus, InvariantUnderBasisChange) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(0, 11);
  const std::vector<IntVec> basis{{1, 2, 0}, {0, 1, 1}};
  const std::vector<IntVec> other{{1, 3, 1}, {1, 4, 2}};  // unimodular change: rows r1+r2, r1+2r2
  for (int i = 0; i < 500; ++i) {
    PhaseVec theta{turns(num(rng), 12), turns(num(rng), 12), turns(num(rng), 12)};
    EXPECT_EQ(subtorus_contains(basis, theta), subtorus_contains(other, theta));
    // Points built from the basis are always inside.
    const Rat a(num(rng), 12);
    const Rat b(num(rng), 12);
    PhaseVec inside{Phase::turns(a), Phase::turns(a * Rat(2) + b), Phase::turns(b)};
    EXPECT_TRUE(subtorus_contains(other, inside));
  }
}
