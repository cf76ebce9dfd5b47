#include <gtest/gtest.h>

#include <cmath>

#include "sfg/error.hpp"
#include "sfg/fg1d.hpp"
#include "test_util.hpp"

namespace sfg {
namespace {

Projected1DMeasure atoms(std::vector<Atom> a) { return Projected1DMeasure(std::move(a)); }

TEST(Survival, SingleAtom) {
  const SurvivalFunction f(atoms({{3.0, 1.0}}));
  EXPECT_EQ(f.inverse(0.5), 3.0);
  EXPECT_EQ(f.inverse(1.0), 3.0);
  EXPECT_EQ(f.inverse(1.5), 0.0);
  EXPECT_EQ(f(3.0), 1.0);
  EXPECT_EQ(f(3.5), 0.0);
}

TEST(Survival, DescendingCumulative) {
  const SurvivalFunction f(atoms({{1.0, 1.0}, {3.0, 2.0}}));
  EXPECT_EQ(f.inverse(0.1), 3.0);
  EXPECT_EQ(f.inverse(2.0), 3.0);
  EXPECT_EQ(f.inverse(2.5), 1.0);
  EXPECT_EQ(f.inverse(3.0), 1.0);
  EXPECT_EQ(f.inverse(3.1), 0.0);
  EXPECT_EQ(f(1.0), 3.0);
  EXPECT_EQ(f(2.0), 2.0);
  EXPECT_EQ(f.total_mass(), 3.0);
}

TEST(Survival, EmptyIsZero) {
  const SurvivalFunction f(atoms({}));
  EXPECT_EQ(f.inverse(0.0), 0.0);
  EXPECT_EQ(f.inverse(5.0), 0.0);
  EXPECT_EQ(f.total_mass(), 0.0);
}

TEST(Survival, MergesEqualValues) {
  const SurvivalFunction f(atoms({{2.0, 1.0}, {2.0, 0.5}, {1.0, 1.0}}));
  ASSERT_EQ(f.breakpoints().size(), 2u);
  EXPECT_EQ(f.breakpoints()[0].cumulative_mass, 1.5);
}

TEST(Projected1D, DropsZeroValuedAtoms) {
  const auto m = atoms({{0.0, 4.0}, {1.0, 1.0}});
  EXPECT_EQ(m.atoms().size(), 1u);
  EXPECT_THROW(atoms({{-1.0, 1.0}}), ValidationError);
  EXPECT_THROW(atoms({{1.0, 0.0}}), ValidationError);
}

TEST(Fg1d, Examples) {
  EXPECT_NEAR(fg1d(atoms({{3.0, 1.0}}), atoms({{1.0, 1.0}}), 1.0), 2.0, 1e-15);
  EXPECT_NEAR(fg1d(atoms({{3.0, 2.0}}), atoms({{1.0, 1.0}}), 1.0), 5.0, 1e-15);
  EXPECT_NEAR(fg1d(atoms({{3.0, 1.0}}), atoms({}), 2.0), 9.0, 1e-15);
  const auto m = atoms({{0.3, 1.5}, {2.0, 0.25}});
  EXPECT_EQ(fg1d(m, m, 1.7), 0.0);
}

TEST(Fg1d, RejectsOrderBelowOne) {
  EXPECT_THROW(fg1d(atoms({}), atoms({}), 0.9), InvalidParameter);
}

TEST(Fg1d, EmptyPartnerIsPersistence) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Atom> a;
    const auto n = rng.below(10);
    double expect = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back({rng.uniform(0.01, 3.0), rng.uniform(0.1, 2.0)});
      expect += a.back().mass * std::pow(a.back().value, 1.5);
    }
    EXPECT_NEAR(fg1d(atoms(a), atoms({}), 1.5), expect, 1e-12 * (1.0 + expect));
  }
}

TEST(Fg1dBruteForce, Examples) {
  const auto r = fg1d_bruteforce(atoms({{3.0, 1.0}}), atoms({{1.0, 1.0}}), 1.0);
  EXPECT_NEAR(r.cost, 2.0, 1e-15);
  EXPECT_EQ(fg1d_bruteforce(atoms({}), atoms({}), 2.0).cost, 0.0);
  EXPECT_NEAR(fg1d_bruteforce(atoms({{3.0, 1.0}, {1.0, 1.0}}), atoms({{2.0, 1.0}}), 1.0).cost, 2.0, 1e-15);
  // Integer masses split into unit atoms.
  EXPECT_NEAR(fg1d_bruteforce(atoms({{3.0, 2.0}}), atoms({{1.0, 1.0}}), 1.0).cost, 5.0, 1e-15);
}

TEST(Fg1dBruteForce, RefusesLargeOrIrregular) {
  std::vector<Atom> nine(9, Atom{1.0, 1.0});
  EXPECT_THROW(fg1d_bruteforce(atoms(nine), atoms({}), 1.0), Refusal);
  EXPECT_THROW(fg1d_bruteforce(atoms({{1.0, 1.0}}), atoms({{1.0, std::sqrt(2.0)}}), 1.0), Refusal);
}

TEST(Fg1d, MatchesExhaustiveSearchOnUnitInstances) {
  Rng rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testing::random_unit_atoms(rng, 5);
    const auto b = testing::random_unit_atoms(rng, 5);
    for (double p : {1.0, 1.5, 2.0}) {
      const auto brute = fg1d_bruteforce(a, b, p);
      EXPECT_NEAR(fg1d(a, b, p), brute.cost, 1e-12);
      EXPECT_TRUE(brute.monotone_optimum);
    }
  }
}

TEST(Fg1d, SymmetryAndTriangle) {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    auto draw = [&] {
      std::vector<Atom> v;
      const auto n = rng.below(8);
      for (std::size_t i = 0; i < n; ++i) v.push_back({rng.uniform(0.01, 2.0), rng.uniform(0.1, 2.0)});
      return atoms(v);
    };
    const auto a = draw(), b = draw(), c = draw();
    for (double p : {1.0, 1.5, 2.0}) {
      EXPECT_EQ(fg1d(a, b, p), fg1d(b, a, p));
      const double ab = std::pow(fg1d(a, b, p), 1.0 / p);
      const double bc = std::pow(fg1d(b, c, p), 1.0 / p);
      const double ac = std::pow(fg1d(a, c, p), 1.0 / p);
      EXPECT_LE(ac, ab + bc + 1e-9);
    }
  }
}

}  // namespace
}  // namespace sfg
