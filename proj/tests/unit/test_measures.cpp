#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sfg/error.hpp"
#include "sfg/format.hpp"
#include "sfg/measures.hpp"
#include "test_util.hpp"

namespace sfg {
namespace {

PersistenceMeasure parse(const std::string& text) {
  std::istringstream in(text);
  return read_measure(in);
}

TEST(Pers, EmptyMeasureIsZero) {
  EXPECT_EQ(pers(PersistenceMeasure{}, 1.0), 0.0);
  EXPECT_EQ(pers_infty(PersistenceMeasure{}), 0.0);
}

TEST(Pers, SinglePointOrderTwo) {
  // d((0,2), diagonal) = sqrt2, so Pers_2^2 = 2.
  const PersistenceMeasure m({{{0.0, 2.0}, 1.0}});
  EXPECT_NEAR(std::pow(pers(m, 2.0), 2.0), 2.0, 1e-14);
  EXPECT_NEAR(pers(m, 2.0), std::sqrt(2.0), 1e-14);
}

TEST(Pers, TwoPointsOrderOne) {
  const PersistenceMeasure m({{{0.0, 1.0}, 1.0}, {{0.0, 3.0}, 1.0}});
  EXPECT_NEAR(pers(m, 1.0), 2.0 * std::sqrt(2.0), 1e-14);
}

TEST(Pers, RejectsOrderBelowOne) {
  EXPECT_THROW(pers(PersistenceMeasure{}, 0.5), InvalidParameter);
}

TEST(Pers, InftyTakesLargestGap) {
  const PersistenceMeasure m({{{0.0, 2.0}, 1.0}, {{1.0, 2.0}, 5.0}});
  EXPECT_NEAR(pers_infty(m), std::sqrt(2.0), 1e-15);
  const PersistenceMeasure dirac({{{-3.0, 3.0}, 1.0}});
  EXPECT_NEAR(pers_infty(dirac), 3.0 * std::sqrt(2.0), 1e-14);
}

TEST(Pers, MassScalingAndUnionAdditivity) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_weighted_diagram(rng, 0, 12);
    const auto b = testing::random_weighted_diagram(rng, 0, 12);
    for (double p : {1.0, 1.5, 2.0}) {
      const double pa = std::pow(pers(a, p), p);
      const double pb = std::pow(pers(b, p), p);
      EXPECT_NEAR(std::pow(pers(a.scaled(2.5), p), p), 2.5 * pa, 1e-12 * (1.0 + pa));
      EXPECT_NEAR(std::pow(pers(join(a, b), p), p), pa + pb, 1e-12 * (1.0 + pa + pb));
    }
  }
}

TEST(Normalize, DividesMassByGap) {
  const PersistenceMeasure m({{{0.0, 2.0 * std::sqrt(2.0)}, 1.0}});
  EXPECT_NEAR(normalize(m)[0].mass, 0.5, 1e-15);
  const PersistenceMeasure m2({{{0.0, 1.0}, 3.0}});
  EXPECT_NEAR(normalize(m2)[0].mass, 3.0 * std::sqrt(2.0), 1e-14);
  EXPECT_TRUE(normalize(PersistenceMeasure{}).empty());
}

TEST(Normalize, ShiftsPersistenceOrder) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::random_weighted_diagram(rng, 1, 20);
    const auto mt = normalize(m);
    const auto mtt = normalize(mt);
    for (double p : {1.0, 2.0, 3.5}) {
      double lhs = 0.0, rhs = 0.0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const double d = diagonal_distance(m[i].point);
        lhs += mt[i].mass * std::pow(d, p + 1.0);
        rhs += m[i].mass * std::pow(d, p);
      }
      EXPECT_NEAR(lhs, rhs, 1e-12 * rhs);
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      const double d = diagonal_distance(m[i].point);
      EXPECT_NEAR(mtt[i].mass, m[i].mass / (d * d), 1e-12 * mtt[i].mass);
    }
  }
}

TEST(Validation, RejectsBadEntries) {
  EXPECT_THROW(PersistenceMeasure({{{1.0, 1.0}, 1.0}}), ValidationError);
  EXPECT_THROW(PersistenceMeasure({{{2.0, 1.0}, 1.0}}), ValidationError);
  EXPECT_THROW(PersistenceMeasure({{{0.0, INFINITY}, 1.0}}), ValidationError);
  EXPECT_THROW(PersistenceMeasure({{{0.0, 1.0}, 0.0}}), ValidationError);
  EXPECT_THROW(PersistenceMeasure({{{0.0, 1.0}, -2.0}}), ValidationError);
}

TEST(DiagramFormat, MassDefaultsToOne) {
  const auto m = parse("0.0,1.0\n");
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].point, (PlanePoint{0.0, 1.0}));
  EXPECT_EQ(m[0].mass, 1.0);
}

TEST(DiagramFormat, ExplicitMassCommentsAndBlanks) {
  const auto m = parse("# header\n\n0.0,1.0,2.5\n  1e-1 , 3E0 \n");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].mass, 2.5);
  EXPECT_EQ(m[1].point, (PlanePoint{0.1, 3.0}));
}

TEST(DiagramFormat, BirthNotBelowDeathIsValidationError) {
  try {
    parse("0,2\n1.0,1.0\n");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("birth must be strictly less than death"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(DiagramFormat, MalformedLineReportsLineNumber) {
  try {
    parse("0,1\n# c\n0,abc\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse("1\n"), ParseError);
  EXPECT_THROW(parse("1,2,3,4\n"), ParseError);
  EXPECT_THROW(parse("0,inf\n"), ValidationError);
  EXPECT_THROW(parse("0,1,0\n"), ValidationError);
}

TEST(DiagramFormat, RoundTripIsExact) {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = testing::random_weighted_diagram(rng, 0, 30);
    m = m.scaled(1.0 / 3.0);
    std::stringstream io;
    write_measure(io, m);
    EXPECT_EQ(read_measure(io), m);
  }
}

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(format_real(0.25), "0.25");
  EXPECT_EQ(format_real(1.0), "1.0");
  EXPECT_EQ(format_real(0.0), "0.0");
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_real(2.0 / 3.0), "0.666666666667");
  EXPECT_EQ(format_real(1.5e-7), "1.5e-07");
}

}  // namespace
}  // namespace sfg
