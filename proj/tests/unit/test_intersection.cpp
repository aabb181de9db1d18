#include <gtest/gtest.h>

#include "reeskit/intersection.hpp"
#include "test_helpers.hpp"

using namespace testutil;

namespace {

RingPtr A2() { return ring(101, {"x", "y"}); }

}  // namespace

TEST(Intersection, ConicAndTangentLine) {
  auto R = A2();
  auto c = intersectInP(I(R, "x^2 - y"), I(R, "y"));
  EXPECT_EQ(toString(c), "{{2, ideal[ x, y ]}}");
}

TEST(Intersection, QuarticAndLine) {
  auto R = A2();
  auto c = intersectInP(I(R, "x^4 + y^3 + 1"), I(R, "y"));
  EXPECT_EQ(toString(c), "{{1, ideal[ x^2 - 10, y ]}, {1, ideal[ x^2 + 10, y ]}}");
}

TEST(Intersection, ImproperIntersections) {
  auto R = A2();
  auto c = intersectInP(I(R, "x^2*y"), I(R, "x*y^2"));
  EXPECT_EQ(toString(c), "{{2, ideal[ y ]}, {2, ideal[ x ]}, {5, ideal[ x, y ]}}");
  auto s = intersectInP(I(R, "x^2*y"), I(R, "x^2*y"));
  EXPECT_EQ(toString(s), "{{1, ideal[ y ]}, {4, ideal[ x ]}, {4, ideal[ x, y ]}}");
}

TEST(Intersection, TransverseLines) {
  auto R = A2();
  EXPECT_EQ(toString(intersectInP(I(R, "x"), I(R, "y"))), "{{1, ideal[ x, y ]}}");
  EXPECT_TRUE(intersectInP(I(R, "x"), I(R, "x - 1")).empty());
}

TEST(Intersection, Properties) {
  auto R = A2();
  const std::vector<std::pair<const char*, const char*>> cases{
      {"x^2 - y", "y"}, {"x^4 + y^3 + 1", "y"}, {"x^2*y", "x*y^2"}, {"x^2*y", "x^2*y"},
      {"y^2 - x^3", "y"}, {"x^2 + y^2 - 1", "x - y"}};
  for (const auto& [a, b] : cases) {
    Ideal Ia = I(R, a), Ib = I(R, b);
    auto comps = intersectInP(Ia, Ib);
    int bezout = 0;
    bool proper = true;
    for (const auto& c : comps) {
      EXPECT_GE(c.multiplicity, 1);
      EXPECT_TRUE(c.prime.contains(Ia + Ib)) << a << " / " << b;
      EXPECT_TRUE(c.certified);
      if (dimension(c.prime) != 0) proper = false;
      bezout += c.multiplicity * static_cast<int>(dimensionAndDegree(c.prime).degree);
    }
    if (proper) EXPECT_EQ(bezout, Ia.generators()[0].degree() * Ib.generators()[0].degree()) << a;
    for (std::uint64_t seed = 1; seed < 3; ++seed) {
      DistinguishedOptions opt;
      opt.decompose.seed = seed;
      EXPECT_EQ(toString(intersectInP(Ia, Ib, opt)), toString(comps)) << a << " seed " << seed;
    }
  }
}

TEST(Intersection, DistinguishedAlongProjection) {
  auto R = A2();
  auto Q = quotientRing(I(R, "y"));
  RingMap proj(R, Q, {P(Q, "x"), P(Q, "y")});
  auto c = distinguished(proj, I(R, "x^2 - y"));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].multiplicity, 2);
  EXPECT_EQ(c[0].prime, I(R, "x, y"));
  EXPECT_THROW(distinguished(proj, Ideal::unit(R)), Error);
}
