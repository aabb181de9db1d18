#include <gtest/gtest.h>

#include "reeskit/blowup.hpp"
#include "reeskit/decompose.hpp"
#include "test_helpers.hpp"

using namespace testutil;

namespace {

std::string primesOf(const Ideal& J) {
  std::string s;
  for (const auto& c : minimalPrimes(J)) s += c.prime.toString() + ";";
  return s;
}

}  // namespace

TEST(Blowup, Charts) {
  auto R = ring(32003, {"x", "y"});
  auto chart = blowupOf(I(R, "x, y^2"));
  EXPECT_EQ(chart.reesIdeal, I(chart.reesIdeal.ring(), "y^2*w_0 - x*w_1"));
  EXPECT_EQ(chart.irrelevant, I(chart.ring, "w_0, w_1"));
  EXPECT_EQ(chart.proj.apply(P(R, "x")), P(chart.ring, "x"));
  auto lin = blowupOf(I(R, "x, y"));
  EXPECT_EQ(lin.reesIdeal, I(lin.reesIdeal.ring(), "y*w_0 - x*w_1"));
  EXPECT_TRUE(blowupOf(I(R, "x^2 + y")).reesIdeal.isZero());
  EXPECT_THROW(blowupOf(Ideal::unit(R)), Error);
  EXPECT_THROW(blowupOf(Ideal::zero(R)), Error);
}

TEST(Blowup, TacnodeSession) {
  auto R = ring(32003, {"x", "y"});
  Ideal tacnode = I(R, "x^2 - y^4");
  auto chart = blowupOf(I(R, "x, y^2"));
  Ideal total = totalTransform(chart, tacnode);
  EXPECT_EQ(total, I(chart.ring, "x^2 - y^4"));
  EXPECT_TRUE(totalTransform(chart, Ideal::zero(R)).isZero());
  EXPECT_EQ(primesOf(total), "ideal[ x, y ];ideal[ y^2 - x, w_0 - w_1 ];ideal[ y^2 + x, w_0 + w_1 ];");
  Ideal strict = strictTransform(chart, tacnode);
  EXPECT_EQ(primesOf(strict), "ideal[ y^2 - x, w_0 - w_1 ];ideal[ y^2 + x, w_0 + w_1 ];");
  EXPECT_EQ(saturate(strict, chart.exceptional), strict);
  EXPECT_TRUE(isSmoothAwayFromIrrelevant(chart, strict));
  EXPECT_FALSE(isSmoothAwayFromIrrelevant(chart, total));
}

TEST(Blowup, StrictTransformOfSmoothCurve) {
  auto R = ring(101, {"x", "y"});
  auto chart = blowupOf(I(R, "x, y"));
  Ideal strict = strictTransform(chart, I(R, "y"));
  EXPECT_EQ(strict, I(chart.ring, "y, w_1"));
  EXPECT_TRUE(isSmoothAwayFromIrrelevant(chart, strict));
  // A curve missing the center: strict = total.
  Ideal far = I(R, "x - 1");
  EXPECT_EQ(strictTransform(chart, far), totalTransform(chart, far));
}

TEST(Blowup, SingularLocus) {
  auto R = ring(101, {"x", "y"});
  Ideal s = singularLocusIdeal(I(R, "x^2 - y^4"));
  EXPECT_EQ(minimalPrimes(s)[0].prime, I(R, "x, y"));
  EXPECT_EQ(minimalPrimes(s).size(), 1u);
  EXPECT_TRUE(singularLocusIdeal(I(R, "x^2 - y")).isUnit());
  EXPECT_TRUE(singularLocusIdeal(Ideal::zero(R)).isUnit());
  EXPECT_TRUE(singularLocusIdeal(I(R, "x^3 + y^3 + 1")).isUnit());
}
