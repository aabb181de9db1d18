#include <gtest/gtest.h>

#include "reeskit/decompose.hpp"
#include "test_helpers.hpp"

using namespace testutil;

namespace {
std::vector<std::string> show(const std::vector<ComponentReport>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.prime.toString() + (c.certified ? "" : " (unverified)"));
  return out;
}
}  // namespace

TEST(MinimalPrimes, TacnodeSplits) {
  auto R = ring(32003, {"x", "y"});
  auto cs = minimalPrimes(I(R, "x^2 - y^4"));
  EXPECT_EQ(show(cs), (std::vector<std::string>{"ideal[ y^2 - x ]", "ideal[ y^2 + x ]"}));
}

TEST(MinimalPrimes, QuarticOnLine) {
  auto R = ring(101, {"x", "y"});
  auto cs = minimalPrimes(I(R, "y, x^4 + 1"));
  EXPECT_EQ(show(cs), (std::vector<std::string>{"ideal[ x^2 - 10, y ]", "ideal[ x^2 + 10, y ]"}));
}

TEST(MinimalPrimes, RadicalOfNonReduced) {
  auto R = ring(101, {"x", "y"});
  EXPECT_EQ(show(minimalPrimes(I(R, "x^2, x*y"))), (std::vector<std::string>{"ideal[ x ]"}));
  EXPECT_THROW(minimalPrimes(Ideal::unit(R)), Error);
}

TEST(MinimalPrimes, ZeroDimensionalConjugatePoints) {
  // Points (a, a^2) with a^2 = 10 are conjugate; the ideal is prime over GF(101).
  auto R = ring(101, {"x", "y", "z"});
  auto cs = minimalPrimes(I(R, "x^2 - 10, y^2 - 10, z - 1"));
  ASSERT_EQ(cs.size(), 2u);
  for (const auto& c : cs) {
    EXPECT_TRUE(c.certified);
    EXPECT_EQ(dimension(c.prime), 0);
    EXPECT_TRUE(c.prime.contains(I(R, "x^2 - 10, y^2 - 10, z - 1")));
  }
}

TEST(MinimalPrimes, Properties) {
  auto R = ring(101, {"x", "y", "z"});
  for (std::string gens : {"x*y, y*z, z*x", "x^2*y - y^3, z*(x - y)", "(x - 1)^2*(y + z), x*z^2",
                           "x*y - z^2, x^2*z - y^3"}) {
    auto J = I(R, gens);
    auto cs = minimalPrimes(J);
    ASSERT_FALSE(cs.empty()) << gens;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      EXPECT_TRUE(cs[i].prime.contains(J)) << gens;
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (i != j) EXPECT_FALSE(cs[i].prime.contains(cs[j].prime)) << gens;
    }
    // Radical agreement: the product of the candidates lies in the radical of J.
    Ideal prod = Ideal::unit(R);
    for (const auto& c : cs) prod = prod * c.prime;
    for (const auto& g : prod.generators()) {
      bool inRadical = saturateRabinowitsch(J, g).isUnit();
      EXPECT_TRUE(inRadical) << gens << " : " << g.toString();
    }
  }
}
