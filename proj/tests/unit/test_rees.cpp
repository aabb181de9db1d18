#include <gtest/gtest.h>

#include "reeskit/rees.hpp"
#include "test_helpers.hpp"

using namespace testutil;

namespace {

RingPtr A2() { return ring(101, {"x", "y"}); }

Ideal inRees(const Ideal& ref, const std::string& text) { return I(ref.ring(), text); }

}  // namespace

TEST(Rees, ReesRingLayout) {
  auto S = reesRing(A2(), 3);
  EXPECT_EQ(S->numVars(), 5u);
  EXPECT_EQ(S->name(2), "w_0");
  ASSERT_NE(S->findBlock(kReesTag), nullptr);
  EXPECT_EQ(S->findBlock(kReesTag)->begin, 2u);
  auto Q = reesRing(ehuRing(), 1);
  EXPECT_TRUE(Q->hasQuotient());
  EXPECT_TRUE(promoteToRees(P(ehuRing(), "z^3"), Q).isZero() == false);
  EXPECT_TRUE(promoteToRees(P(ehuRing(), "x^5"), Q).isZero());
}

TEST(Rees, UniversalEmbedding) {
  auto R = A2();
  auto M = PresentedModule::fromIdeal(I(R, "x, y"));
  Matrix u = universalEmbedding(M);
  ASSERT_EQ(u.rows(), 1u);
  ASSERT_EQ(u.cols(), 2u);
  // Hom((x,y), R) = R: the embedding is the inclusion up to a unit.
  Polynomial c = u.at(0, 0);
  EXPECT_EQ(c.monic(), P(R, "x"));
  EXPECT_EQ(u.at(0, 1), P(R, "y").scaled(c.leadCoeff()));

  auto F = PresentedModule::cokernel(Matrix(R, 1, 0));
  EXPECT_EQ(universalEmbedding(F), Matrix::identity(R, 1));
}

TEST(Rees, EhuCounterexample) {
  auto R = ehuRing();
  auto M = PresentedModule::fromIdeal(I(R, "z"));
  Matrix phi = universalEmbedding(M);
  ASSERT_EQ(phi.rows(), 3u);
  ASSERT_EQ(phi.cols(), 1u);
  Ideal images(R, phi.column(0));
  EXPECT_EQ(images, I(R, "x, y, z"));
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(phi.at(r, 0).degree(), 1);

  Matrix iota = Matrix::fromRows(R, {{P(R, "z")}});
  Matrix psi = Matrix::fromRows(R, {{P(R, "x")}, {P(R, "y")}});
  Ideal Iiota = symmetricKernel(iota);
  Ideal Iphi = symmetricKernel(phi);
  Ideal Ipsi = symmetricKernel(psi);
  EXPECT_TRUE(Iiota == Iphi);
  EXPECT_FALSE(Ipsi == Iphi);
  EXPECT_NE(gradedPieceDim(5, Iphi, Grading::WBlock), gradedPieceDim(5, Ipsi, Grading::WBlock));
  for (int d = 1; d < 5; ++d)
    EXPECT_EQ(gradedPieceDim(d, Iphi, Grading::WBlock), gradedPieceDim(d, Ipsi, Grading::WBlock)) << d;
  EXPECT_EQ(reesIdeal(M), Iphi);
}

TEST(Rees, SymmetricKernelExamples) {
  auto R = A2();
  Ideal k = symmetricKernel(Matrix::rowVector(R, {P(R, "x"), P(R, "y")}));
  EXPECT_EQ(k, inRees(k, "y*w_0 - x*w_1"));
  EXPECT_TRUE(symmetricKernel(Matrix::identity(R, 1)).isZero());
}

TEST(Rees, SymmetricAlgebraIdeal) {
  auto R = A2();
  Ideal ci = symmetricAlgebraIdeal(PresentedModule::fromIdeal(I(R, "x, y")));
  EXPECT_EQ(ci, inRees(ci, "y*w_0 - x*w_1"));
  Ideal ver = symmetricAlgebraIdeal(PresentedModule::fromIdeal(I(R, "x^2, x*y, y^2")));
  EXPECT_EQ(ver, inRees(ver, "y*w_0 - x*w_1, y*w_1 - x*w_2"));
  EXPECT_TRUE(symmetricAlgebraIdeal(PresentedModule::cokernel(Matrix(R, 2, 0))).isZero());
}

TEST(Rees, ReesIdealExamples) {
  auto R = A2();
  auto ci = PresentedModule::fromIdeal(I(R, "x, y"));
  Ideal rci = reesIdeal(ci);
  EXPECT_EQ(rci, inRees(rci, "y*w_0 - x*w_1"));
  auto ver = PresentedModule::fromIdeal(I(R, "x^2, x*y, y^2"));
  Ideal rv = reesIdeal(ver);
  EXPECT_EQ(rv, inRees(rv, "y*w_0 - x*w_1, y*w_1 - x*w_2, w_0*w_2 - w_1^2"));
  EXPECT_EQ(reesIdeal(ver, P(R, "x^2")), rv);
  EXPECT_THROW(reesIdeal(ver, Polynomial(R)), Error);
  EXPECT_THROW(PresentedModule::fromIdeal(Ideal::zero(R)), Error);
}

TEST(Rees, LinearType) {
  auto R = A2();
  EXPECT_TRUE(isLinearType(PresentedModule::fromIdeal(I(R, "x, y"))));
  EXPECT_FALSE(isLinearType(PresentedModule::fromIdeal(I(R, "x^2, x*y, y^2"))));
  EXPECT_TRUE(isLinearType(PresentedModule::fromIdeal(I(R, "x^2 + y^3"))));
}

TEST(Rees, NormalCone) {
  auto R = A2();
  auto nc = normalCone(I(R, "x"));
  EXPECT_EQ(nc->numVars(), 3u);
  ASSERT_EQ(nc->quotient().size(), 1u);
  EXPECT_EQ(nc->quotient()[0].toString(), "x");
  auto nc2 = normalCone(I(R, "x, y"));
  Ideal q(nc2->ambient(), nc2->quotient());
  EXPECT_EQ(q, I(nc2->ambient(), "y*w_0 - x*w_1, x, y"));
  EXPECT_THROW(normalCone(Ideal::unit(R)), Error);
}

TEST(Rees, Multiplicity) {
  auto R = A2();
  EXPECT_EQ(multiplicity(I(R, "x, y")), 1);
  EXPECT_EQ(multiplicity(I(R, "x^2, y")), 2);
  for (unsigned d = 1; d <= 3; ++d) EXPECT_EQ(multiplicity(power(I(R, "x, y"), d)), d * d);
  EXPECT_THROW(multiplicity(I(R, "x")), Error);
  auto A3 = ring(101, {"x", "y", "z"});
  EXPECT_EQ(multiplicity(I(A3, "x^2, y^3, z")), 6);
}

TEST(Rees, MultiplicityMatchesNormalCone) {
  // dim_k I^n/I^{n+1} is the w-degree n piece of the normal cone; in two
  // variables its first difference is e(I).
  auto R = A2();
  for (const char* text : {"x, y", "x^2, y", "x^2, x*y, y^2", "x^3, y^2"}) {
    Ideal J = I(R, text);
    auto Q = normalCone(J);
    Ideal all = Ideal::unit(Q);
    std::int64_t h4 = gradedPieceDim(4, all, Grading::WBlock);
    std::int64_t h5 = gradedPieceDim(5, all, Grading::WBlock);
    EXPECT_EQ(h5 - h4, multiplicity(J)) << text;
  }
}

TEST(Rees, SpecialFiberAndSpread) {
  auto R = A2();
  Ideal f = specialFiberIdeal(I(R, "x^2, x*y, y^2"));
  EXPECT_EQ(f, I(f.ring(), "w_0*w_2 - w_1^2"));
  EXPECT_TRUE(specialFiberIdeal(I(R, "x, y")).isZero());
  EXPECT_TRUE(specialFiberIdeal(I(R, "x")).isZero());
  EXPECT_EQ(analyticSpread(I(R, "x, y")), 2);
  EXPECT_EQ(analyticSpread(I(R, "x^2, x*y, y^2")), 2);
  EXPECT_EQ(analyticSpread(I(R, "x")), 1);
  EXPECT_THROW(specialFiberIdeal(I(R, "x + 1")), Error);
}

TEST(Rees, Reductions) {
  auto R = A2();
  Ideal v = I(R, "x^2, x*y, y^2");
  auto self = isReduction(v, v);
  EXPECT_TRUE(self.accepted);
  EXPECT_EQ(self.witness, 0);
  auto c = isReduction(v, I(R, "x^2, y^2"));
  EXPECT_TRUE(c.accepted);
  EXPECT_EQ(c.witness, 1);
  EXPECT_FALSE(isReduction(v, I(R, "x^2"), 6).accepted);
  EXPECT_THROW(isReduction(I(R, "x"), I(R, "y")), Error);
  EXPECT_EQ(reductionNumber(v, I(R, "x^2, y^2")), 1);
  EXPECT_THROW(reductionNumber(v, I(R, "x^2"), 4), Error);

  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    ReductionOptions opt;
    opt.seed = seed;
    Ideal J = minimalReduction(v, opt);
    EXPECT_EQ(J.numGenerators(), 2u);
    EXPECT_TRUE(isReduction(v, J).accepted);
    Ideal K = minimalReduction(I(R, "x, y"), opt);
    EXPECT_EQ(reductionNumber(I(R, "x, y"), K), 0);
  }
  EXPECT_EQ(minimalReduction(I(R, "x^3")), I(R, "x^3"));
}

TEST(Rees, WhichGm) {
  auto R = A2();
  EXPECT_FALSE(whichGm(I(R, "x, y")).has_value());
  EXPECT_EQ(whichGm(I(R, "x^2, x*y, y^2")), std::optional<int>(2));
}

TEST(Rees, JacobianDual) {
  auto R = A2();
  Matrix phi = Matrix::fromRows(R, {{P(R, "y")}, {P(R, "-x")}});
  Matrix psi = jacobianDual(phi);
  ASSERT_EQ(psi.rows(), 2u);
  ASSERT_EQ(psi.cols(), 1u);
  EXPECT_EQ(psi.at(0, 0), P(psi.ring(), "-w_1"));
  EXPECT_EQ(psi.at(1, 0), P(psi.ring(), "w_0"));
  EXPECT_TRUE(jacobianDual(Matrix(R, 2, 1)).isZero());
  Matrix bad = Matrix::fromRows(R, {{P(R, "1")}, {P(R, "x")}});
  EXPECT_THROW(jacobianDual(bad), Error);
}

TEST(Rees, ExpectedReesIdeal) {
  auto R = A2();
  for (const char* text : {"x, y", "x^2, x*y", "x^2, x*y, y^2"}) {
    Ideal J = I(R, text);
    EXPECT_EQ(expectedReesIdeal(J), reesIdeal(PresentedModule::fromIdeal(J))) << text;
  }
}

TEST(Rees, MoreyUlrichSession) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Ideal I0 = moreyUlrichIdeal(seed);
    ASSERT_EQ(I0.numGenerators(), 3u);
    EXPECT_EQ(codimension(I0), 2);
    const int ell = analyticSpread(I0);
    EXPECT_EQ(ell, 2);
    ReductionOptions opt;
    opt.seed = seed;
    EXPECT_EQ(reductionNumber(I0, minimalReduction(I0, opt)), 1);
    auto gm = whichGm(I0);
    EXPECT_TRUE(!gm || *gm >= ell);
    auto M = PresentedModule::fromIdeal(I0);
    EXPECT_EQ(codimension(minorsIdeal(2, M.presentation)), 2);
    Ideal rees = reesIdeal(M);
    EXPECT_EQ(codimension(rees), 2);
    Matrix psi = jacobianDual(M.presentation);
    EXPECT_EQ(psi.rows(), 2u);
    EXPECT_EQ(psi.cols(), 2u);
    Ideal expected = expectedReesIdeal(I0);
    EXPECT_EQ(expected, rees);
    EXPECT_EQ(expected.numGenerators(), 3u);
  }
}

TEST(Rees, Properties) {
  auto R = ring(101, {"x", "y", "z"});
  const std::vector<std::pair<const char*, const char*>> corpus{
      {"x, y", "x"},           {"x*y, x*z, y*z", "x*y"}, {"x^2, y^2", "x^2"},
      {"x^2, x*y, y^2", "y^2"}, {"x*y, z^2", "z^2"},     {"x, y, z", "z"}};
  for (const auto& [text, f] : corpus) {
    Ideal J = I(R, text);
    auto M = PresentedModule::fromIdeal(J);
    Ideal rees = reesIdeal(M);
    Ideal I0 = symmetricAlgebraIdeal(M);
    EXPECT_EQ(rees, reesIdeal(M, P(R, f))) << text;
    EXPECT_TRUE(rees.contains(I0)) << text;
    EXPECT_EQ(isLinearType(M), rees == I0) << text;
    // Linear part: GB elements of w-degree one already lie in I0.
    const auto* wb = rees.ring()->findBlock(kReesTag);
    std::vector<int> wdeg(rees.ring()->numVars(), 0);
    for (std::size_t i = wb->begin; i < wb->end; ++i) wdeg[i] = 1;
    for (const auto& g : rees.basis())
      if (g.isHomogeneous(wdeg) && g.degreeWith(wdeg) == 1) EXPECT_TRUE(I0.contains(g)) << text;
    Matrix psi = jacobianDual(M.presentation);
    Matrix lhs = Matrix::rowVector(psi.ring(), {P(psi.ring(), "x"), P(psi.ring(), "y"), P(psi.ring(), "z")}) * psi;
    Matrix T(psi.ring(), 1, J.numGenerators());
    for (std::size_t i = 0; i < J.numGenerators(); ++i) T.set(0, i, P(psi.ring(), "w_" + std::to_string(i)));
    EXPECT_TRUE((lhs - T * promoteToRees(M.presentation, psi.ring())).isZero()) << text;
    for (const auto& m : minorsIdeal(psi.rows(), psi).generators()) EXPECT_TRUE(rees.contains(m)) << text;
    int ell = analyticSpread(J);
    EXPECT_LE(codimension(J), ell) << text;
    EXPECT_LE(ell, 3) << text;
  }
}
