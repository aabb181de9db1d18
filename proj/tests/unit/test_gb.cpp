#include <gtest/gtest.h>

#include <random>

#include "test_helpers.hpp"

using namespace testutil;

TEST(Groebner, SmallExamples) {
  auto A2 = ring(101, {"x", "y"});
  auto g = computeGroebner(A2, {P(A2, "x^2 - y"), P(A2, "y")});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.elements()[0].toString(), "y");
  EXPECT_EQ(g.elements()[1].toString(), "x^2");
  auto h = computeGroebner(A2, {P(A2, "x")});
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.elements()[0].toString(), "x");
}

TEST(Groebner, BuchbergerContractOnRandomIdeals) {
  auto R = ring(32003, {"a", "b", "c", "d"});
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(randomPoly(R, 2, seed * 10 + k) + randomPoly(R, 1, seed * 10 + k + 5));
    GroebnerOptions opt;
    opt.trackRepresentation = true;
    auto gb = computeGroebner(R, gens, opt);
    EXPECT_TRUE(satisfiesBuchbergerCriterion(gb.elements()));
    for (const auto& f : gens) EXPECT_TRUE(gb.contains(f));
    for (std::size_t i = 0; i < gb.size(); ++i) {
      Polynomial s(R);
      for (std::size_t j = 0; j < gens.size(); ++j) s += (*gb.representation())[i][j] * gens[j];
      EXPECT_EQ(s, gb.elements()[i]);
      EXPECT_EQ(gb.elements()[i].leadCoeff(), 1u);
      for (std::size_t j = 0; j < gb.size(); ++j)
        if (i != j)
          for (std::size_t t = 0; t < gb.elements()[i].size(); ++t)
            EXPECT_FALSE(divides(gb.elements()[j].leadExps(), gb.elements()[i].exps(t)));
    }
  }
}

TEST(Groebner, ModuleSpanOfColumns) {
  // Columns (x, -y) and (y, x) of the matrix [x y; -y x].
  auto A2 = ring(101, {"x", "y"});
  Matrix M = Matrix::fromRows(A2, {{P(A2, "x"), P(A2, "y")}, {P(A2, "-y"), P(A2, "x")}});
  Ring::Spec s = specOf(*A2);
  s.blocks.insert(s.blocks.begin(), {"position", {"e0", "e1"}});
  s.weights.insert(s.weights.begin(), 2, 0);
  s.order.insert(s.order.begin(), {2, OrderKind::Lex});
  auto MR = Ring::make(s);
  std::vector<Polynomial> cols = {P(MR, "x*e0 - y*e1"), P(MR, "y*e0 + x*e1")};
  GroebnerOptions opt;
  opt.moduleRank = 2;
  auto gb = computeGroebner(MR, cols, opt);
  EXPECT_TRUE(satisfiesBuchbergerCriterion(gb.elements(), 2));
  for (const auto& c : cols) EXPECT_TRUE(gb.contains(c));
  EXPECT_EQ(gb.size(), 3u);
}

TEST(NormalForm, Examples) {
  auto A2 = ring(101, {"x", "y"});
  EXPECT_EQ(I(A2, "x^2 - y").normalForm(P(A2, "x^2")).toString(), "y");
  EXPECT_TRUE(I(A2, "y, x^2").normalForm(P(A2, "y")).isZero());
  EXPECT_TRUE(I(A2, "x").normalForm(P(A2, "0")).isZero());
}

TEST(NormalForm, QuotientsReconstruct) {
  auto R = ring(101, {"x", "y", "z"});
  auto basis = I(R, "x*y - z, y^2 - x, z^2 - y").basis();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = randomPoly(R, 3, rng()) + randomPoly(R, 2, rng());
    Division d = divideWithQuotients(f, basis);
    Polynomial s = d.remainder;
    for (std::size_t i = 0; i < basis.size(); ++i) s += d.quotients[i] * basis[i];
    EXPECT_EQ(s, f);
    for (std::size_t t = 0; t < d.remainder.size(); ++t)
      for (const auto& b : basis) EXPECT_FALSE(divides(b.leadExps(), d.remainder.exps(t)));
  }
}

TEST(Eliminate, Examples) {
  auto R = ring(101, {"t", "x", "y"});
  auto E = eliminate(I(R, "x - t^2, y - t^3"), std::vector<std::string>{"t"});
  EXPECT_EQ(E, I(R, "y^2 - x^3"));
  auto same = I(R, "x - t^2");
  EXPECT_EQ(eliminate(same, std::vector<std::string>{}), same);
  EXPECT_TRUE(eliminate(same, std::vector<std::string>{"t"}).isZero());
  auto K = eliminate(I(R, "x - t^2, y - t^3, x*y - t"), std::vector<std::string>{"t"});
  for (const auto& g : K.generators()) {
    EXPECT_FALSE(g.involves(0));
    EXPECT_TRUE(I(R, "x - t^2, y - t^3, x*y - t").contains(g));
  }
}

TEST(KernelOfRingMap, Examples) {
  auto W = ring(101, {"w_0", "w_1"});
  auto S = ring(101, {"s"});
  auto K = kernelOfRingMap(RingMap(W, S, {P(S, "s^2"), P(S, "s^3")}));
  EXPECT_EQ(K, I(W, "w_0^3 - w_1^2"));
  EXPECT_EQ(dimension(K), 1);
  EXPECT_TRUE(kernelOfRingMap(RingMap::identity(W)).isZero());
  auto w = ring(101, {"w"});
  Ring::Spec spec;
  spec.characteristic = 101;
  spec.blocks.push_back({kBaseTag, {"x"}});
  auto X = makeRing(spec, "x");
  EXPECT_EQ(kernelOfRingMap(RingMap(w, X, {P(X, "x")})), I(w, "w"));
}

TEST(Colon, Examples) {
  auto A2 = ring(101, {"x", "y"});
  EXPECT_EQ(saturate(I(A2, "x^2*y"), P(A2, "x")), I(A2, "y"));
  EXPECT_EQ(quotient(I(A2, "x*y, y^2"), P(A2, "y")), I(A2, "x, y"));
  auto J = I(A2, "x^3 - y, x*y^2");
  EXPECT_EQ(quotient(J, Ideal::unit(A2)), J);
  EXPECT_THROW(saturate(J, Ideal::zero(A2)), Error);
}

TEST(Colon, SaturationProperties) {
  auto R = ring(101, {"x", "y", "z"});
  std::vector<std::pair<std::string, std::string>> cases = {
      {"x^2*y, x*y^2*z", "x"}, {"x*z - y^2, x^3 - y*z^2", "x"}, {"x^2*(y - z), y^3*x", "x + y"},
      {"(x - 1)^2*y, x*y*z", "y"}};
  for (const auto& [gens, fs] : cases) {
    auto Iv = I(R, gens);
    auto f = P(R, fs);
    auto sat = saturate(Iv, f);
    EXPECT_EQ(quotient(sat, f), sat) << gens;
    EXPECT_TRUE(sat.contains(Iv));
    EXPECT_EQ(saturateRabinowitsch(Iv, f), sat) << gens;
    bool found = false;
    for (unsigned N = 0; N <= 8 && !found; ++N) {
      Ideal prod = Ideal(R, {f.pow(N)}) * sat;
      found = Iv.contains(prod);
    }
    EXPECT_TRUE(found) << gens;
  }
}

TEST(Intersect, Examples) {
  auto A2 = ring(101, {"x", "y"});
  EXPECT_EQ(intersect(I(A2, "x"), I(A2, "y")), I(A2, "x*y"));
  auto Iv = I(A2, "x^2 - y, x*y");
  EXPECT_EQ(intersect(Iv, Iv), Iv);
  EXPECT_EQ(intersect(I(A2, "x^2"), I(A2, "x")), I(A2, "x^2"));
  EXPECT_EQ(intersect(I(A2, "x - 1, y"), I(A2, "x + 1, y")), I(A2, "x^2 - 1, y"));
}

TEST(DimensionAndDegree, Examples) {
  auto A2 = ring(101, {"x", "y"});
  auto a = dimensionAndDegree(I(A2, "x"));
  EXPECT_EQ(a.dim, 1);
  EXPECT_EQ(a.degree, 1);
  auto b = dimensionAndDegree(I(A2, "x^2 - y"));
  EXPECT_EQ(b.dim, 1);
  EXPECT_EQ(b.degree, 2);
  auto c = dimensionAndDegree(I(A2, "x, y"));
  EXPECT_EQ(c.dim, 0);
  EXPECT_EQ(c.degree, 1);
  EXPECT_EQ(dimension(Ideal::unit(A2)), -1);
  EXPECT_EQ(codimension(I(A2, "x")), 1);
  // Degree of a squarefree principal ideal equals the degree of the generator.
  auto R = ring(101, {"x", "y", "z"});
  EXPECT_EQ(dimensionAndDegree(I(R, "x*y*z + x^2 - y")).degree, 3);
  EXPECT_EQ(dimensionAndDegree(I(R, "(x - y)*(x + 2*z)*(y - 1)*(z + 3)")).degree, 4);
}

TEST(HilbertSeries, Examples) {
  auto A2 = ring(101, {"x", "y"});
  auto h = hilbertSeries(I(A2, "x^2"));
  EXPECT_EQ(h.numerator, (IntPoly{1, 0, -1}));
  EXPECT_EQ(h.toString(), "(1 - T^2)/(1 - T)^2");
  EXPECT_EQ(hilbertSeries(Ideal::zero(A2)).numerator, (IntPoly{1}));
  auto p = hilbertSeries(I(A2, "x, y"));
  EXPECT_EQ(p.numerator, (IntPoly{1, -2, 1}));
  EXPECT_EQ(p.coefficient(0), 1);
  EXPECT_EQ(p.coefficient(1), 0);
  EXPECT_THROW(hilbertSeries(I(A2, "x^2 - y")), Error);
  // Series coefficients agree with direct monomial counts.
  auto R = ring(101, {"x", "y", "z"});
  auto J = I(R, "x^2*y, y^3, x*z^2 - y^3, z^4");
  auto hs = hilbertSeries(J);
  for (int d = 0; d < 8; ++d) {
    std::int64_t count = 0;
    for (const auto& m : monomialsOfDegree(R, d)) {
      bool standard = true;
      for (const auto& l : leadMonomials(J))
        if (divides(l, m)) standard = false;
      count += standard;
    }
    EXPECT_EQ(hs.coefficient(d), count) << d;
  }
}

TEST(KernelOfMatrix, Examples) {
  auto A2 = ring(101, {"x", "y"});
  auto k = kernelOfMatrix(Matrix::rowVector(A2, {P(A2, "x"), P(A2, "y")}));
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k.column(0)[0].monic(), P(A2, "y").monic());
  EXPECT_EQ(k.column(0)[0] * P(A2, "x") + k.column(0)[1] * P(A2, "y"), P(A2, "0"));
  EXPECT_EQ(kernelOfMatrix(Matrix::identity(A2, 2)).cols(), 0u);
  auto k2 = kernelOfMatrix(Matrix::rowVector(A2, {P(A2, "x^2"), P(A2, "x*y")}));
  ASSERT_EQ(k2.cols(), 1u);
  EXPECT_TRUE((Matrix::rowVector(A2, {P(A2, "x^2"), P(A2, "x*y")}) * k2).isZero());
  EXPECT_EQ(k2.column(0)[1].degree(), 1);
}

TEST(KernelOfMatrix, ColumnsAreSyzygies) {
  auto R = ring(101, {"x", "y", "z"});
  Matrix A = Matrix::fromRows(R, {{P(R, "x"), P(R, "y"), P(R, "z")}, {P(R, "y"), P(R, "z"), P(R, "x")}});
  auto K = kernelOfMatrix(A);
  EXPECT_GE(K.cols(), 1u);
  EXPECT_TRUE((A * K).isZero());
  auto V = Matrix::rowVector(R, {P(R, "x^2"), P(R, "x*y"), P(R, "y^2")});
  auto KV = kernelOfMatrix(V);
  EXPECT_EQ(KV.cols(), 2u);
  EXPECT_TRUE((V * KV).isZero());
}

TEST(Minors, Examples) {
  auto R = ring(101, {"a", "b", "c", "d", "e", "f"});
  Matrix M = Matrix::fromRows(R, {{P(R, "a"), P(R, "b"), P(R, "c")}, {P(R, "d"), P(R, "e"), P(R, "f")}});
  auto m2 = minorsIdeal(2, M);
  EXPECT_EQ(m2.numGenerators(), 3u);
  EXPECT_EQ(m2, I(R, "a*e - b*d, a*f - c*d, b*f - c*e"));
  EXPECT_TRUE(minorsIdeal(0, M).isUnit());
  EXPECT_TRUE(minorsIdeal(3, Matrix::identity(R, 2)).isZero());
}

TEST(Trim, Examples) {
  auto A2 = ring(101, {"x", "y"});
  EXPECT_EQ(trimHomogeneous(I(A2, "x, x^2, y")).numGenerators(), 2u);
  EXPECT_EQ(trimHomogeneous(I(A2, "x^2 + y^2, y^2")).numGenerators(), 2u);
  EXPECT_EQ(trimHomogeneous(Ideal::zero(A2)).numGenerators(), 0u);
  EXPECT_THROW(trimHomogeneous(I(A2, "x - 1")), Error);
}

TEST(GradedPieceDim, Examples) {
  auto A2 = ring(101, {"x", "y"});
  EXPECT_EQ(gradedPieceDim(1, I(A2, "x, y"), Grading::Total), 2);
  EXPECT_EQ(gradedPieceDim(2, I(A2, "x, y"), Grading::Total), 3);
  EXPECT_EQ(gradedPieceDim(3, Ideal::zero(A2), Grading::Total), 0);
  auto R = reesRing(101, {"x", "y"}, 2);
  Ring::Spec s = specOf(*R);
  auto Rq = quotientRing(I(R, "x^2, y^2"));
  // In (k[x,y]/(x^2,y^2))[w_0,w_1] the w-degree-1 piece of (w_0) has k-dimension 4.
  EXPECT_EQ(gradedPieceDim(1, I(Rq, "w_0"), Grading::WBlock), 4);
  EXPECT_THROW(gradedPieceDim(1, I(R, "w_0"), Grading::WBlock), Error);
}

TEST(Groebner, ModuleBasisAsMatrix) {
  auto A2 = ring(101, {"x", "y"});
  Matrix M = Matrix::fromRows(A2, {{P(A2, "x"), P(A2, "y")}, {P(A2, "-y"), P(A2, "x")}});
  Matrix G = moduleGroebnerBasis(M);
  EXPECT_EQ(G.rows(), 2u);
  EXPECT_EQ(G.cols(), 3u);
  EXPECT_EQ(G.toString(), "matrix{{x, y, 0}, {-y, x, x^2 + y^2}}");
  Matrix both = Matrix::fromColumns(A2, 2, {M.column(0), M.column(1), G.column(0), G.column(1), G.column(2)});
  EXPECT_EQ(moduleGroebnerBasis(both), G);
  EXPECT_EQ(moduleGroebnerBasis(G), G);
}
