// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "reeskit/blowup.hpp"
#include "reeskit/intersection.hpp"
#include "reeskit/rees.hpp"
#include "reeskit/ring_map.hpp"
#include "reeskit/script.hpp"

using namespace reeskit;

namespace {

struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

RingPtr ring(std::uint32_t p, const std::vector<std::string>& names) { return Ring::make(p, names); }
Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }
Ideal I(const RingPtr& r, const std::string& s) { return Ideal::parse(r, s); }

void ehu(Checker& c) {
  auto R0 = ring(5, {"x", "y", "z"});
  auto R = quotientRing(I(R0, "x^5, y^5") + power(I(R0, "x, y, z"), 6));
  auto M = PresentedModule::fromIdeal(I(R, "z"));
  Ideal Iphi = symmetricKernel(universalEmbedding(M));
  Ideal Iiota = symmetricKernel(Matrix::fromRows(R, {{P(R, "z")}}));
  Ideal Ipsi = symmetricKernel(Matrix::fromRows(R, {{P(R, "x")}, {P(R, "y")}}));
  c.expect(Iiota == Iphi, "Iiota == Iphi should be true");
  c.expect(!(Ipsi == Iphi), "Ipsi == Iphi should be false");
  c.expect(gradedPieceDim(5, Iphi, Grading::WBlock) != gradedPieceDim(5, Ipsi, Grading::WBlock),
           "w-degree 5 pieces should differ");
}

void moreyUlrich(Checker& c) {
  auto S = ring(101, {"a_0", "a_1"});
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    std::vector<std::vector<Polynomial>> rows{{P(S, "a_0"), P(S, "a_1")}};
    for (std::uint64_t i = 1; i < 3; ++i)
      rows.push_back({randomPoly(S, 2, seed * 100 + 2 * i), randomPoly(S, 2, seed * 100 + 2 * i + 1)});
    Ideal J = minorsIdeal(2, Matrix::fromRows(S, rows));
    int ell = analyticSpread(J);
    c.expect(ell == 2, "analytic spread " + std::to_string(ell) + tag);
    ReductionOptions opt;
    opt.seed = seed;
    c.expect(reductionNumber(J, minimalReduction(J, opt)) == 1, "reduction number" + tag);
    auto gm = whichGm(J);
    c.expect(!gm || *gm >= ell, "whichGm" + tag);
    Ideal rees = reesIdeal(PresentedModule::fromIdeal(J));
    c.expect(codimension(rees) == 2, "codim of the Rees ideal" + tag);
    c.expect(expectedReesIdeal(J) == rees, "trim(I0 + minors psi) == reesIdeal" + tag);
  }
}

bool sameMultiset(std::vector<WeightedComponent> got, const std::vector<std::pair<int, Ideal>>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& [m, p] : want) {
    auto it = std::find_if(got.begin(), got.end(),
                           [&](const WeightedComponent& w) { return w.multiplicity == m && w.prime == p; });
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

void intersections(Checker& c) {
  auto R = ring(101, {"x", "y"});
  c.expect(sameMultiset(intersectInP(I(R, "x^2 - y"), I(R, "y")), {{2, I(R, "y, x")}}), "conic and tangent");
  c.expect(sameMultiset(intersectInP(I(R, "x^4 + y^3 + 1"), I(R, "y")),
                        {{1, I(R, "y, x^2 + 10")}, {1, I(R, "y, x^2 - 10")}}),
           "quartic and line");
  c.expect(sameMultiset(intersectInP(I(R, "x^2*y"), I(R, "x*y^2")),
                        {{2, I(R, "x")}, {5, I(R, "y, x")}, {2, I(R, "y")}}),
           "x^2y and xy^2");
  c.expect(sameMultiset(intersectInP(I(R, "x^2*y"), I(R, "x^2*y")),
                        {{1, I(R, "y")}, {4, I(R, "x")}, {4, I(R, "y, x")}}),
           "self-intersection of x^2y");
}

bool samePrimes(const std::vector<ComponentReport>& got, std::vector<Ideal> want) {
  if (got.size() != want.size()) return false;
  for (const auto& g : got) {
    auto it = std::find(want.begin(), want.end(), g.prime);
    if (it == want.end()) return false;
    want.erase(it);
  }
  return true;
}

void tacnode(Checker& c) {
  auto R = ring(32003, {"x", "y"});
  Ideal X = I(R, "x^2 - y^4");
  BlowupChart B = blowupOf(I(R, "x, y^2"));
  Ideal total = totalTransform(B, X);
  Ideal strict = strictTransform(B, X);
  const RingPtr& Br = B.ring;
  c.expect(samePrimes(minimalPrimes(total),
                      {I(Br, "y, x"), I(Br, "y^2 + x, w_0 + w_1"), I(Br, "y^2 - x, w_0 - w_1")}),
           "total transform components");
  c.expect(samePrimes(minimalPrimes(strict), {I(Br, "y^2 + x, w_0 + w_1"), I(Br, "y^2 - x, w_0 - w_1")}),
           "strict transform components");
  c.expect(saturate(singularLocusIdeal(strict), B.irrelevant).isUnit(), "saturated singular locus is ideal 1");
}

void grassmannian(Checker& c) {
  auto R = ring(32003, {"a", "b", "c", "d", "e", "f", "g", "h"});
  Ideal J = minorsIdeal(2, Matrix::fromRows(R, {{P(R, "a"), P(R, "b"), P(R, "c"), P(R, "d")},
                                                {P(R, "e"), P(R, "f"), P(R, "g"), P(R, "h")}}));
  c.expect(analyticSpread(J) == 5, "analytic spread should be p*q + 1 = 5");
  c.expect(reductionNumber(J, minimalReduction(J)) == 1, "reduction number should be (p-1)(q-1) = 1");
}

void strategyAgreement(Checker& c) {
  auto A3 = ring(101, {"x", "y", "z"});
  auto A4 = ring(101, {"a", "b", "c", "d"});
  auto A6 = ring(101, {"a", "b", "c", "d", "e", "f"});
  const std::vector<std::pair<RingPtr, const char*>> corpus{
      {A3, "x, y"},                 // complete intersection
      {A3, "x^2, y^3"},             // complete intersection
      {A3, "x*y - z^2, x^3 - y*z"}, // complete intersection
      {A3, "x*y, x*z, y*z"},        // monomial
      {A3, "x^2, x*y, y^2"},        // monomial
      {A3, "x^2, y^2, z^2, x*y"},   // monomial
      {A3, "x*y, z^2"},             // monomial
      {A3, "x, y, z"},              // maximal ideal
      {A4, "a*d - b*c, a*c - b^2, b*d - c^2"},                               // twisted cubic, 2x2 minors
      {A6, "a*e - b*d, a*f - c*d, b*f - c*e"},                               // generic 2x3 minors
      {A4, "a*c - b^2, a*d - b*c"},                                          // part of the minors
  };
  for (const auto& [R, text] : corpus) {
    Ideal J = I(R, text);
    auto M = PresentedModule::fromIdeal(J);
    Polynomial f = J.generators().front();
    c.expect(reesIdeal(M) == reesIdeal(M, f), std::string("reesIdeal strategies differ for ") + text);
  }
}

void properties(Checker& c) {
  auto A3 = ring(101, {"x", "y", "z"});
  // Groebner contract.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::vector<Polynomial> gens{randomPoly(A3, 2, seed), randomPoly(A3, 2, seed + 50) + randomPoly(A3, 1, seed)};
    auto g = computeGroebner(A3, gens);
    c.expect(satisfiesBuchbergerCriterion(g.elements()), "S-pairs reduce to zero");
  }
  // Saturation fixed point.
  for (const char* text : {"x^3*y, x*z^2", "x^2 - y*z, x*y^2"}) {
    Ideal J = I(A3, text);
    Ideal s = saturate(J, P(A3, "x"));
    c.expect(quotient(s, P(A3, "x")) == s, std::string("saturation fixed point for ") + text);
    c.expect(saturateRabinowitsch(J, P(A3, "x")) == s, std::string("Rabinowitsch agrees for ") + text);
  }
  // Jacobian dual identity and linear part of the Rees ideal.
  for (const char* text : {"x*y, x*z, y*z", "x^2, y^2", "x^2, x*y, y^2", "x, y, z"}) {
    Ideal J = I(A3, text);
    auto M = PresentedModule::fromIdeal(J);
    Matrix psi = jacobianDual(M.presentation);
    const RingPtr& T = psi.ring();
    Matrix X = Matrix::rowVector(T, {P(T, "x"), P(T, "y"), P(T, "z")});
    std::vector<Polynomial> w;
    for (std::size_t i = 0; i < J.numGenerators(); ++i) w.push_back(P(T, "w_" + std::to_string(i)));
    c.expect((X * psi - Matrix::rowVector(T, w) * promoteToRees(M.presentation, T)).isZero(),
             std::string("T*phi == X*psi for ") + text);
    Ideal rees = reesIdeal(M);
    Ideal I0 = symmetricAlgebraIdeal(M);
    std::vector<int> wdeg(T->numVars(), 0);
    for (std::size_t i = T->findBlock(kReesTag)->begin; i < T->numVars(); ++i) wdeg[i] = 1;
    bool linear = rees.contains(I0);
    for (const auto& g : rees.basis())
      if (g.isHomogeneous(wdeg) && g.degreeWith(wdeg) == 1) linear = linear && I0.contains(g);
    c.expect(linear, std::string("linear part of the Rees ideal is I0 for ") + text);
  }
  // Multiplicity oracle.
  auto A2 = ring(101, {"x", "y"});
  for (unsigned d = 1; d <= 3; ++d)
    c.expect(multiplicity(power(I(A2, "x, y"), d)) == static_cast<std::int64_t>(d * d),
             "e((x,y)^" + std::to_string(d) + ")");
  // Bezout on proper plane intersections.
  const std::vector<std::pair<const char*, const char*>> curves{
      {"x^2 - y", "y"}, {"x^4 + y^3 + 1", "y"}, {"y^2 - x^3", "y"}, {"x^2 + y^2 - 1", "x - y"}};
  for (const auto& [a, b] : curves) {
    Ideal Ia = I(A2, a), Ib = I(A2, b);
    std::int64_t total = 0;
    for (const auto& w : intersectInP(Ia, Ib)) total += w.multiplicity * dimensionAndDegree(w.prime).degree;
    c.expect(total == Ia.generators()[0].degree() * Ib.generators()[0].degree(),
             std::string("Bezout for ") + a + " / " + b);
  }
}

void determinism(Checker& c) {
  namespace fs = std::filesystem;
  std::vector<fs::path> scripts;
  for (const auto& e : fs::directory_iterator(REESKIT_REGRESSION_DIR))
    if (e.path().extension() == ".rk") scripts.push_back(e.path());
  std::sort(scripts.begin(), scripts.end());
  c.expect(scripts.size() >= 7, "regression corpus not found");
  auto runAll = [&](script::OutputMode mode) {
    std::string out;
    script::Config cfg;
    for (const auto& p : scripts) {
      std::ifstream in(p);
      std::stringstream ss;
      ss << in.rdbuf();
      auto doc = script::executeScript(script::parseScript(ss.str()), cfg);
      c.expect(script::exitCode(doc) == 0, p.filename().string() + ": " + doc.message);
      out += script::emit(doc, mode, cfg);
    }
    return out;
  };
  for (auto mode : {script::OutputMode::Text, script::OutputMode::Json})
    c.expect(runAll(mode) == runAll(mode), "two runs differ");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Checker&)>>> criteria{
      {"EHU counterexample", ehu},
      {"Morey-Ulrich session, seeds 0..2", moreyUlrich},
      {"intersectInP regression", intersections},
      {"tacnode blowup", tacnode},
      {"Grassmannian G(2,4): spread 5, reduction number 1", grassmannian},
      {"Rees ideal strategy agreement (11 ideals)", strategyAgreement},
      {"property suites", properties},
      {"determinism of the regression corpus", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
  }
  return failed ? 1 : 0;
}
