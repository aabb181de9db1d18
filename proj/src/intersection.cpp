#include "reeskit/intersection.hpp"

#include <algorithm>

#include "reeskit/rees.hpp"

namespace reeskit {

namespace {

/// Element of `others` outside `P`; the unit when there are no others.
Polynomial avoidingElement(const RingPtr& ring, const std::vector<Ideal>& others, const Ideal& P) {
  if (others.empty()) return Polynomial::constant(ring, 1);
  Ideal meet = intersect(others);
  for (const auto& g : meet.basis())
    if (!P.contains(g)) return g;
  // Products of generators cover the case where every basis element lands in P
  // only by accident of the chosen basis.
  Polynomial prod = Polynomial::constant(ring, 1);
  for (const auto& Q : others) {
    Polynomial pick;
    for (const auto& g : Q.basis())
      if (!P.contains(g)) {
        pick = g;
        break;
      }
    if (pick.ring() == nullptr) throw Error("distinguished: components are not incomparable");
    prod *= pick;
  }
  return prod;
}

}  // namespace

std::vector<WeightedComponent> distinguished(const RingMap& f, const Ideal& I,
                                             const DistinguishedOptions& opt) {
  requireSameRing(I.ring(), f.source(), "distinguished");
  if (I.isUnit()) throw Error("distinguished: the ideal is the unit ideal");
  const RingPtr& S = f.source();
  const RingPtr& R = f.target();
  std::vector<Polynomial> gens = I.generators();
  if (gens.empty()) throw Error("distinguished: the ideal is zero");
  const std::size_t n = gens.size();

  // Normal cone of f(I) in R, presented over R[w] with the same generator count.
  std::vector<Polynomial> images = f.apply(gens);
  Ideal reesR = symmetricKernel(Matrix::rowVector(R, images));
  const RingPtr& Rw = reesR.ring();
  std::vector<Polynomial> coneGens = reesR.generators();
  for (const auto& g : images) coneGens.push_back(promoteToRees(g, Rw));
  RingPtr cone = quotientRing(Ideal(Rw, coneGens));

  // K: kernel of S[w] -> gr_{f(I)} R; it contains the Rees ideal of I and I.
  RingPtr Sw = reesRing(S, n);
  std::vector<Polynomial> mapImages;
  for (std::size_t i = 0; i < S->numVars(); ++i)
    mapImages.push_back(toRing(promoteToRees(f.images()[i], Rw), cone));
  const std::size_t wr = Rw->findBlock(kReesTag)->begin;
  for (std::size_t i = 0; i < n; ++i) mapImages.push_back(Polynomial::variable(cone, wr + i));
  Ideal K = kernelOfRingMap(RingMap(Sw, cone, mapImages));

  if (K.isUnit()) return {};
  std::vector<ComponentReport> primes = minimalPrimes(K, opt.decompose);
  const VariableBlock* wb = Sw->findBlock(kReesTag);
  std::vector<std::size_t> wVars;
  for (std::size_t i = wb->begin; i < wb->end; ++i) wVars.push_back(i);
  std::vector<Polynomial> baseVars;
  for (std::size_t i = 0; i < S->numVars(); ++i) baseVars.push_back(Polynomial::variable(S, i));

  std::vector<WeightedComponent> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::vector<Ideal> others;
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (j != i) others.push_back(primes[j].prime);
    const Ideal& P = primes[i].prime;
    Polynomial h = avoidingElement(Sw, others, P);
    Ideal primary = h.isConstant() ? K : saturate(K, h);
    const std::int64_t num = dimensionAndDegree(primary).degree;
    const std::int64_t den = dimensionAndDegree(P).degree;
    if (den <= 0 || num % den != 0)
      throw Error("distinguished: degree ratio " + std::to_string(num) + "/" + std::to_string(den) +
                  " is not an integer");
    // Contract to degree 0: eliminate w, then read the result in S.
    Ideal contracted = eliminate(P, wVars);
    std::vector<Polynomial> pg;
    for (const auto& g : contracted.generators()) {
      Polynomial::Builder b(S->ambient());
      for (std::size_t t = 0; t < g.size(); ++t) b.add(g.coeff(t), g.exps(t).subspan(0, S->numVars()));
      pg.push_back(toRing(b.buildRaw(), S));
    }
    out.push_back({static_cast<int>(num / den), Ideal(S, pg), primes[i].certified});
  }

  std::vector<WeightedComponent> unique;
  for (auto& c : out) {
    bool dup = false;
    for (auto& u : unique)
      if (u.multiplicity == c.multiplicity && u.prime == c.prime) {
        u.certified = u.certified && c.certified;
        dup = true;
      }
    if (!dup) unique.push_back(std::move(c));
  }
  return unique;
}

std::vector<WeightedComponent> intersectInP(const Ideal& I, const Ideal& J,
                                            const DistinguishedOptions& opt) {
  requireSameRing(I.ring(), J.ring(), "intersectInP");
  const RingPtr& P = I.ring();
  if (P->hasQuotient()) throw Error("intersectInP needs a polynomial ring");
  const std::size_t n = P->numVars();

  // S = P (x) P with the second copy renamed; the diagonal is the ideal to blow up.
  Ring::Spec s = specOf(*P);
  std::vector<std::string> copy;
  for (std::size_t i = 0; i < n; ++i) copy.push_back("#p" + std::to_string(i));
  s.blocks.push_back({"copy", copy});
  s.weights.insert(s.weights.end(), P->weights().begin(), P->weights().end());
  s.order = MonomialOrder::grevlex(2 * n);
  RingPtr S = Ring::make(s);

  std::vector<std::size_t> first(n), second(n);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = i;
    second[i] = n + i;
  }
  std::vector<Polynomial> diag, product;
  for (std::size_t i = 0; i < n; ++i)
    diag.push_back(Polynomial::variable(S, i) - Polynomial::variable(S, n + i));
  for (const auto& g : I.generators()) product.push_back(remap(g, S, first));
  for (const auto& g : J.generators()) product.push_back(remap(g, S, second));
  Ideal X(S, product);
  if (X.isUnit()) return {};
  RingPtr R = quotientRing(X);
  std::vector<Polynomial> proj;
  for (std::size_t i = 0; i < 2 * n; ++i) proj.push_back(Polynomial::variable(R, i));

  std::vector<Polynomial> back;
  for (std::size_t i = 0; i < 2 * n; ++i) back.push_back(Polynomial::variable(P, i % n));
  RingMap collapse(S, P, back);

  std::vector<WeightedComponent> out;
  for (auto& c : distinguished(RingMap(S, R, proj), Ideal(S, diag), opt))
    out.push_back({c.multiplicity, mapIdeal(collapse, c.prime), c.certified});
  std::vector<WeightedComponent> unique;
  for (auto& c : out) {
    bool dup = false;
    for (auto& u : unique)
      if (u.multiplicity == c.multiplicity && u.prime == c.prime) dup = true;
    if (!dup) unique.push_back(std::move(c));
  }
  std::stable_sort(unique.begin(), unique.end(), [](const WeightedComponent& a, const WeightedComponent& b) {
    int da = dimension(a.prime), db = dimension(b.prime);
    if (da != db) return da > db;
    int c = canonicalCompare(a.prime, b.prime);
    if (c != 0) return c < 0;
    return a.multiplicity < b.multiplicity;
  });
  return unique;
}

std::string toString(const std::vector<WeightedComponent>& components) {
  std::string s = "{";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += ", ";
    s += "{" + std::to_string(components[i].multiplicity) + ", " + components[i].prime.toString() + "}";
  }
  return s + "}";
}

}  // namespace reeskit
