#include "reeskit/ideal_ops.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace reeskit {

namespace {

int safeWeight(int w) { return w > 0 ? w : 1; }

std::vector<Polynomial> liftedGenerators(const Ideal& I) {
  RingPtr amb = I.ring()->ambient();
  std::vector<Polynomial> out = I.ring()->quotient();
  for (const auto& g : I.generators()) out.push_back(g.withRing(amb));
  return out;
}

Ideal fromAmbient(const RingPtr& ring, const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> gens;
  for (const auto& p : polys) {
    Polynomial r = toRing(p, ring);
    if (!r.isZero()) gens.push_back(std::move(r));
  }
  return Ideal(ring, std::move(gens));
}

std::vector<std::size_t> identityMap(std::size_t n, std::size_t offset = 0) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + offset;
  return m;
}

/// Ring with the variables of `amb` followed by `extra` (weight 1 each).
RingPtr withExtraVariables(const RingPtr& amb, const std::vector<std::string>& extra) {
  Ring::Spec s = specOf(*amb);
  s.blocks.push_back({"extra", extra});
  for (std::size_t i = 0; i < extra.size(); ++i) {
    s.weights.push_back(1);
    s.order.push_back({1, OrderKind::Grevlex});
  }
  return Ring::make(s);
}

/// Generators (in `ring`) of (gens) intersected with the subring avoiding `elim`.
std::vector<Polynomial> eliminateCore(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                      const std::vector<std::size_t>& elim) {
  const std::size_t n = ring->numVars();
  std::vector<bool> isElim(n, false);
  for (std::size_t v : elim) isElim.at(v) = true;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (isElim[i]) order.push_back(i);
  const std::size_t k = order.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!isElim[i]) order.push_back(i);

  Ring::Spec s;
  s.characteristic = ring->field().modulus();
  std::vector<std::string> first, second;
  std::vector<std::size_t> toNew(n), toOld(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t old = order[pos];
    toNew[old] = pos;
    toOld[pos] = old;
    (pos < k ? first : second).push_back(ring->name(old));
    s.weights.push_back(safeWeight(ring->weight(old)));
  }
  if (!first.empty()) s.blocks.push_back({"elim", first});
  if (!second.empty()) s.blocks.push_back({"keep", second});
  if (k == 0 || k == n)
    s.order = MonomialOrder::grevlex(n);
  else
    s.order = {{k, OrderKind::Grevlex}, {n - k, OrderKind::Grevlex}};
  RingPtr E = Ring::make(s);

  std::vector<Polynomial> input;
  input.reserve(gens.size());
  for (const auto& g : gens) input.push_back(remap(g, E, toNew));
  GroebnerBasis gb = computeGroebner(E, std::move(input));
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (std::size_t t = 0; t < g.size() && free; ++t)
      for (std::size_t v = 0; v < k; ++v)
        if (g.exps(t)[v]) {
          free = false;
          break;
        }
    if (free) out.push_back(remap(g, ring, toOld));
  }
  return out;
}

/// (A) intersected with (B), both in the quotient-free ring `amb`.
std::vector<Polynomial> intersectCore(const RingPtr& amb, const std::vector<Polynomial>& a,
                                      const std::vector<Polynomial>& b) {
  if (a.empty() || b.empty()) return {};
  RingPtr E = withExtraVariables(amb, {"#t"});
  const std::size_t n = amb->numVars();
  auto embed = identityMap(n);
  Polynomial t = Polynomial::variable(E, n);
  Polynomial oneMinusT = Polynomial::constant(E, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * remap(f, E, embed));
  for (const auto& g : b) gens.push_back(oneMinusT * remap(g, E, embed));
  auto elim = eliminateCore(E, gens, {n});
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i] = i;
  std::vector<Polynomial> out;
  for (const auto& p : elim) {
    // Elements avoid #t, so dropping it is safe.
    Polynomial::Builder builder(amb);
    for (std::size_t i = 0; i < p.size(); ++i) builder.add(p.coeff(i), p.exps(i).first(n));
    out.push_back(builder.buildRaw());
  }
  return out;
}

/// (A) : f in the quotient-free ring `amb`.
std::vector<Polynomial> quotientCore(const RingPtr& amb, const std::vector<Polynomial>& a,
                                     const Polynomial& f) {
  auto inter = intersectCore(amb, a, {f});
  std::vector<Polynomial> out;
  for (const auto& k : inter) {
    Division d = divideWithQuotients(k, {f});
    if (!d.remainder.isZero()) throw Error("internal error: inexact division in colon ideal");
    out.push_back(d.quotients[0]);
  }
  return out;
}

void enumerateMonomials(const std::vector<std::size_t>& vars, std::size_t n, int degree,
                        const std::function<void(const std::vector<Exp>&)>& visit) {
  std::vector<Exp> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx + 1 == vars.size() || vars.empty()) {
      if (!vars.empty()) e[vars[idx]] = static_cast<Exp>(left);
      if (vars.empty() && left != 0) return;
      visit(e);
      if (!vars.empty()) e[vars[idx]] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[vars[idx]] = static_cast<Exp>(a);
      rec(idx + 1, left - a);
    }
    e[vars[idx]] = 0;
  };
  rec(0, degree);
}

bool divisibleByAny(const std::vector<std::vector<Exp>>& leads, const std::vector<Exp>& m) {
  for (const auto& l : leads)
    if (divides(l, m)) return true;
  return false;
}

std::int64_t wBlockStandardCount(const std::vector<std::vector<Exp>>& leads, const Ring& ring,
                                 const VariableBlock& wBlock, int d) {
  const std::size_t n = ring.numVars();
  std::vector<std::size_t> wVars, bVars;
  for (std::size_t i = 0; i < n; ++i)
    (i >= wBlock.begin && i < wBlock.end ? wVars : bVars).push_back(i);
  constexpr int kCap = 100;
  std::int64_t total = 0;
  enumerateMonomials(wVars, n, d, [&](const std::vector<Exp>& wm) {
    for (int k = 0;; ++k) {
      if (k > kCap) throw Error("graded piece is infinite-dimensional over the base field");
      std::int64_t count = 0;
      enumerateMonomials(bVars, n, k, [&](const std::vector<Exp>& bm) {
        std::vector<Exp> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Exp>(wm[i] + bm[i]);
        if (!divisibleByAny(leads, m)) ++count;
      });
      if (count == 0) break;
      total += count;
      if (bVars.empty()) break;
    }
  });
  return total;
}

bool homogeneousUnder(const std::vector<Polynomial>& polys, const std::vector<int>& w) {
  for (const auto& p : polys)
    if (!p.isHomogeneous(w)) return false;
  return true;
}

Polynomial determinant(const Matrix& A, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 1) return A.at(rows[0], cols[0]);
  Polynomial det(A.ring());
  std::vector<std::size_t> subRows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    const Polynomial& a = A.at(rows[0], cols[c]);
    if (a.isZero()) continue;
    std::vector<std::size_t> subCols;
    for (std::size_t j = 0; j < k; ++j)
      if (j != c) subCols.push_back(cols[j]);
    Polynomial term = a * determinant(A, subRows, subCols);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(s);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      s[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

/// Free-module machinery over a base ring: position variables #e0.. form a
/// weight-0 lex block ahead of the base variables.
struct ModuleRing {
  RingPtr base;  // ambient of the working ring
  RingPtr ring;
  std::size_t rank;

  ModuleRing(const RingPtr& working, std::size_t r) : base(working->ambient()), rank(r) {
    Ring::Spec s = specOf(*base);
    std::vector<std::string> pos;
    for (std::size_t i = 0; i < r; ++i) pos.push_back("#e" + std::to_string(i));
    s.blocks.insert(s.blocks.begin(), {"position", pos});
    s.weights.insert(s.weights.begin(), r, 0);
    s.order.insert(s.order.begin(), {r, OrderKind::Lex});
    ring = Ring::make(s);
  }

  Polynomial embed(const Polynomial& p, std::size_t position) const {
    const std::size_t n = base->numVars();
    Polynomial::Builder b(ring);
    std::vector<Exp> e(rank + n, 0);
    for (std::size_t t = 0; t < p.size(); ++t) {
      std::fill(e.begin(), e.end(), 0);
      e[position] = 1;
      auto pe = p.exps(t);
      std::copy(pe.begin(), pe.end(), e.begin() + rank);
      b.add(p.coeff(t), e);
    }
    return b.buildRaw();
  }

  Polynomial vector(const std::vector<Polynomial>& entries, std::size_t offset = 0) const {
    Polynomial v(ring);
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (!entries[i].isZero()) v += embed(entries[i].withRing(base), offset + i);
    return v;
  }

  std::size_t leadPosition(const Polynomial& v) const {
    auto e = v.leadExps();
    for (std::size_t i = 0; i < rank; ++i)
      if (e[i]) return i;
    throw Error("internal error: module element without position");
  }

  /// Components [from, from + count) as base polynomials.
  std::vector<Polynomial> components(const Polynomial& v, std::size_t from, std::size_t count) const {
    const std::size_t n = base->numVars();
    std::vector<Polynomial::Builder> bs(count, Polynomial::Builder(base));
    for (std::size_t t = 0; t < v.size(); ++t) {
      auto e = v.exps(t);
      std::size_t p = 0;
      while (p < rank && !e[p]) ++p;
      if (p < from || p >= from + count) continue;
      bs[p - from].add(v.coeff(t), e.subspan(rank, n));
    }
    std::vector<Polynomial> out;
    for (auto& b : bs) out.push_back(b.buildRaw());
    return out;
  }

  /// Generators of the submodule spanned by `cols` plus quotient * free module.
  std::vector<Polynomial> generators(const RingPtr& working,
                                     const std::vector<std::vector<Polynomial>>& cols) const {
    std::vector<Polynomial> gens;
    for (const auto& c : cols) {
      Polynomial v = vector(c);
      if (!v.isZero()) gens.push_back(std::move(v));
    }
    for (const auto& q : working->quotient())
      for (std::size_t i = 0; i < rank; ++i) gens.push_back(embed(q, i));
    return gens;
  }
};

}  // namespace

Ring::Spec specOf(const Ring& ring) {
  Ring::Spec s;
  s.characteristic = ring.field().modulus();
  for (const auto& b : ring.blocks()) {
    std::vector<std::string> names(ring.names().begin() + b.begin, ring.names().begin() + b.end);
    s.blocks.push_back({b.tag, names});
  }
  s.weights = ring.weights();
  s.order = ring.order().blocks();
  return s;
}

Polynomial remap(const Polynomial& p, const RingPtr& target,
                 const std::vector<std::size_t>& varMap) {
  if (varMap.size() != p.numVars()) throw Error("remap: variable map has the wrong length");
  Polynomial::Builder b(target);
  std::vector<Exp> e(target->numVars(), 0);
  for (std::size_t t = 0; t < p.size(); ++t) {
    std::fill(e.begin(), e.end(), 0);
    auto pe = p.exps(t);
    for (std::size_t i = 0; i < pe.size(); ++i)
      if (pe[i]) e[varMap[i]] = static_cast<Exp>(e[varMap[i]] + pe[i]);
    b.add(p.coeff(t), e);
  }
  return b.buildRaw();
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  requireSameRing(a.ring(), b.ring(), "ideal sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

namespace {
std::vector<Polynomial> dedupe(std::vector<Polynomial> v) {
  std::sort(v.begin(), v.end(),
            [](const Polynomial& x, const Polynomial& y) { return Polynomial::canonicalCompare(x, y) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}
}  // namespace

Ideal operator*(const Ideal& a, const Ideal& b) {
  requireSameRing(a.ring(), b.ring(), "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) {
      Polynomial p = f * g;
      if (!p.isZero()) gens.push_back(p.monic());
    }
  return Ideal(a.ring(), dedupe(std::move(gens)));
}

Ideal power(const Ideal& I, unsigned k) {
  if (k == 0) return Ideal::unit(I.ring());
  Ideal base(I.ring(), I.basis());
  Ideal acc = base;
  for (unsigned i = 1; i < k; ++i) {
    Ideal next = Ideal(I.ring(), acc.basis()) * base;
    acc = Ideal(I.ring(), next.basis());
  }
  return acc;
}

Ideal mapIdeal(const RingMap& phi, const Ideal& I) {
  requireSameRing(I.ring(), phi.source(), "ring map application");
  return Ideal(phi.target(), phi.apply(I.generators()));
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars) {
  if (vars.empty()) return I;
  RingPtr amb = I.ring()->ambient();
  return fromAmbient(I.ring(), eliminateCore(amb, liftedGenerators(I), vars));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& names) {
  std::vector<std::size_t> vars;
  for (const auto& n : names) vars.push_back(I.ring()->requireIndex(n));
  return eliminate(I, vars);
}

Ideal kernelOfRingMap(const RingMap& phi) {
  const RingPtr& S = phi.source();
  const RingPtr& T = phi.target();
  const std::size_t ns = S->numVars(), nt = T->numVars();
  RingPtr Tamb = T->ambient();

  // Source variables whose image is a distinct target variable.
  std::vector<long> identifiedWith(nt, -1);
  std::vector<bool> identified(ns, false);
  for (std::size_t i = 0; i < ns; ++i) {
    const Polynomial& img = phi.images()[i];
    if (img.size() != 1 || img.leadCoeff() != 1) continue;
    auto e = img.leadExps();
    std::size_t var = nt, total = 0;
    for (std::size_t j = 0; j < nt; ++j)
      if (e[j]) {
        total += e[j];
        var = j;
      }
    if (total != 1 || identifiedWith[var] != -1) continue;
    identifiedWith[var] = static_cast<long>(i);
    identified[i] = true;
  }

  Ring::Spec s;
  s.characteristic = S->field().modulus();
  std::vector<std::string> elimNames, srcNames;
  std::vector<int> elimW, srcW;
  std::vector<std::size_t> targetToJoint(nt);
  for (std::size_t j = 0; j < nt; ++j)
    if (identifiedWith[j] == -1) {
      targetToJoint[j] = elimNames.size();
      elimNames.push_back("#t" + std::to_string(j));
      elimW.push_back(safeWeight(T->weight(j)));
    }
  const std::size_t k = elimNames.size();
  for (std::size_t i = 0; i < ns; ++i) {
    srcNames.push_back("#s" + std::to_string(i));
    const Polynomial& img = phi.images()[i];
    int w = safeWeight(S->weight(i));
    std::vector<int> tw(nt);
    for (std::size_t j = 0; j < nt; ++j) tw[j] = safeWeight(T->weight(j));
    if (!img.isZero() && img.isHomogeneous(tw) && img.degreeWith(tw) > 0) w = img.degreeWith(tw);
    srcW.push_back(w);
  }
  for (std::size_t j = 0; j < nt; ++j)
    if (identifiedWith[j] != -1) targetToJoint[j] = k + static_cast<std::size_t>(identifiedWith[j]);
  if (k) s.blocks.push_back({"elim", elimNames});
  s.blocks.push_back({"source", srcNames});
  s.weights = elimW;
  s.weights.insert(s.weights.end(), srcW.begin(), srcW.end());
  if (k)
    s.order = {{k, OrderKind::Grevlex}, {ns, OrderKind::Grevlex}};
  else
    s.order = MonomialOrder::grevlex(ns);
  RingPtr J = Ring::make(s);

  std::vector<Polynomial> gens;
  for (const auto& q : T->quotient()) gens.push_back(remap(q, J, targetToJoint));
  for (std::size_t i = 0; i < ns; ++i) {
    if (identified[i]) continue;
    Polynomial lhs = Polynomial::variable(J, k + i);
    gens.push_back(lhs - remap(phi.images()[i].withRing(Tamb), J, targetToJoint));
  }
  std::vector<std::size_t> elimVars = identityMap(k);
  std::vector<Polynomial> kept;
  if (k) {
    kept = eliminateCore(J, gens, elimVars);
  } else {
    kept = computeGroebner(J, gens).elements();
  }
  std::vector<std::size_t> back(k + ns);
  for (std::size_t i = 0; i < ns; ++i) back[k + i] = i;
  RingPtr Samb = S->ambient();
  std::vector<Polynomial> out;
  for (const auto& p : kept) {
    Polynomial::Builder b(Samb);
    for (std::size_t t = 0; t < p.size(); ++t) b.add(p.coeff(t), p.exps(t).subspan(k, ns));
    out.push_back(b.buildRaw());
  }
  return fromAmbient(S, out);
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
  requireSameRing(I.ring(), f.ring(), "colon ideal");
  if (f.isZero() || I.contains(f)) return Ideal::unit(I.ring());
  RingPtr amb = I.ring()->ambient();
  return fromAmbient(I.ring(), quotientCore(amb, I.gb().elements(), f.withRing(amb)));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  requireSameRing(I.ring(), J.ring(), "colon ideal");
  std::vector<Ideal> parts;
  for (const auto& g : J.generators()) parts.push_back(quotient(I, g));
  if (parts.empty()) return Ideal::unit(I.ring());
  return intersect(parts);
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  requireSameRing(I.ring(), f.ring(), "saturation");
  Ideal current(I.ring(), I.basis());
  for (;;) {
    Ideal next = quotient(current, f);
    if (next == current) return current;
    current = Ideal(I.ring(), next.basis());
  }
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  requireSameRing(I.ring(), J.ring(), "saturation");
  if (J.generators().empty()) throw Error("saturation by an empty ideal");
  std::vector<Ideal> parts;
  for (const auto& g : J.generators()) parts.push_back(saturate(I, g));
  return intersect(parts);
}

Ideal saturateRabinowitsch(const Ideal& I, const Polynomial& f) {
  requireSameRing(I.ring(), f.ring(), "saturation");
  RingPtr amb = I.ring()->ambient();
  const std::size_t n = amb->numVars();
  RingPtr E = withExtraVariables(amb, {"#z"});
  auto embed = identityMap(n);
  std::vector<Polynomial> gens;
  for (const auto& g : liftedGenerators(I)) gens.push_back(remap(g, E, embed));
  gens.push_back(remap(f.withRing(amb), E, embed) * Polynomial::variable(E, n) -
                 Polynomial::constant(E, 1));
  std::vector<Polynomial> out;
  for (const auto& p : eliminateCore(E, gens, {n})) {
    Polynomial::Builder b(amb);
    for (std::size_t t = 0; t < p.size(); ++t) b.add(p.coeff(t), p.exps(t).first(n));
    out.push_back(b.buildRaw());
  }
  return fromAmbient(I.ring(), out);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  requireSameRing(a.ring(), b.ring(), "ideal intersection");
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  RingPtr amb = a.ring()->ambient();
  return fromAmbient(a.ring(), intersectCore(amb, a.gb().elements(), b.gb().elements()));
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw Error("intersection of no ideals");
  Ideal acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

DimDegree dimensionAndDegree(const Ideal& I) {
  RingPtr amb = I.ring()->ambient();
  const std::size_t n = amb->numVars();
  std::vector<int> ones(n, 1);
  std::vector<std::vector<Exp>> leads;
  if (amb->order().isDegreeCompatible() && amb->weights() == ones) {
    leads = I.gb().leadMonomials();
  } else {
    Ring::Spec s = specOf(*amb);
    s.weights = ones;
    s.order = MonomialOrder::grevlex(n);
    RingPtr std = Ring::make(s);
    std::vector<Polynomial> gens;
    for (const auto& g : liftedGenerators(I)) gens.push_back(g.reinterpret(std));
    leads = computeGroebner(std, gens).leadMonomials();
  }
  return dimDegreeFromNumerator(hilbertNumerator(leads, ones), n);
}

int dimension(const Ideal& I) { return dimensionAndDegree(I).dim; }

int codimension(const Ideal& I) {
  return dimension(Ideal::zero(I.ring())) - dimension(I);
}

bool isHomogeneous(const Ideal& I) { return isHomogeneous(I, I.ring()->weights()); }

bool isHomogeneous(const Ideal& I, const std::vector<int>& w) {
  return homogeneousUnder(I.generators(), w) && homogeneousUnder(I.ring()->quotient(), w);
}

HilbertSeries hilbertSeries(const Ideal& I) {
  if (!isHomogeneous(I)) throw Error("Hilbert series needs a homogeneous ideal");
  HilbertSeries h;
  h.denominatorDegrees = I.ring()->weights();
  h.numerator = hilbertNumerator(I.gb().leadMonomials(), h.denominatorDegrees);
  return h;
}

std::int64_t gradedPieceDim(int d, const Ideal& I, Grading grading) {
  const Ring& R = *I.ring();
  if (grading == Grading::Total) {
    HilbertSeries ring = hilbertSeries(Ideal::zero(I.ring()));
    HilbertSeries quot = hilbertSeries(I);
    return ring.coefficient(d) - quot.coefficient(d);
  }
  const VariableBlock* w = R.findBlock(kReesTag);
  if (!w) throw Error("w-block grading needs a ring with a Rees block");
  std::vector<int> wWeights(R.numVars(), 0);
  for (std::size_t i = w->begin; i < w->end; ++i) wWeights[i] = 1;
  if (!homogeneousUnder(I.generators(), wWeights) || !homogeneousUnder(R.quotient(), wWeights))
    throw Error("ideal is not homogeneous in the w-block grading");
  if (d < 0) return 0;
  auto ringLeads = Ideal::zero(I.ring()).gb().leadMonomials();
  auto idealLeads = I.gb().leadMonomials();
  return wBlockStandardCount(ringLeads, R, *w, d) - wBlockStandardCount(idealLeads, R, *w, d);
}

Matrix kernelOfMatrix(const Matrix& A) {
  const RingPtr& R = A.ring();
  const std::size_t m = A.rows(), s = A.cols();
  if (s == 0) return Matrix(R, 0, 0);
  ModuleRing M(R, m + s);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < s; ++j) {
    Polynomial v = M.vector(A.column(j)) + M.embed(Polynomial::constant(M.base, 1), m + j);
    gens.push_back(std::move(v));
  }
  for (const auto& q : R->quotient())
    for (std::size_t i = 0; i < m; ++i) gens.push_back(M.embed(q, i));
  GroebnerOptions opt;
  opt.moduleRank = m + s;
  GroebnerBasis gb = computeGroebner(M.ring, gens, opt);

  std::vector<std::vector<Polynomial>> candidates;
  for (const auto& g : gb.elements()) {
    if (M.leadPosition(g) < m) continue;
    std::vector<Polynomial> col;
    bool nonzero = false;
    for (auto& c : M.components(g, m, s)) {
      col.push_back(toRing(c, R));
      nonzero = nonzero || !col.back().isZero();
    }
    if (nonzero) candidates.push_back(std::move(col));
  }
  // Greedy minimalisation: by degree, keep columns outside the span of the kept ones.
  ModuleRing K(R, s);
  auto degreeOf = [&](const std::vector<Polynomial>& c) { return K.vector(c).degree(); };
  std::stable_sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
    int da = degreeOf(a), db = degreeOf(b);
    if (da != db) return da < db;
    return Polynomial::canonicalCompare(K.vector(a), K.vector(b)) < 0;
  });
  std::vector<std::vector<Polynomial>> kept;
  GroebnerOptions kopt;
  kopt.moduleRank = s;
  GroebnerBasis keptGb = computeGroebner(K.ring, K.generators(R, kept), kopt);
  for (auto& c : candidates) {
    if (keptGb.contains(K.vector(c))) continue;
    kept.push_back(std::move(c));
    keptGb = computeGroebner(K.ring, K.generators(R, kept), kopt);
  }
  return Matrix::fromColumns(R, s, kept);
}

Matrix moduleGroebnerBasis(const Matrix& A) {
  const RingPtr& R = A.ring();
  const std::size_t m = A.rows();
  if (m == 0) return Matrix(R, 0, 0);
  ModuleRing M(R, m);
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t j = 0; j < A.cols(); ++j) cols.push_back(A.column(j));
  GroebnerOptions opt;
  opt.moduleRank = m;
  GroebnerBasis gb = computeGroebner(M.ring, M.generators(R, cols), opt);
  std::vector<std::vector<Polynomial>> out;
  for (auto it = gb.elements().rbegin(); it != gb.elements().rend(); ++it) {
    const Polynomial& g = *it;
    std::vector<Polynomial> col;
    bool nonzero = false;
    for (auto& c : M.components(g, 0, m)) {
      col.push_back(toRing(c, R));
      nonzero = nonzero || !col.back().isZero();
    }
    if (nonzero) out.push_back(std::move(col));
  }
  return Matrix::fromColumns(R, m, out);
}

Ideal minorsIdeal(std::size_t k, const Matrix& A) {
  const RingPtr& R = A.ring();
  if (k == 0) return Ideal::unit(R);
  if (k > A.rows() || k > A.cols()) return Ideal::zero(R);
  std::vector<Polynomial> gens;
  subsets(A.rows(), k, [&](const std::vector<std::size_t>& rows) {
    subsets(A.cols(), k, [&](const std::vector<std::size_t>& cols) {
      Polynomial d = determinant(A, rows, cols);
      if (!d.isZero()) gens.push_back(d);
    });
  });
  return Ideal(R, std::move(gens));
}

Ideal trimHomogeneous(const Ideal& I, const std::vector<int>& weightsIn) {
  const std::vector<int> w = weightsIn.empty() ? I.ring()->weights() : weightsIn;
  if (w.size() != I.ring()->numVars()) throw Error("trim: weight vector has the wrong length");
  for (int x : w)
    if (x <= 0) throw Error("trim needs positive degrees");
  if (!isHomogeneous(I, w)) throw Error("trim needs a homogeneous ideal");
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    Polynomial r = g.monic();
    if (!r.isZero()) gens.push_back(r);
  }
  gens = dedupe(std::move(gens));
  std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.degreeWith(w) != b.degreeWith(w)) return a.degreeWith(w) < b.degreeWith(w);
    return Polynomial::canonicalCompare(a, b) < 0;
  });
  std::vector<Polynomial> kept;
  Ideal acc = Ideal::zero(I.ring());
  for (const auto& g : gens) {
    if (acc.contains(g)) continue;
    kept.push_back(g);
    acc = Ideal(I.ring(), kept);
  }
  return acc;
}

Ideal homogenize(const Ideal& I, const std::string& newVar) {
  const Ring& R = *I.ring();
  if (R.indexOf(newVar)) throw Error("homogenizing variable '" + newVar + "' already exists");
  if (!R.order().isDegreeCompatible()) throw Error("homogenize needs a degree-compatible order");
  for (int w : R.weights())
    if (w <= 0) throw Error("homogenize needs positive variable degrees");
  Ring::Spec s = specOf(R);
  s.blocks.back().second.push_back(newVar);
  s.weights.push_back(1);
  s.order.back().size += 1;
  RingPtr H = Ring::make(s);
  const std::size_t n = R.numVars();
  std::vector<Polynomial> gens;
  for (const auto& g : I.gb().elements()) {
    const int d = g.degree();
    Polynomial::Builder b(H);
    std::vector<Exp> e(n + 1);
    for (std::size_t t = 0; t < g.size(); ++t) {
      auto ge = g.exps(t);
      std::copy(ge.begin(), ge.end(), e.begin());
      e[n] = static_cast<Exp>(d - g.termDegree(t));
      b.add(g.coeff(t), e);
    }
    gens.push_back(b.buildRaw());
  }
  return Ideal(H, std::move(gens));
}

std::vector<std::vector<Exp>> leadMonomials(const Ideal& I) { return I.gb().leadMonomials(); }

}  // namespace reeskit
