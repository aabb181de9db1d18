#include "reeskit/factor.hpp"

#include <algorithm>
#include <functional>

#include "reeskit/groebner.hpp"
#include "reeskit/upoly.hpp"

namespace reeskit {

namespace {

struct Kronecker {
  std::vector<std::size_t> vars;    // variables present
  std::vector<std::uint64_t> radix;  // place value of each variable
  std::vector<std::uint64_t> base;   // degree bound + 1 per variable
};

UPoly substitute(const Polynomial& g, const Kronecker& k) {
  std::vector<Coeff> c;
  for (std::size_t t = 0; t < g.size(); ++t) {
    std::uint64_t e = 0;
    auto ex = g.exps(t);
    for (std::size_t i = 0; i < k.vars.size(); ++i) e += k.radix[i] * ex[k.vars[i]];
    if (c.size() <= e) c.resize(e + 1, 0);
    c[e] = g.ring()->field().add(c[e], g.coeff(t));
  }
  return UPoly(g.ring()->field(), std::move(c));
}

Polynomial invert(const UPoly& u, const Kronecker& k, const RingPtr& ring) {
  Polynomial::Builder b(ring);
  std::vector<Exp> e(ring->numVars(), 0);
  for (std::size_t d = 0; d < u.coeffs().size(); ++d) {
    if (u[d] == 0) continue;
    std::fill(e.begin(), e.end(), 0);
    std::uint64_t rest = d;
    for (std::size_t i = 0; i < k.vars.size(); ++i) {
      e[k.vars[i]] = static_cast<Exp>(rest % k.base[i]);
      rest /= k.base[i];
    }
    if (rest) return Polynomial(ring);  // out of range: not a factor image
    b.add(u[d], e);
  }
  return b.buildRaw();
}

bool exactDivide(const Polynomial& g, const Polynomial& h, Polynomial& q) {
  for (std::size_t v = 0; v < g.numVars(); ++v)
    if (h.degreeIn(v) > g.degreeIn(v)) return false;
  Division d = divideWithQuotients(g, {h});
  if (!d.remainder.isZero()) return false;
  q = d.quotients[0];
  return true;
}

/// Irreducible factors (with repetition) of a monic g with no monomial content.
void factorContentFree(Polynomial g, const FactorOptions& opt, std::vector<Polynomial>& out) {
  const RingPtr& ring = g.ring();
  if (g.isConstant()) return;
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < ring->numVars(); ++v)
    if (g.involves(v)) vars.push_back(v);
  // Linear in a variable with constant coefficient: irreducible.
  for (std::size_t v : vars) {
    if (g.degreeIn(v) != 1) continue;
    bool constantCoeff = true;
    int terms = 0;
    for (std::size_t t = 0; t < g.size() && constantCoeff; ++t) {
      auto e = g.exps(t);
      if (!e[v]) continue;
      ++terms;
      for (std::size_t w = 0; w < e.size(); ++w)
        if (w != v && e[w]) constantCoeff = false;
    }
    if (constantCoeff && terms == 1) {
      out.push_back(g);
      return;
    }
  }
  Kronecker k;
  k.vars = vars;
  std::uint64_t place = 1;
  for (std::size_t v : vars) {
    const std::uint64_t b = static_cast<std::uint64_t>(g.degreeIn(v)) + 1;
    k.radix.push_back(place);
    k.base.push_back(b);
    if (place > opt.kroneckerBound / b + 1) throw LimitExceeded("Kronecker substitution degree exceeds the configured bound");
    place *= b;
  }
  if (place - 1 > opt.kroneckerBound)
    throw LimitExceeded("Kronecker substitution degree exceeds the configured bound");

  UFactorization uf = factorUnivariate(substitute(g, k), opt.seed);
  std::vector<UPoly> pieces;
  for (const auto& f : uf.factors)
    for (int i = 0; i < f.multiplicity; ++i) pieces.push_back(f.factor);

  std::size_t size = 1;
  while (2 * size <= pieces.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) {
      if (depth == size) {
        UPoly prod(ring->field(), {1});
        for (std::size_t i : idx) prod = prod * pieces[i];
        Polynomial h = invert(prod, k, ring);
        if (h.isZero() || h.isConstant()) return false;
        h = h.monic();
        Polynomial q;
        if (!exactDivide(g, h, q)) return false;
        out.push_back(h);
        g = q.monic();
        for (std::size_t j = idx.size(); j-- > 0;) pieces.erase(pieces.begin() + idx[j]);
        return true;
      }
      for (std::size_t i = start; i < pieces.size(); ++i) {
        // Identical pieces give identical products; try each value once per slot.
        bool dup = false;
        for (std::size_t j = start; j < i && !dup; ++j) dup = pieces[j] == pieces[i];
        if (dup) continue;
        idx[depth] = i;
        if (search(i + 1, depth + 1)) return true;
      }
      return false;
    };
    found = search(0, 0);
    if (!found) ++size;
  }
  if (!g.isConstant()) out.push_back(g.monic());
}

}  // namespace

Factorization factorMultivariate(const Polynomial& f, const FactorOptions& options) {
  if (f.isZero()) throw Error("cannot factor the zero polynomial");
  const RingPtr& ring = f.ring();
  if (ring->hasQuotient()) throw Error("factorization needs a polynomial ring without quotient");
  Factorization out;
  out.unit = f.leadCoeff();
  Polynomial g = f.monic();
  const std::size_t n = ring->numVars();

  std::vector<Exp> content(n, kMaxExponent);
  for (std::size_t t = 0; t < g.size(); ++t)
    for (std::size_t v = 0; v < n; ++v) content[v] = std::min(content[v], g.exps(t)[v]);
  std::vector<Polynomial> found;
  bool any = false;
  for (std::size_t v = 0; v < n; ++v)
    if (content[v]) {
      any = true;
      for (Exp i = 0; i < content[v]; ++i) found.push_back(Polynomial::variable(ring, v));
    }
  if (any) {
    Polynomial::Builder b(ring);
    std::vector<Exp> e(n);
    for (std::size_t t = 0; t < g.size(); ++t) {
      for (std::size_t v = 0; v < n; ++v) e[v] = static_cast<Exp>(g.exps(t)[v] - content[v]);
      b.appendSorted(g.coeff(t), e.data());
    }
    g = b.buildRaw();
  }
  factorContentFree(g, options, found);

  std::sort(found.begin(), found.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return Polynomial::canonicalCompare(a, b) < 0;
  });
  for (auto& p : found) {
    if (!out.factors.empty() && out.factors.back().factor == p)
      ++out.factors.back().multiplicity;
    else
      out.factors.push_back({std::move(p), 1});
  }
  return out;
}

std::vector<Polynomial> irreducibleFactors(const Polynomial& f, const FactorOptions& options) {
  std::vector<Polynomial> out;
  for (auto& fa : factorMultivariate(f, options).factors) out.push_back(std::move(fa.factor));
  return out;
}

Polynomial expand(const Factorization& fac, const RingPtr& ring) {
  Polynomial acc = Polynomial::constant(ring, fac.unit);
  for (const auto& f : fac.factors) acc = acc * f.factor.pow(f.multiplicity);
  return acc;
}

}  // namespace reeskit
