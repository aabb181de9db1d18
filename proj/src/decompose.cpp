#include "reeskit/decompose.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "reeskit/ideal_ops.hpp"

namespace reeskit {

namespace {

struct Candidate {
  std::vector<Polynomial> gens;  // ambient generators
  bool certified;
};

class Decomposer {
 public:
  Decomposer(RingPtr ambient, const DecomposeOptions& opt)
      : amb_(std::move(ambient)), opt_(opt), rng_(opt.seed), removed_(amb_->numVars(), false) {}

  void run(const std::vector<Polynomial>& gens) { split(gens); }

  std::vector<Candidate>& candidates() { return out_; }

 private:
  /// Recursive splitting of the ideal generated by `gens`.
  void split(std::vector<Polynomial> gens) {
    GroebnerBasis gb = computeGroebner(amb_, gens);
    if (gb.isUnit()) return;
    std::string key;
    for (const auto& g : gb.elements()) key += g.toString() + ";";
    if (!visited_.insert(key).second) return;
    const auto& G = gb.elements();
    if (G.empty()) {
      out_.push_back({{}, true});
      return;
    }

    // 1. Factor basis elements.
    for (const auto& g : G) {
      std::vector<Polynomial> factors;
      try {
        factors = irreducibleFactors(g, opt_.factor);
      } catch (const LimitExceeded&) {
        continue;
      }
      if (factors.size() > 1) {
        for (const auto& f : factors) {
          auto next = G;
          next.push_back(f);
          split(next);
        }
        return;
      }
      if (factors.size() == 1 && !(factors[0] == g)) {
        auto next = G;
        next.push_back(factors[0]);
        split(next);
        return;
      }
    }

    // 2. Substitute away a variable that appears linearly with constant coefficient.
    for (const auto& g : G) {
      auto v = linearVariable(g);
      if (!v) continue;
      const std::size_t var = *v;
      Coeff c = 0;
      Polynomial h(amb_);
      Polynomial::Builder hb(amb_);
      for (std::size_t t = 0; t < g.size(); ++t) {
        if (g.exps(t)[var])
          c = g.coeff(t);
        else
          hb.appendSorted(g.coeff(t), g.expPtr(t));
      }
      h = hb.buildRaw();
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < amb_->numVars(); ++i)
        images.push_back(i == var ? h.scaled(amb_->field().neg(amb_->field().inv(c)))
                                  : Polynomial::variable(amb_, i));
      RingMap sub(amb_, amb_, images);
      std::vector<Polynomial> reduced;
      for (const auto& f : G)
        if (!(f == g)) {
          Polynomial r = sub.apply(f);
          if (!r.isZero()) reduced.push_back(r);
        }
      Decomposer inner(amb_, opt_);
      inner.rng_ = rng_;
      inner.removed_ = removed_;
      inner.removed_[var] = true;
      inner.split(reduced);
      rng_ = inner.rng_;
      for (auto& cand : inner.out_) {
        cand.gens.push_back(g);
        out_.push_back(std::move(cand));
      }
      return;
    }

    Ideal J(amb_, G);
    const int dim = dimension(J) - static_cast<int>(std::count(removed_.begin(), removed_.end(), true));
    if (G.size() == 1) {
      // Irreducible principal ideal.
      out_.push_back({G, true});
      return;
    }

    // 3. Univariate eliminants: split on their factors, or make them squarefree.
    for (std::size_t v = 0; v < amb_->numVars(); ++v) {
      bool involved = false;
      for (const auto& g : G) involved = involved || g.involves(v);
      if (!involved) continue;
      std::vector<std::size_t> others;
      for (std::size_t u = 0; u < amb_->numVars(); ++u)
        if (u != v) others.push_back(u);
      Ideal E = eliminate(J, others);
      if (E.isZero()) continue;
      const Polynomial mu = E.basis().back();
      std::vector<Polynomial> factors;
      try {
        factors = irreducibleFactors(mu, opt_.factor);
      } catch (const LimitExceeded&) {
        continue;
      }
      if (factors.size() > 1) {
        for (const auto& f : factors) {
          auto next = G;
          next.push_back(f);
          split(next);
        }
        return;
      }
      if (factors.size() == 1 && !J.contains(factors[0])) {
        auto next = G;
        next.push_back(factors[0]);
        split(next);
        return;
      }
    }

    if (dim == 0) {
      zeroDimensional(J);
      return;
    }
    out_.push_back({G, false});
  }

  std::optional<std::size_t> linearVariable(const Polynomial& g) const {
    for (std::size_t v = amb_->numVars(); v-- > 0;) {
      if (g.degreeIn(v) != 1) continue;
      int terms = 0;
      bool constant = true;
      for (std::size_t t = 0; t < g.size() && constant; ++t) {
        auto e = g.exps(t);
        if (!e[v]) continue;
        ++terms;
        for (std::size_t w = 0; w < e.size(); ++w)
          if (w != v && e[w]) constant = false;
      }
      if (constant && terms == 1) return v;
    }
    return std::nullopt;
  }

  /// J is radical here: every variable has a squarefree irreducible eliminant.
  /// Split with the minimal polynomial of a random linear form.
  void zeroDimensional(const Ideal& J) {
    const std::int64_t length = dimensionAndDegree(J).degree;
    RingPtr A = quotientRing(J);
    RingPtr T = Ring::make(amb_->field().modulus(), {"#T"});
    std::uniform_int_distribution<std::uint32_t> coeff(1, amb_->field().modulus() - 1);
    for (int attempt = 0; attempt < opt_.shapeRetries; ++attempt) {
      Polynomial ell(A);
      for (std::size_t v = 0; v < amb_->numVars(); ++v)
        if (!removed_[v]) ell += Polynomial::variable(A, v).scaled(coeff(rng_));
      Ideal K = kernelOfRingMap(RingMap(T, A, {ell}));
      if (K.isZero()) continue;
      Polynomial mu = K.basis().back();
      if (mu.degree() != length) continue;
      Polynomial ellAmb = ell.withRing(amb_);
      for (const auto& f : irreducibleFactors(mu, opt_.factor)) {
        // f(ell) in the ambient ring.
        Polynomial fl(amb_);
        for (std::size_t t = 0; t < f.size(); ++t)
          fl += ellAmb.pow(f.exps(t)[0]).scaled(f.coeff(t));
        auto gens = J.gb().elements();
        gens.push_back(fl);
        out_.push_back({computeGroebner(amb_, gens).elements(), true});
      }
      return;
    }
    out_.push_back({J.gb().elements(), false});
  }

  RingPtr amb_;
  DecomposeOptions opt_;
  std::mt19937_64 rng_;
  std::vector<Candidate> out_;
  std::set<std::string> visited_;
  std::vector<bool> removed_;  // variables already substituted away (free here)
};

}  // namespace

int canonicalCompare(const Ideal& a, const Ideal& b) {
  auto ba = a.basis(), bb = b.basis();
  for (std::size_t i = 0; i < ba.size() && i < bb.size(); ++i) {
    int c = Polynomial::canonicalCompare(ba[i], bb[i]);
    if (c) return c;
  }
  if (ba.size() != bb.size()) return ba.size() < bb.size() ? -1 : 1;
  return 0;
}

std::vector<ComponentReport> minimalPrimes(const Ideal& I, const DecomposeOptions& options) {
  if (I.isUnit()) throw Error("minimal primes of the unit ideal");
  RingPtr amb = I.ring()->ambient();
  Decomposer d(amb, options);
  d.run(I.gb().elements());

  struct Entry {
    Ideal prime;
    bool certified;
    int dim;
  };
  std::vector<Entry> entries;
  for (auto& c : d.candidates()) {
    Ideal P(I.ring(), {});
    std::vector<Polynomial> gens;
    for (const auto& g : c.gens) {
      Polynomial r = toRing(g, I.ring());
      if (!r.isZero()) gens.push_back(r);
    }
    P = Ideal(I.ring(), gens);
    if (P.isUnit()) continue;
    bool merged = false;
    for (auto& e : entries)
      if (e.prime == P) {
        e.certified = e.certified || c.certified;
        merged = true;
        break;
      }
    if (!merged) entries.push_back({Ideal(I.ring(), P.basis()), c.certified, 0});
  }
  std::vector<Entry> minimal;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < entries.size() && !redundant; ++j)
      if (i != j && entries[i].prime.contains(entries[j].prime)) redundant = true;
    if (!redundant) minimal.push_back(entries[i]);
  }
  for (auto& e : minimal) e.dim = dimension(e.prime);
  std::sort(minimal.begin(), minimal.end(), [](const Entry& a, const Entry& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return canonicalCompare(a.prime, b.prime) < 0;
  });
  std::vector<ComponentReport> out;
  for (auto& e : minimal) out.push_back({e.prime, e.certified});
  return out;
}

}  // namespace reeskit
