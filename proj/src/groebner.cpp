#include "reeskit/groebner.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "reducer.hpp"

namespace reeskit {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Element {
  Polynomial poly;
  int sugar;
  std::size_t position;  // index of the leading position variable (modules)
  bool alive = true;
  std::vector<Polynomial> rep;
};

struct Pair {
  std::size_t i;  // kNone marks an input generator stored in `gen`
  std::size_t j;
  std::vector<Exp> lcm;
  int sugar;
  Polynomial gen;
  std::size_t genIndex = 0;
};

int weightedDegree(const std::vector<int>& w, std::span<const Exp> e) {
  int d = 0;
  for (std::size_t k = 0; k < e.size(); ++k) d += w[k] * e[k];
  return d;
}

std::size_t leadPosition(const Polynomial& p, std::size_t rank) {
  auto e = p.leadExps();
  for (std::size_t k = 0; k < rank; ++k)
    if (e[k]) return k;
  return 0;
}

bool coprime(std::span<const Exp> a, std::span<const Exp> b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

std::vector<Exp> lcmOf(std::span<const Exp> a, std::span<const Exp> b) {
  std::vector<Exp> l(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) l[k] = std::max(a[k], b[k]);
  return l;
}

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& opt, std::size_t numGens)
      : ring_(std::move(ring)), opt_(opt), numGens_(numGens) {}

  void addGenerator(Polynomial g, std::size_t index) {
    Pair p{kNone, kNone, {}, g.degree(), std::move(g), index};
    pending_.push_back(std::move(p));
  }

  void run() {
    while (!pending_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pending_.size(); ++k)
        if (less(pending_[k], pending_[best])) best = k;
      Pair p = std::move(pending_[best]);
      pending_[best] = std::move(pending_.back());
      pending_.pop_back();
      process(p);
    }
  }

  GroebnerBasis finish(GroebnerBasis& out);

  std::vector<std::size_t> aliveIndices() const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (elems_[k].alive) idx.push_back(k);
    return idx;
  }

  std::deque<Element>& elements() { return elems_; }

 private:
  bool less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    const bool ga = a.i == kNone, gb = b.i == kNone;
    if (ga != gb) return ga;  // input generators before pairs of equal sugar
    if (ga) return a.genIndex < b.genIndex;
    int c = ring_->order().compare(a.lcm.data(), b.lcm.data());
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  void rebuildDivisors() {
    divs_.clear();
    divIdx_.clear();
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (elems_[k].alive) {
        divs_.push_back(detail::makeDivisor(elems_[k].poly));
        divIdx_.push_back(k);
      }
  }

  std::vector<Polynomial> unitRep(std::size_t index, Coeff scale) const {
    std::vector<Polynomial> rep(numGens_, Polynomial(ring_));
    rep[index] = Polynomial::constant(ring_, scale);
    return rep;
  }

  void applySteps(std::vector<Polynomial>& rep, const std::vector<detail::Step>& steps) {
    for (const auto& s : steps) {
      const auto& src = elems_[divIdx_[s.index]].rep;
      for (std::size_t g = 0; g < numGens_; ++g)
        if (!src[g].isZero()) rep[g] -= src[g].mulTerm(s.coeff, s.shift);
    }
  }

  void process(Pair& p) {
    const auto& w = ring_->weights();
    Polynomial s(ring_);
    std::vector<Polynomial> rep;
    if (p.i == kNone) {
      s = std::move(p.gen);
      if (opt_.trackRepresentation) rep = unitRep(p.genIndex, 1);
    } else {
      const Element& a = elems_[p.i];
      const Element& b = elems_[p.j];
      std::vector<Exp> ma(p.lcm.size()), mb(p.lcm.size());
      auto la = a.poly.leadExps(), lb = b.poly.leadExps();
      for (std::size_t k = 0; k < ma.size(); ++k) {
        ma[k] = static_cast<Exp>(p.lcm[k] - la[k]);
        mb[k] = static_cast<Exp>(p.lcm[k] - lb[k]);
      }
      s = a.poly.mulTerm(1, ma) - b.poly.mulTerm(1, mb);
      if (opt_.trackRepresentation) {
        rep.assign(numGens_, Polynomial(ring_));
        for (std::size_t g = 0; g < numGens_; ++g) {
          if (!a.rep[g].isZero()) rep[g] += a.rep[g].mulTerm(1, ma);
          if (!b.rep[g].isZero()) rep[g] -= b.rep[g].mulTerm(1, mb);
        }
      }
    }
    std::vector<detail::Step> steps;
    std::vector<detail::Step>* stepPtr = opt_.trackRepresentation ? &steps : nullptr;
    Polynomial h = detail::reduce(s, divs_, false, stepPtr);
    if (h.isZero()) return;
    h = detail::reduce(h, divs_, true, stepPtr);
    if (opt_.trackRepresentation) applySteps(rep, steps);
    Coeff inv = ring_->field().inv(h.leadCoeff());
    h = h.scaled(inv);
    if (opt_.trackRepresentation)
      for (auto& r : rep) r = r.scaled(inv);
    (void)w;
    insert(std::move(h), p.sugar, std::move(rep));
  }

  void insert(Polynomial h, int sugar, std::vector<Polynomial> rep) {
    const std::size_t k = elems_.size();
    const std::size_t rank = opt_.moduleRank;
    const auto& w = ring_->weights();
    const std::size_t pos = leadPosition(h, rank);
    auto lh = h.leadExps();
    sugar = std::max(sugar, h.degree());

    // Gebauer-Moeller: candidate pairs (i, k).
    struct Cand {
      std::size_t i;
      std::vector<Exp> lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!elems_[i].alive) continue;
      if (rank && elems_[i].position != pos) continue;
      auto li = elems_[i].poly.leadExps();
      cands.push_back({i, lcmOf(li, lh), rank == 0 && coprime(li, lh)});
    }
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = cands[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (divides(cands[b].lcm, cands[a].lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (divides(kept[b].lcm, cands[a].lcm)) keep = false;
      }
      if (keep) kept.push_back(std::move(cands[a]));
    }

    // Old pairs made redundant by the new leading term.
    std::vector<Pair> survivors;
    survivors.reserve(pending_.size());
    for (auto& pr : pending_) {
      if (pr.i != kNone && divides(lh, pr.lcm)) {
        auto li = elems_[pr.i].poly.leadExps();
        auto lj = elems_[pr.j].poly.leadExps();
        if (lcmOf(li, lh) != pr.lcm && lcmOf(lj, lh) != pr.lcm) continue;
      }
      survivors.push_back(std::move(pr));
    }
    pending_ = std::move(survivors);

    for (auto& c : kept) {
      if (c.coprime) continue;
      const Element& e = elems_[c.i];
      auto li = e.poly.leadExps();
      int da = weightedDegree(w, c.lcm) - weightedDegree(w, li) + e.sugar;
      int db = weightedDegree(w, c.lcm) - weightedDegree(w, lh) + sugar;
      pending_.push_back(Pair{c.i, k, std::move(c.lcm), std::max(da, db), Polynomial(), 0});
    }

    for (auto& e : elems_)
      if (e.alive && divides(lh, e.poly.leadExps())) e.alive = false;
    elems_.push_back(Element{std::move(h), sugar, pos, true, std::move(rep)});
    rebuildDivisors();
  }

  RingPtr ring_;
  GroebnerOptions opt_;
  std::size_t numGens_;
  std::deque<Element> elems_;
  std::vector<Pair> pending_;
  std::vector<detail::Divisor> divs_;
  std::vector<std::size_t> divIdx_;
};

}  // namespace

bool GroebnerBasis::isUnit() const {
  return moduleRank_ == 0 && elements_.size() == 1 && elements_[0].isConstant() &&
         !elements_[0].isZero();
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  std::vector<detail::Divisor> divs;
  divs.reserve(elements_.size());
  for (const auto& g : elements_) divs.push_back(detail::makeDivisor(g));
  return detail::reduce(f, divs, true);
}

std::vector<std::vector<Exp>> GroebnerBasis::leadMonomials() const {
  std::vector<std::vector<Exp>> out;
  for (const auto& g : elements_) out.emplace_back(g.leadExps().begin(), g.leadExps().end());
  return out;
}

GroebnerBasis computeGroebner(const RingPtr& ringIn, std::vector<Polynomial> generators,
                              const GroebnerOptions& options) {
  RingPtr ring = ringIn->ambient();
  GroebnerBasis out;
  out.ring_ = ring;
  out.moduleRank_ = options.moduleRank;
  Buchberger engine(ring, options, generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].ring()->numVars() != ring->numVars())
      throw Error("Groebner basis input from a ring with a different variable layout");
    Polynomial g = generators[i].withRing(ring);
    if (g.isZero()) continue;
    engine.addGenerator(std::move(g), i);
  }
  engine.run();

  auto& elems = engine.elements();
  auto alive = engine.aliveIndices();
  std::vector<detail::Divisor> divs;
  std::vector<Polynomial> reduced;
  std::vector<std::vector<Polynomial>> reps;
  for (std::size_t a : alive) {
    divs.clear();
    for (std::size_t b : alive)
      if (b != a) divs.push_back(detail::makeDivisor(elems[b].poly));
    std::vector<detail::Step> steps;
    Polynomial r = detail::reduce(elems[a].poly, divs, true,
                                  options.trackRepresentation ? &steps : nullptr);
    Coeff inv = ring->field().inv(r.leadCoeff());
    if (options.trackRepresentation) {
      std::vector<std::size_t> others;
      for (std::size_t b : alive)
        if (b != a) others.push_back(b);
      std::vector<Polynomial> rep = elems[a].rep;
      for (const auto& s : steps) {
        const auto& src = elems[others[s.index]].rep;
        for (std::size_t g = 0; g < rep.size(); ++g)
          if (!src[g].isZero()) rep[g] -= src[g].mulTerm(s.coeff, s.shift);
      }
      for (auto& x : rep) x = x.scaled(inv);
      reps.push_back(std::move(rep));
    }
    reduced.push_back(r.scaled(inv));
  }
  std::vector<std::size_t> order(reduced.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return Polynomial::canonicalCompare(reduced[a], reduced[b]) < 0;
  });
  for (std::size_t k : order) out.elements_.push_back(reduced[k]);
  if (options.trackRepresentation) {
    std::vector<std::vector<Polynomial>> sortedReps;
    for (std::size_t k : order) sortedReps.push_back(reps[k]);
    out.representation_ = std::move(sortedReps);
  }
  return out;
}

Division divideWithQuotients(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  Division d;
  std::vector<detail::Divisor> divs;
  std::vector<std::size_t> idx;
  RingPtr amb = f.ring()->ambient();
  std::vector<Polynomial> local;
  local.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.ring()->numVars() != f.ring()->numVars()) throw Error("ring mismatch in division");
    local.push_back(g.withRing(f.ring()));
  }
  for (std::size_t i = 0; i < local.size(); ++i)
    if (!local[i].isZero()) {
      divs.push_back(detail::makeDivisor(local[i]));
      idx.push_back(i);
    }
  std::vector<detail::Step> steps;
  d.remainder = detail::reduce(f, divs, true, &steps);
  std::vector<Polynomial::Builder> builders;
  for (std::size_t i = 0; i < divisors.size(); ++i) builders.emplace_back(f.ring());
  for (const auto& s : steps) builders[idx[s.index]].add(s.coeff, s.shift);
  for (auto& b : builders) d.quotients.push_back(b.buildRaw());
  (void)amb;
  return d;
}

bool satisfiesBuchbergerCriterion(const std::vector<Polynomial>& basis, std::size_t moduleRank) {
  std::vector<detail::Divisor> divs;
  for (const auto& g : basis)
    if (!g.isZero()) divs.push_back(detail::makeDivisor(g));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& a = basis[i];
      const auto& b = basis[j];
      if (a.isZero() || b.isZero()) continue;
      if (moduleRank && leadPosition(a, moduleRank) != leadPosition(b, moduleRank)) continue;
      auto la = a.leadExps(), lb = b.leadExps();
      auto l = lcmOf(la, lb);
      std::vector<Exp> ma(l.size()), mb(l.size());
      for (std::size_t k = 0; k < l.size(); ++k) {
        ma[k] = static_cast<Exp>(l[k] - la[k]);
        mb[k] = static_cast<Exp>(l[k] - lb[k]);
      }
      const Field& f = a.ring()->field();
      Polynomial s = a.mulTerm(f.inv(a.leadCoeff()), ma) - b.mulTerm(f.inv(b.leadCoeff()), mb);
      if (!detail::reduce(s, divs, true).isZero()) return false;
    }
  return true;
}

}  // namespace reeskit
