#include "reeskit/ideal.hpp"

#include <algorithm>

namespace reeskit {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    requireSameRing(g.ring(), ring_, "ideal generators");
    if (!g.isZero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::parse(RingPtr ring, const std::string& text) {
  return Ideal(ring, parsePolynomialList(ring, text));
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [this] {
    RingPtr amb = ring_->ambient();
    std::vector<Polynomial> input = ring_->quotient();
    for (const auto& g : gens_) input.push_back(g.withRing(amb));
    cache_->gb = computeGroebner(amb, std::move(input));
  });
  return cache_->gb;
}

std::vector<Polynomial> Ideal::basis() const {
  std::vector<Polynomial> out;
  for (const auto& g : gb().elements()) {
    Polynomial r = toRing(g, ring_);
    if (!r.isZero()) out.push_back(std::move(r));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Polynomial Ideal::normalForm(const Polynomial& f) const {
  requireSameRing(f.ring(), ring_, "normal form");
  return gb().reduce(f.withRing(ring_->ambient())).withRing(ring_);
}

bool Ideal::contains(const Polynomial& f) const { return normalForm(f).isZero(); }

bool Ideal::contains(const Ideal& other) const {
  requireSameRing(other.ring_, ring_, "ideal containment");
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::isUnit() const { return gb().isUnit(); }

bool Ideal::isZero() const {
  for (const auto& g : gens_)
    if (!g.isZero()) return false;
  return true;
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!sameRing(a.ring_, b.ring_)) return false;
  const auto& ea = a.gb().elements();
  const auto& eb = b.gb().elements();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (!(ea[i] == eb[i])) return false;
  return true;
}

std::string Ideal::toString() const {
  auto b = basis();
  if (b.empty()) return "ideal[ 0 ]";
  std::string out = "ideal[ ";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ", ";
    out += b[i].toString();
  }
  return out + " ]";
}

Polynomial toRing(const Polynomial& p, const RingPtr& ring) {
  if (p.ring()->numVars() != ring->numVars()) throw Error("ring mismatch: variable layouts differ");
  return normalizeInQuotient(p.withRing(ring));
}

RingPtr quotientRing(const Ideal& I) {
  return Ring::withQuotientBasis(I.ring()->ambient(), I.gb().elements());
}

RingPtr makeRing(const Ring::Spec& spec, const std::string& quotientGenerators) {
  RingPtr ring = Ring::make(spec);
  if (quotientGenerators.find_first_not_of(" \t\n") == std::string::npos) return ring;
  return quotientRing(Ideal::parse(ring, quotientGenerators));
}

}  // namespace reeskit
