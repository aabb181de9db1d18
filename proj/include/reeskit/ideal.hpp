#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "reeskit/groebner.hpp"

namespace reeskit {

/// Finitely generated ideal of a (possibly quotient) ring. The Groebner basis
/// of generators + quotient is computed lazily in the ambient ring and shared
/// between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal parse(RingPtr ring, const std::string& commaSeparated);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t numGenerators() const { return gens_.size(); }

  /// Reduced Groebner basis of generators + quotient, in the ambient ring.
  const GroebnerBasis& gb() const;
  /// Reduced basis elements that are nonzero in the ring, as ring elements,
  /// sorted by descending leading monomial. This is the canonical form.
  std::vector<Polynomial> basis() const;

  Polynomial normalForm(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool isUnit() const;
  bool isZero() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

  /// "ideal[ g1, g2 ]" over the canonical basis.
  std::string toString() const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Brings `p` into `ring` (same variable layout), reducing modulo its quotient.
Polynomial toRing(const Polynomial& p, const RingPtr& ring);

/// The ring R/(I) where R is I's ring; the quotient is stored as a reduced basis.
RingPtr quotientRing(const Ideal& I);

/// Ring from a spec with quotient generators given as text, e.g. "x^5, y^5".
RingPtr makeRing(const Ring::Spec& spec, const std::string& quotientGenerators = "");

}  // namespace reeskit
