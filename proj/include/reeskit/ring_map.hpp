#pragma once

#include <cstdint>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

/// Ring homomorphism given by the image of every source variable.
class RingMap {
 public:
  /// Checks that images live in `target` and that the source quotient maps to
  /// zero.
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

  static RingMap identity(const RingPtr& ring);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& f) const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& fs) const;

 private:
  Polynomial applyUnchecked(const Polynomial& f) const;

  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
};

/// Every monomial of the given weighted degree, in descending order.
std::vector<std::vector<Exp>> monomialsOfDegree(const RingPtr& ring, int degree);

/// Dense polynomial of the given weighted degree with uniformly random
/// coefficients drawn from a generator seeded with `seed`. Degree 0 yields a
/// nonzero scalar.
Polynomial randomPoly(const RingPtr& ring, int degree, std::uint64_t seed);

}  // namespace reeskit
