#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reeskit/decompose.hpp"
#include "reeskit/ring_map.hpp"

namespace reeskit {

struct WeightedComponent {
  int multiplicity;
  Ideal prime;     ///< degree-0 contraction of a minimal prime of the cone kernel
  bool certified;  ///< false when the minimal prime was not proved prime
};

struct DistinguishedOptions {
  DecomposeOptions decompose;
};

/// Distinguished components of f: S -> R along I in S. Identical
/// (multiplicity, prime) rows are collapsed; equal primes with different
/// multiplicities are kept.
std::vector<WeightedComponent> distinguished(const RingMap& f, const Ideal& I,
                                             const DistinguishedOptions& options = {});

/// Intersection of V(I) and V(J) in affine space via the diagonal. Sorted by
/// dimension (descending), then canonical generators.
std::vector<WeightedComponent> intersectInP(const Ideal& I, const Ideal& J,
                                            const DistinguishedOptions& options = {});

/// "{{2, ideal[ x, y ]}, ...}".
std::string toString(const std::vector<WeightedComponent>& components);

}  // namespace reeskit
