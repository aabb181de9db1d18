#pragma once

#include <cstdint>
#include <vector>

#include "reeskit/factor.hpp"
#include "reeskit/ideal.hpp"

namespace reeskit {

struct ComponentReport {
  Ideal prime;
  bool certified;  ///< false: candidate whose primality was not proved
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  /// Random linear forms tried per zero-dimensional piece.
  int shapeRetries = 5;
  FactorOptions factor;
};

/// Minimal primes over I (in I's ring). Candidates are pairwise incomparable
/// and sorted by dimension (descending), then by canonical generators.
std::vector<ComponentReport> minimalPrimes(const Ideal& I, const DecomposeOptions& options = {});

/// Lexicographic comparison of canonical bases, used for deterministic output.
int canonicalCompare(const Ideal& a, const Ideal& b);

}  // namespace reeskit
