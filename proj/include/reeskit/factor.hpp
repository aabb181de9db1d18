#pragma once

#include <cstdint>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

struct Factor {
  Polynomial factor;
  int multiplicity;
};

struct Factorization {
  Coeff unit = 0;
  std::vector<Factor> factors;  ///< monic irreducible, sorted by degree then canonical order
};

struct FactorOptions {
  std::uint64_t seed = 0;
  /// Largest univariate degree a Kronecker substitution may produce.
  std::uint64_t kroneckerBound = 1000000;
};

/// Factorization over GF(p) in a quotient-free ring. Variables appearing in
/// every term are split off first; the rest goes through a Kronecker
/// substitution, univariate factorization and recombination of factor subsets
/// with trial division.
Factorization factorMultivariate(const Polynomial& f, const FactorOptions& options = {});

/// Distinct monic irreducible factors (the radical's generator).
std::vector<Polynomial> irreducibleFactors(const Polynomial& f, const FactorOptions& options = {});

/// unit * prod(factor^multiplicity).
Polynomial expand(const Factorization& fac, const RingPtr& ring);

}  // namespace reeskit
