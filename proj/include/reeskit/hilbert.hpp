#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

/// Integer polynomial in T, low degree first.
using IntPoly = std::vector<std::int64_t>;

/// Hilbert series N(T) / prod(1 - T^{w_i}) of k[x]/M for a monomial ideal M.
struct HilbertSeries {
  IntPoly numerator;
  std::vector<int> denominatorDegrees;

  /// dim_k of the degree-d piece, by expanding the rational function.
  std::int64_t coefficient(int d) const;
  std::string toString() const;
};

/// Numerator of the Hilbert series of k[x]/(monomials) under positive weights,
/// by pivot splitting: N(M) = N(M + p) + T^{deg p} N(M : p).
IntPoly hilbertNumerator(std::vector<std::vector<Exp>> monomials, const std::vector<int>& weights);

/// Krull dimension and degree read off the numerator for standard weights:
/// N = (1-T)^k Q with Q(1) != 0 gives dim = n - k and degree = Q(1).
/// The unit ideal (N == 0) gives dim -1 and degree 0.
struct DimDegree {
  int dim;
  std::int64_t degree;
};
DimDegree dimDegreeFromNumerator(IntPoly numerator, std::size_t numVars);

}  // namespace reeskit
