#pragma once

// Division kernel shared by the quotient normalisation and the Groebner engine.

#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit::detail {

struct Divisor {
  const Polynomial* poly;
  std::uint64_t mask;
  Coeff leadInv;
};

/// One division step: f -= coeff * x^shift * divisors[index].
struct Step {
  std::size_t index;
  Coeff coeff;
  std::vector<Exp> shift;
};

Divisor makeDivisor(const Polynomial& p);

/// Reduces `f`. With `full` every term is reduced, otherwise only until the
/// leading term is irreducible. Among candidate reducers the shortest is used
/// (ties by position), which keeps results deterministic.
Polynomial reduce(const Polynomial& f, const std::vector<Divisor>& divisors, bool full,
                  std::vector<Step>* steps = nullptr);

}  // namespace reeskit::detail
