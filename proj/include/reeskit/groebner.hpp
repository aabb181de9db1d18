#pragma once

#include <optional>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

struct GroebnerOptions {
  /// Number of leading position variables when the input encodes a submodule
  /// of a free module (0 for ideals). Position variables form a lex block of
  /// weight 0, so the order is position-over-term.
  std::size_t moduleRank = 0;
  /// Carry a representation of every basis element in the input generators.
  bool trackRepresentation = false;
};

/// Reduced Groebner basis (monic, interreduced, sorted by ascending leading
/// monomial). The basis lives in the quotient-free ambient of the ring it was
/// computed for; callers add quotient generators themselves.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const RingPtr& ring() const { return ring_; }
  std::size_t moduleRank() const { return moduleRank_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool isUnit() const;

  /// representation()[i][j]: coefficient of input generator j in element i.
  const std::optional<std::vector<std::vector<Polynomial>>>& representation() const {
    return representation_;
  }

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).isZero(); }

  std::vector<std::vector<Exp>> leadMonomials() const;

 private:
  friend GroebnerBasis computeGroebner(const RingPtr&, std::vector<Polynomial>,
                                       const GroebnerOptions&);

  RingPtr ring_;
  std::size_t moduleRank_ = 0;
  std::vector<Polynomial> elements_;
  std::optional<std::vector<std::vector<Polynomial>>> representation_;
};

/// Buchberger's algorithm with the sugar selection strategy and the
/// Gebauer-Moeller criteria. Pair selection is fully ordered, so the output
/// does not depend on anything but the input sequence.
GroebnerBasis computeGroebner(const RingPtr& ring, std::vector<Polynomial> generators,
                              const GroebnerOptions& options = {});

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

/// Division with remainder by an ordered list of divisors, recording
/// quotients so that f = sum(quotients[i] * divisors[i]) + remainder.
Division divideWithQuotients(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Every S-pair of `basis` reduces to zero modulo `basis` (module-aware).
bool satisfiesBuchbergerCriterion(const std::vector<Polynomial>& basis, std::size_t moduleRank = 0);

}  // namespace reeskit
