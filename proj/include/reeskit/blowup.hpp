#pragma once

#include <optional>

#include "reeskit/ideal_ops.hpp"

namespace reeskit {

/// Blowup of affine space (or a quotient of it) along a center, as one global
/// chart: the Rees ring modulo the Rees ideal.
struct BlowupChart {
  RingPtr ring;       ///< base + w-block, quotient = Rees ideal
  Ideal reesIdeal;    ///< in the quotient-free Rees ring (base quotient kept)
  RingMap proj;       ///< base -> ring, identity on base variables
  Ideal irrelevant;   ///< (w_0, ..., w_{n-1}) in ring
  Ideal exceptional;  ///< proj(center)
};

BlowupChart blowupOf(const Ideal& center);
Ideal totalTransform(const BlowupChart& chart, const Ideal& X);
/// Total transform saturated by the exceptional ideal.
Ideal strictTransform(const BlowupChart& chart, const Ideal& X);

/// (X + Q) + c x c minors of the Jacobian of its generators, where Q is the
/// ring's quotient and c defaults to codim(X + Q) in the ambient ring.
Ideal singularLocusIdeal(const Ideal& X, std::optional<int> codim = std::nullopt);
/// Singular locus saturated by the irrelevant ideal is the unit ideal.
bool isSmoothAwayFromIrrelevant(const BlowupChart& chart, const Ideal& X);

}  // namespace reeskit
