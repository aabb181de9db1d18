#pragma once

#include <string>
#include <vector>

#include "reeskit/ideal_ops.hpp"

namespace testutil {

using namespace reeskit;

inline RingPtr ring(std::uint32_t p, const std::vector<std::string>& names) {
  return Ring::make(p, names);
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

inline Ideal I(const RingPtr& r, const std::string& s) { return Ideal::parse(r, s); }

/// Ring with a base block and a Rees block w_0..w_{k-1}.
inline RingPtr reesRing(std::uint32_t p, const std::vector<std::string>& base, std::size_t k) {
  Ring::Spec s;
  s.characteristic = p;
  s.blocks.push_back({kBaseTag, base});
  std::vector<std::string> w;
  for (std::size_t i = 0; i < k; ++i) w.push_back("w_" + std::to_string(i));
  s.blocks.push_back({kReesTag, w});
  return Ring::make(s);
}

/// GF(5)[x,y,z]/((x^5,y^5) + (x,y,z)^6).
inline RingPtr ehuRing() {
  auto R0 = ring(5, {"x", "y", "z"});
  return quotientRing(I(R0, "x^5, y^5") + power(I(R0, "x, y, z"), 6));
}

/// Maximal minors of a 3x2 matrix over GF(101)[a_0,a_1] whose first row is
/// (a_0, a_1) and whose other entries are random quadrics.
inline Ideal moreyUlrichIdeal(std::uint64_t seed) {
  auto S = ring(101, {"a_0", "a_1"});
  std::vector<std::vector<Polynomial>> rows{{P(S, "a_0"), P(S, "a_1")}};
  for (std::uint64_t i = 1; i < 3; ++i)
    rows.push_back({randomPoly(S, 2, seed * 100 + 2 * i), randomPoly(S, 2, seed * 100 + 2 * i + 1)});
  return minorsIdeal(2, Matrix::fromRows(S, rows));
}

}  // namespace testutil
