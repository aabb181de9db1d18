#include "reeskit/blowup.hpp"

#include "reeskit/rees.hpp"

namespace reeskit {

BlowupChart blowupOf(const Ideal& center) {
  if (center.isZero()) throw Error("blowup: the center is the zero ideal");
  if (center.isUnit()) throw Error("blowup: the center is the unit ideal");
  const RingPtr& R = center.ring();
  Ideal rees = reesIdeal(PresentedModule::fromIdeal(center));
  RingPtr B = quotientRing(rees);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < R->numVars(); ++i) images.push_back(Polynomial::variable(B, i));
  RingMap proj(R, B, images);
  std::vector<Polynomial> w;
  const VariableBlock* wb = B->findBlock(kReesTag);
  for (std::size_t i = wb->begin; i < wb->end; ++i) w.push_back(Polynomial::variable(B, i));
  Ideal exceptional = mapIdeal(proj, center);
  return BlowupChart{B, rees, proj, Ideal(B, w), exceptional};
}

Ideal totalTransform(const BlowupChart& chart, const Ideal& X) {
  requireSameRing(X.ring(), chart.proj.source(), "total transform");
  return mapIdeal(chart.proj, X);
}

Ideal strictTransform(const BlowupChart& chart, const Ideal& X) {
  return saturate(totalTransform(chart, X), chart.exceptional);
}

Ideal singularLocusIdeal(const Ideal& X, std::optional<int> codim) {
  const RingPtr& R = X.ring();
  RingPtr amb = R->ambient();
  std::vector<Polynomial> gens = R->quotient();
  for (const auto& g : X.generators()) gens.push_back(g.withRing(amb));
  Ideal full(amb, gens);
  if (full.isUnit()) return Ideal::unit(R);
  const int c = codim ? *codim : codimension(full);
  if (c < 0) throw Error("singular locus: negative codimension");
  Matrix jac(amb, gens.size(), amb->numVars());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < amb->numVars(); ++j) jac.set(i, j, gens[i].derivative(j));
  Ideal sing = full + minorsIdeal(static_cast<std::size_t>(c), jac);
  std::vector<Polynomial> out;
  for (const auto& g : sing.generators()) {
    Polynomial r = toRing(g, R);
    if (!r.isZero()) out.push_back(r);
  }
  if (sing.isUnit()) return Ideal::unit(R);
  return Ideal(R, out);
}

bool isSmoothAwayFromIrrelevant(const BlowupChart& chart, const Ideal& X) {
  requireSameRing(X.ring(), chart.ring, "smoothness test");
  return saturate(singularLocusIdeal(X), chart.irrelevant).isUnit();
}

}  // namespace reeskit
