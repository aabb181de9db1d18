#include "reeskit/ring_map.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace reeskit {

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->numVars())
    throw Error("ring map needs " + std::to_string(source_->numVars()) + " images, got " +
                std::to_string(images_.size()));
  if (!(source_->field() == target_->field())) throw Error("ring map between different fields");
  for (auto& im : images_) {
    requireSameRing(im.ring(), target_, "ring map image");
    im = im.withRing(target_);
  }
  for (const auto& q : source_->quotient())
    if (!applyUnchecked(q).isZero())
      throw Error("ring map is not well defined: quotient generator " + q.toString() +
                  " does not map to zero");
}

RingMap RingMap::identity(const RingPtr& ring) {
  std::vector<Polynomial> imgs;
  for (std::size_t i = 0; i < ring->numVars(); ++i) imgs.push_back(Polynomial::variable(ring, i));
  return RingMap(ring, ring, std::move(imgs));
}

Polynomial RingMap::applyUnchecked(const Polynomial& f) const {
  RingPtr amb = target_->ambient();
  const std::size_t nv = source_->numVars();
  std::vector<std::vector<Polynomial>> powers(nv);
  for (std::size_t i = 0; i < nv; ++i) powers[i].push_back(Polynomial::constant(amb, 1));
  auto powerOf = [&](std::size_t var, Exp e) -> const Polynomial& {
    auto& cache = powers[var];
    while (cache.size() <= e) cache.push_back(cache.back() * images_[var].withRing(amb));
    return cache[e];
  };
  Polynomial acc(amb);
  for (std::size_t t = 0; t < f.size(); ++t) {
    Polynomial term = Polynomial::constant(amb, f.coeff(t));
    auto e = f.exps(t);
    for (std::size_t i = 0; i < nv; ++i)
      if (e[i]) term = term * powerOf(i, e[i]);
    acc += term;
  }
  return normalizeInQuotient(acc.withRing(target_));
}

Polynomial RingMap::apply(const Polynomial& f) const {
  requireSameRing(f.ring(), source_, "ring map application");
  return applyUnchecked(f);
}

std::vector<Polynomial> RingMap::apply(const std::vector<Polynomial>& fs) const {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(apply(f));
  return out;
}

std::vector<std::vector<Exp>> monomialsOfDegree(const RingPtr& ring, int degree) {
  std::vector<std::vector<Exp>> out;
  const std::size_t nv = ring->numVars();
  std::vector<Exp> cur(nv, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var == nv) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const int w = ring->weight(var);
    if (w == 0) {
      rec(var + 1, left);
      return;
    }
    for (int e = left / w; e >= 0; --e) {
      cur[var] = static_cast<Exp>(e);
      rec(var + 1, left - e * w);
    }
    cur[var] = 0;
  };
  if (degree >= 0) rec(0, degree);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return ring->order().compare(a.data(), b.data()) > 0;
  });
  return out;
}

Polynomial randomPoly(const RingPtr& ring, int degree, std::uint64_t seed) {
  if (degree < 0) throw Error("randomPoly: negative degree");
  std::mt19937_64 rng(seed);
  const std::uint32_t p = ring->field().modulus();
  if (degree == 0) {
    Coeff c = 0;
    while (c == 0) c = static_cast<Coeff>(rng() % p);
    return Polynomial::constant(ring, c);
  }
  Polynomial::Builder b(ring);
  for (const auto& m : monomialsOfDegree(ring, degree)) b.add(static_cast<Coeff>(rng() % p), m);
  return b.build();
}

}  // namespace reeskit
