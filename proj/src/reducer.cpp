#include "reducer.hpp"

namespace reeskit::detail {

Divisor makeDivisor(const Polynomial& p) {
  return {&p, divMask(p.leadExps()), p.ring()->field().inv(p.leadCoeff())};
}

Polynomial reduce(const Polynomial& f, const std::vector<Divisor>& divisors, bool full,
                  std::vector<Step>* steps) {
  if (f.isZero() || divisors.empty()) return f;
  const RingPtr& ring = f.ring();
  const std::size_t nv = ring->numVars();
  const auto& order = ring->order();
  const Field& field = ring->field();

  std::vector<Coeff> wc(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) wc[i] = f.coeff(i);
  std::vector<Exp> we(f.expPtr(0), f.expPtr(0) + f.size() * nv);
  std::size_t start = 0;

  Polynomial::Builder out(ring);
  std::vector<Coeff> nc;
  std::vector<Exp> ne;
  std::vector<Exp> shift(nv), shifted(nv);

  while (start < wc.size()) {
    const Exp* t = we.data() + start * nv;
    std::span<const Exp> ts(t, nv);
    const std::uint64_t m = divMask(ts);
    std::size_t hit = divisors.size();
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      if ((divisors[j].mask & ~m) != 0) continue;
      if (hit != divisors.size() && divisors[j].poly->size() >= divisors[hit].poly->size()) continue;
      if (divides(divisors[j].poly->leadExps(), ts)) hit = j;
    }
    if (hit == divisors.size()) {
      if (!full) {
        for (std::size_t i = start; i < wc.size(); ++i) out.appendSorted(wc[i], we.data() + i * nv);
        break;
      }
      out.appendSorted(wc[start], t);
      ++start;
      continue;
    }
    const Polynomial& g = *divisors[hit].poly;
    const Coeff c = field.mul(wc[start], divisors[hit].leadInv);
    const Coeff factor = field.neg(c);
    auto gl = g.leadExps();
    for (std::size_t k = 0; k < nv; ++k) shift[k] = static_cast<Exp>(t[k] - gl[k]);
    if (steps) steps->push_back({hit, c, shift});

    nc.clear();
    ne.clear();
    std::size_t i = start + 1, j = 1;
    const std::size_t na = wc.size(), nb = g.size();
    bool haveShifted = false;
    while (i < na || j < nb) {
      if (j < nb && !haveShifted) {
        const Exp* ge = g.expPtr(j);
        for (std::size_t k = 0; k < nv; ++k) {
          int s = static_cast<int>(ge[k]) + shift[k];
          if (s > kMaxExponent) throw Error("exponent overflow (limit 32767)");
          shifted[k] = static_cast<Exp>(s);
        }
        haveShifted = true;
      }
      int cmp;
      if (i == na)
        cmp = -1;
      else if (j == nb)
        cmp = 1;
      else
        cmp = order.compare(we.data() + i * nv, shifted.data());
      if (cmp > 0) {
        nc.push_back(wc[i]);
        ne.insert(ne.end(), we.data() + i * nv, we.data() + (i + 1) * nv);
        ++i;
      } else if (cmp < 0) {
        nc.push_back(field.mul(factor, g.coeff(j)));
        ne.insert(ne.end(), shifted.begin(), shifted.end());
        ++j;
        haveShifted = false;
      } else {
        Coeff s = field.add(wc[i], field.mul(factor, g.coeff(j)));
        if (s) {
          nc.push_back(s);
          ne.insert(ne.end(), shifted.begin(), shifted.end());
        }
        ++i;
        ++j;
        haveShifted = false;
      }
    }
    wc.swap(nc);
    we.swap(ne);
    start = 0;
  }
  return out.buildRaw();
}

}  // namespace reeskit::detail
