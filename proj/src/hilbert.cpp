#include "reeskit/hilbert.hpp"

#include <algorithm>

#include "reeskit/error.hpp"

namespace reeskit {

namespace {

using Mono = std::vector<Exp>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

IntPoly oneMinusT(int d) {
  IntPoly r(d + 1, 0);
  r[0] += 1;
  r[d] -= 1;
  trim(r);
  return r;
}

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void minimalize(std::vector<Mono>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Mono& a, const Mono& b) {
    int da = 0, db = 0;
    for (Exp e : a) da += e;
    for (Exp e : b) db += e;
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Mono> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  gens = std::move(out);
}

int wdeg(const Mono& m, const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += w[i] * m[i];
  return d;
}

IntPoly numeratorRec(std::vector<Mono> gens, const std::vector<int>& w) {
  minimalize(gens);
  if (gens.empty()) return {1};
  const std::size_t n = w.size();
  // Base case: pairwise coprime generators.
  std::vector<int> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ++count[i];
  std::size_t pivotVar = n;
  for (std::size_t i = 0; i < n; ++i)
    if (count[i] > 1 && (pivotVar == n || count[i] > count[pivotVar])) pivotVar = i;
  if (pivotVar == n) {
    IntPoly r{1};
    for (const auto& g : gens) r = mul(r, oneMinusT(wdeg(g, w)));
    return r;
  }
  std::vector<Exp> exps;
  for (const auto& g : gens)
    if (g[pivotVar]) exps.push_back(g[pivotVar]);
  std::sort(exps.begin(), exps.end());
  Mono pivot(n, 0);
  pivot[pivotVar] = exps[exps.size() / 2];
  for (const auto& g : gens)
    if (divides(g, pivot)) {
      pivot[pivotVar] = exps.front();
      break;
    }
  const Exp e = pivot[pivotVar];

  std::vector<Mono> plus = gens;
  plus.push_back(pivot);
  std::vector<Mono> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Mono c = g;
    c[pivotVar] = g[pivotVar] > e ? static_cast<Exp>(g[pivotVar] - e) : 0;
    colon.push_back(std::move(c));
  }
  IntPoly a = numeratorRec(std::move(plus), w);
  IntPoly b = numeratorRec(std::move(colon), w);
  const int shift = wdeg(pivot, w);
  IntPoly r(std::max(a.size(), b.size() + shift), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] += b[i];
  trim(r);
  return r;
}

}  // namespace

IntPoly hilbertNumerator(std::vector<std::vector<Exp>> monomials, const std::vector<int>& weights) {
  for (int w : weights)
    if (w <= 0) throw Error("Hilbert series needs positive variable degrees");
  for (const auto& m : monomials)
    if (std::all_of(m.begin(), m.end(), [](Exp e) { return e == 0; })) return {};
  return numeratorRec(std::move(monomials), weights);
}

std::int64_t HilbertSeries::coefficient(int d) const {
  if (d < 0) return 0;
  // Expand 1/prod(1 - T^{w}) up to degree d.
  std::vector<std::int64_t> series(d + 1, 0);
  series[0] = 1;
  for (int w : denominatorDegrees)
    for (int k = w; k <= d; ++k) series[k] += series[k - w];
  std::int64_t c = 0;
  for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= d; ++i)
    c += numerator[i] * series[d - i];
  return c;
}

std::string HilbertSeries::toString() const {
  std::string num;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    std::int64_t c = numerator[i];
    if (c == 0) continue;
    std::int64_t a = c < 0 ? -c : c;
    if (num.empty())
      num += c < 0 ? "-" : "";
    else
      num += c < 0 ? " - " : " + ";
    if (i == 0)
      num += std::to_string(a);
    else {
      if (a != 1) num += std::to_string(a) + "*";
      num += i == 1 ? "T" : "T^" + std::to_string(i);
    }
  }
  if (num.empty()) num = "0";
  std::string den;
  std::vector<int> degs = denominatorDegrees;
  std::sort(degs.begin(), degs.end());
  for (std::size_t i = 0; i < degs.size();) {
    std::size_t j = i;
    while (j < degs.size() && degs[j] == degs[i]) ++j;
    std::string f = degs[i] == 1 ? "(1 - T)" : "(1 - T^" + std::to_string(degs[i]) + ")";
    if (j - i > 1) f += "^" + std::to_string(j - i);
    den += den.empty() ? f : "*" + f;
    i = j;
  }
  if (den.empty()) return "(" + num + ")";
  return "(" + num + ")/" + den;
}

DimDegree dimDegreeFromNumerator(IntPoly q, std::size_t numVars) {
  trim(q);
  if (q.empty()) return {-1, 0};
  int k = 0;
  for (;;) {
    std::int64_t at1 = 0;
    for (auto c : q) at1 += c;
    if (at1 != 0) return {static_cast<int>(numVars) - k, at1};
    // Synthetic division by (1 - T): q = (1 - T) s, s_i = sum_{j<=i} q_j.
    IntPoly s(q.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      s[i] = acc;
    }
    q = std::move(s);
    trim(q);
    ++k;
  }
}

}  // namespace reeskit
