#include "reeskit/upoly.hpp"

#include <algorithm>

namespace reeskit {

UPoly::UPoly(Field field, std::vector<Coeff> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= field_.modulus();
  trim();
}

UPoly UPoly::monomial(Field field, Coeff c, std::size_t degree) {
  UPoly r(field);
  if (c % field.modulus() == 0) return r;
  r.c_.assign(degree + 1, 0);
  r.c_[degree] = c % field.modulus();
  return r;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monic() const {
  if (isZero()) return *this;
  return scaled(field_.inv(leading()));
}

UPoly UPoly::scaled(Coeff s) const {
  UPoly r(field_);
  if (s == 0) return r;
  r.c_.reserve(c_.size());
  for (Coeff c : c_) r.c_.push_back(field_.mul(c, s));
  r.trim();
  return r;
}

UPoly UPoly::derivative() const {
  UPoly r(field_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(field_.mul(c_[i], field_.fromInt(static_cast<std::int64_t>(i))));
  r.trim();
  return r;
}

Coeff UPoly::evaluate(Coeff x) const {
  Coeff acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r(a.field_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.field_.add(a[i], b[i]);
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r(a.field_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.field_.sub(a[i], b[i]);
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r(a.field_);
  if (a.isZero() || b.isZero()) return r;
  const std::uint64_t p = a.field_.modulus();
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  // Accumulate lazily; reduce before the 64-bit accumulator can overflow.
  const std::size_t safe = static_cast<std::size_t>(~0ull / ((p - 1) * (p - 1) + 1));
  std::size_t pending = 0;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      acc[i + j] += static_cast<std::uint64_t>(a.c_[i]) * b.c_[j];
    if (++pending >= safe - 1) {
      for (auto& v : acc) v %= p;
      pending = 0;
    }
  }
  r.c_.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<Coeff>(acc[k] % p);
  r.trim();
  return r;
}

void UPoly::divRem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.isZero()) throw Error("polynomial division by zero");
  const Field& f = a.field_;
  r = a;
  q = UPoly(f);
  if (a.degree() < b.degree()) return;
  q.c_.assign(a.c_.size() - b.c_.size() + 1, 0);
  const Coeff lcInv = f.inv(b.leading());
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = r.c_.size(); k-- > db;) {
    Coeff c = r.c_[k];
    if (c == 0) continue;
    Coeff t = f.mul(c, lcInv);
    q.c_[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j)
      r.c_[k - db + j] = f.sub(r.c_[k - db + j], f.mul(t, b.c_[j]));
  }
  q.trim();
  r.trim();
}

UPoly operator%(const UPoly& a, const UPoly& b) {
  UPoly q(a.field_), r(a.field_);
  UPoly::divRem(a, b, q, r);
  return r;
}

UPoly operator/(const UPoly& a, const UPoly& b) {
  UPoly q(a.field_), r(a.field_);
  UPoly::divRem(a, b, q, r);
  return q;
}

std::string UPoly::toString(const std::string& var) const {
  if (isZero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    std::int64_t s = field_.toSigned(c_[k]);
    bool negative = s < 0;
    std::uint64_t mag = negative ? -s : s;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.isZero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly powMod(const UPoly& base, std::uint64_t e, const UPoly& modulus) {
  UPoly result = UPoly::monomial(base.field(), 1, 0) % modulus;
  UPoly b = base % modulus;
  while (e > 0) {
    if (e & 1) result = (result * b) % modulus;
    e >>= 1;
    if (e) b = (b * b) % modulus;
  }
  return result;
}

bool factorOrderLess(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

namespace {

using Rng = std::mt19937_64;

// f must be monic; returns (squarefree part, multiplicity) pairs.
void squareFree(const UPoly& f, int scale, std::vector<UFactor>& out) {
  const Field& field = f.field();
  const std::uint32_t p = field.modulus();
  UPoly c = gcd(f, f.derivative());
  UPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power: c(x) = g(x)^p with g's coefficients read off directly.
    std::vector<Coeff> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
    squareFree(UPoly(field, std::move(root)).monic(), scale * static_cast<int>(p), out);
  }
}

UPoly randomBelow(const Field& field, int degree, Rng& rng) {
  std::vector<Coeff> c(static_cast<std::size_t>(std::max(degree, 1)));
  for (auto& v : c) v = static_cast<Coeff>(rng() % field.modulus());
  return UPoly(field, std::move(c));
}

// Splits a product of distinct monic irreducibles, all of degree d.
void equalDegree(const UPoly& t, int d, Rng& rng, std::vector<UPoly>& out) {
  if (t.degree() == d) {
    out.push_back(t);
    return;
  }
  const Field& field = t.field();
  const std::uint32_t p = field.modulus();
  const UPoly one = UPoly::monomial(field, 1, 0);
  for (;;) {
    UPoly a = randomBelow(field, t.degree(), rng);
    if (a.degree() < 1) continue;
    UPoly b(field);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      UPoly term = a % t;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % t;
        b = b + term;
      }
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2).
      UPoly power = a % t;
      UPoly norm = power;
      for (int i = 1; i < d; ++i) {
        power = powMod(power, p, t);
        norm = (norm * power) % t;
      }
      b = powMod(norm, (p - 1) / 2, t) - one;
    }
    UPoly g = gcd(t, b);
    if (g.degree() > 0 && g.degree() < t.degree()) {
      equalDegree(g, d, rng, out);
      equalDegree(t / g, d, rng, out);
      return;
    }
  }
}

void distinctDegree(const UPoly& f, Rng& rng, std::vector<UPoly>& out) {
  const Field& field = f.field();
  const UPoly x = UPoly::monomial(field, 1, 1);
  UPoly g = f;
  UPoly h = x % g;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powMod(h, field.modulus(), g);
    UPoly t = gcd(g, h - x);
    if (t.degree() > 0) {
      equalDegree(t, d, rng, out);
      g = g / t;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.push_back(g.monic());
}

}  // namespace

UFactorization factorUnivariate(const UPoly& f, std::uint64_t seed) {
  if (f.isZero()) throw Error("cannot factor the zero polynomial");
  UFactorization result;
  result.unit = f.leading();
  if (f.degree() == 0) return result;
  Rng rng(seed);
  std::vector<UFactor> sqf;
  squareFree(f.monic(), 1, sqf);
  for (const auto& part : sqf) {
    std::vector<UPoly> irreducibles;
    distinctDegree(part.factor, rng, irreducibles);
    for (auto& q : irreducibles) result.factors.push_back({std::move(q), part.multiplicity});
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const UFactor& a, const UFactor& b) { return factorOrderLess(a.factor, b.factor); });
  return result;
}

}  // namespace reeskit
