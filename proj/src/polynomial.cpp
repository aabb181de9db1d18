#include "reeskit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "reducer.hpp"

namespace reeskit {

bool divides(std::span<const Exp> a, std::span<const Exp> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::uint64_t divMask(std::span<const Exp> e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) m |= 1ull << (i & 63);
  return m;
}

namespace {

Exp addExp(Exp a, Exp b) {
  int s = static_cast<int>(a) + b;
  if (s > kMaxExponent) throw Error("exponent overflow (limit 32767)");
  return static_cast<Exp>(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// Builder

void Polynomial::Builder::add(Coeff c, std::span<const Exp> exps) {
  c %= ring_->field().modulus();
  if (c == 0) return;
  if (sorted_ && !coeffs_.empty()) {
    const Exp* last = exps_.data() + exps_.size() - ring_->numVars();
    if (ring_->order().compare(last, exps.data()) <= 0) sorted_ = false;
  }
  coeffs_.push_back(c);
  exps_.insert(exps_.end(), exps.begin(), exps.end());
}

void Polynomial::Builder::appendSorted(Coeff c, const Exp* exps) {
  coeffs_.push_back(c);
  exps_.insert(exps_.end(), exps, exps + ring_->numVars());
}

Polynomial Polynomial::Builder::buildRaw() {
  Polynomial p(ring_);
  const std::size_t nv = ring_->numVars();
  const std::size_t n = coeffs_.size();
  if (sorted_) {
    p.coeffs_ = std::move(coeffs_);
    p.exps_ = std::move(exps_);
    return p;
  }
  const auto& order = ring_->order();
  const Field& field = ring_->field();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(exps_.data() + a * nv, exps_.data() + b * nv) > 0;
  });
  for (std::size_t k = 0; k < n;) {
    std::size_t j = k;
    Coeff c = 0;
    const Exp* e = exps_.data() + idx[k] * nv;
    while (j < n && (nv == 0 || order.compare(exps_.data() + idx[j] * nv, e) == 0)) {
      c = field.add(c, coeffs_[idx[j]]);
      ++j;
    }
    if (c != 0) {
      p.coeffs_.push_back(c);
      p.exps_.insert(p.exps_.end(), e, e + nv);
    }
    k = j;
  }
  coeffs_.clear();
  exps_.clear();
  return p;
}

Polynomial Polynomial::Builder::build() { return normalizeInQuotient(buildRaw()); }

// ---------------------------------------------------------------------------
// Construction

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Builder b(ring);
  std::vector<Exp> zero(ring->numVars(), 0);
  b.add(c, zero);
  return b.build();
}

Polynomial Polynomial::fromInt(RingPtr ring, std::int64_t v) {
  Coeff c = ring->field().fromInt(v);
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->numVars()) throw Error("variable index out of range");
  std::vector<Exp> e(ring->numVars(), 0);
  e[index] = 1;
  Builder b(ring);
  b.add(1, e);
  return b.build();
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  std::size_t idx = ring->requireIndex(name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::monomial(RingPtr ring, Coeff c, std::span<const Exp> exps) {
  Builder b(ring);
  b.add(c, exps);
  return b.build();
}

bool Polynomial::isConstant() const {
  if (isZero()) return true;
  if (size() != 1) return false;
  for (Exp e : exps(0))
    if (e) return false;
  return true;
}

int Polynomial::termDegree(std::size_t i) const {
  int d = 0;
  const auto& w = ring_->weights();
  auto e = exps(i);
  for (std::size_t k = 0; k < e.size(); ++k) d += w[k] * e[k];
  return d;
}

int Polynomial::degree() const {
  int d = -1;
  for (std::size_t i = 0; i < size(); ++i) d = std::max(d, termDegree(i));
  return d;
}

int Polynomial::degreeIn(std::size_t var) const {
  int d = isZero() ? -1 : 0;
  for (std::size_t i = 0; i < size(); ++i) d = std::max(d, static_cast<int>(exps(i)[var]));
  return d;
}

int Polynomial::degreeWith(const std::vector<int>& weights) const {
  int best = -1;
  for (std::size_t i = 0; i < size(); ++i) {
    int d = 0;
    auto e = exps(i);
    for (std::size_t k = 0; k < e.size(); ++k) d += weights[k] * e[k];
    best = std::max(best, d);
  }
  return best;
}

bool Polynomial::isHomogeneous() const { return isHomogeneous(ring_->weights()); }

bool Polynomial::isHomogeneous(const std::vector<int>& weights) const {
  if (size() <= 1) return true;
  int d0 = -1;
  for (std::size_t i = 0; i < size(); ++i) {
    int d = 0;
    auto e = exps(i);
    for (std::size_t k = 0; k < e.size(); ++k) d += weights[k] * e[k];
    if (i == 0)
      d0 = d;
    else if (d != d0)
      return false;
  }
  return true;
}

bool Polynomial::involves(std::size_t var) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (exps(i)[var]) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

// Merges a + s*b where both are sorted descending in `order`.
Polynomial mergeScaled(const Polynomial& a, const Polynomial& b, Coeff s) {
  const RingPtr& ring = a.ring();
  const auto& order = ring->order();
  const Field& field = ring->field();
  Polynomial::Builder out(ring);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size())
      cmp = -1;
    else if (j == b.size())
      cmp = 1;
    else
      cmp = order.compare(a.expPtr(i), b.expPtr(j));
    if (cmp > 0) {
      out.appendSorted(a.coeff(i), a.expPtr(i));
      ++i;
    } else if (cmp < 0) {
      out.appendSorted(field.mul(s, b.coeff(j)), b.expPtr(j));
      ++j;
    } else {
      Coeff c = field.add(a.coeff(i), field.mul(s, b.coeff(j)));
      if (c) out.appendSorted(c, a.expPtr(i));
      ++i;
      ++j;
    }
  }
  return out.buildRaw();
}

}  // namespace

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a.ring_, b.ring_, "addition");
  return mergeScaled(a, b, 1);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a.ring_, b.ring_, "subtraction");
  return mergeScaled(a, b, a.ring_->field().neg(1));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a.ring_, b.ring_, "multiplication");
  if (a.isZero() || b.isZero()) return Polynomial(a.ring_);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  Polynomial acc(a.ring_);
  for (std::size_t i = 0; i < small.size(); ++i) {
    Polynomial part = large.mulTerm(small.coeff(i), small.exps(i));
    acc = mergeScaled(acc, part, 1);
  }
  return normalizeInQuotient(std::move(acc));
}

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(ring_);
  c %= ring_->field().modulus();
  if (c == 0) return r;
  r.exps_ = exps_;
  r.coeffs_.reserve(coeffs_.size());
  for (Coeff x : coeffs_) r.coeffs_.push_back(ring_->field().mul(x, c));
  return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  return scaled(ring_->field().inv(leadCoeff()));
}

Polynomial Polynomial::mulTerm(Coeff c, std::span<const Exp> e) const {
  Polynomial r(ring_);
  c %= ring_->field().modulus();
  if (c == 0 || isZero()) return r;
  const std::size_t nv = numVars();
  r.coeffs_.reserve(size());
  r.exps_.resize(exps_.size());
  for (std::size_t i = 0; i < size(); ++i) {
    r.coeffs_.push_back(ring_->field().mul(coeffs_[i], c));
    for (std::size_t k = 0; k < nv; ++k) r.exps_[i * nv + k] = addExp(exps_[i * nv + k], e[k]);
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Builder b(ring_);
  const Field& f = ring_->field();
  std::vector<Exp> e(numVars());
  for (std::size_t i = 0; i < size(); ++i) {
    auto src = exps(i);
    if (src[var] == 0) continue;
    std::copy(src.begin(), src.end(), e.begin());
    Coeff c = f.mul(coeffs_[i], f.fromInt(src[var]));
    e[var] -= 1;
    b.add(c, e);
  }
  return b.build();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!sameRing(a.ring_, b.ring_)) return false;
  return a.coeffs_ == b.coeffs_ && a.exps_ == b.exps_;
}

int Polynomial::canonicalCompare(const Polynomial& a, const Polynomial& b) {
  const auto& order = a.ring_->order();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = order.compare(a.expPtr(i), b.expPtr(i));
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() > b.size() ? 1 : -1;
  for (std::size_t i = 0; i < n; ++i) {
    auto sa = a.ring_->field().toSigned(a.coeff(i));
    auto sb = b.ring_->field().toSigned(b.coeff(i));
    if (sa != sb) return sa > sb ? 1 : -1;
  }
  return 0;
}

Polynomial Polynomial::withRing(RingPtr ring) const {
  Polynomial r(std::move(ring));
  r.coeffs_ = coeffs_;
  r.exps_ = exps_;
  return r;
}

Polynomial Polynomial::reinterpret(RingPtr ring) const {
  if (ring->numVars() != numVars()) throw Error("reinterpret: variable count mismatch");
  Builder b(ring);
  for (std::size_t i = 0; i < size(); ++i) b.add(coeffs_[i], exps(i));
  return b.build();
}

std::string Polynomial::toString() const {
  if (isZero()) return "0";
  std::string out;
  const Field& f = ring_->field();
  for (std::size_t i = 0; i < size(); ++i) {
    std::int64_t s = f.toSigned(coeffs_[i]);
    bool negative = s < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-s) : static_cast<std::uint64_t>(s);
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto e = exps(i);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty())
      out += std::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division

Polynomial reduceByDivisors(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  std::vector<detail::Divisor> divs;
  divs.reserve(divisors.size());
  for (const auto& g : divisors)
    if (!g.isZero()) divs.push_back(detail::makeDivisor(g));
  return detail::reduce(f, divs, true);
}

Polynomial normalizeInQuotient(Polynomial p) {
  if (!p.ring_ || !p.ring_->hasQuotient() || p.isZero()) return p;
  RingPtr ring = p.ring_;
  Polynomial r = reduceByDivisors(p, ring->quotient());
  r.ring_ = ring;
  return r;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  PolyParser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), s_(text) {}

  Polynomial parseAll() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  std::vector<Polynomial> parseList() {
    std::vector<Polynomial> out;
    skip();
    if (pos_ == s_.size()) return out;
    for (;;) {
      out.push_back(expr());
      skip();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != ',') fail("expected ','");
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    skip();
    Polynomial acc(ring_);
    bool negate = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        char op = s_[pos_++];
        Polynomial t = term();
        acc = op == '+' ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        acc = acc * power();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        Polynomial d = power();
        if (!d.isConstant() || d.isZero()) fail("division only by nonzero constants");
        acc = acc.scaled(ring_->field().inv(d.leadCoeff()));
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = primary();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(std::stoull(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Coeff v = 0;
      const Field& f = ring_->field();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = f.add(f.mul(v, 10), static_cast<Coeff>(s_[pos_++] - '0') % f.modulus());
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto idx = ring_->indexOf(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) {
  return PolyParser(std::move(ring), text).parseAll();
}

std::vector<Polynomial> parsePolynomialList(RingPtr ring, const std::string& text) {
  return PolyParser(std::move(ring), text).parseList();
}

}  // namespace reeskit
