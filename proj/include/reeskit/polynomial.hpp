#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reeskit/ring.hpp"

namespace reeskit {

/// Sparse polynomial: terms strictly descending in the ring's order, no zero
/// coefficients. Exponents are stored flat (numVars per term). In a ring with
/// a quotient the stored form is always the normal form.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial fromInt(RingPtr ring, std::int64_t v);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, Coeff c, std::span<const Exp> exps);
  /// Parses the canonical text syntax, e.g. "3*x^2*y - w_0 + 1".
  static Polynomial parse(RingPtr ring, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  std::size_t numVars() const { return ring_ ? ring_->numVars() : 0; }
  std::size_t size() const { return coeffs_.size(); }
  bool isZero() const { return coeffs_.empty(); }
  bool isConstant() const;
  Coeff coeff(std::size_t i) const { return coeffs_[i]; }
  std::span<const Exp> exps(std::size_t i) const {
    return {exps_.data() + i * numVars(), numVars()};
  }
  const Exp* expPtr(std::size_t i) const { return exps_.data() + i * numVars(); }
  Coeff leadCoeff() const { return coeffs_.front(); }
  std::span<const Exp> leadExps() const { return exps(0); }

  /// Weighted degree of a term under the ring's variable degrees.
  int termDegree(std::size_t i) const;
  /// Maximum weighted degree over all terms; -1 for zero.
  int degree() const;
  int degreeIn(std::size_t var) const;
  /// Maximum degree under an explicit weight vector (zero weights ignore a variable).
  int degreeWith(const std::vector<int>& weights) const;
  bool isHomogeneous() const;
  bool isHomogeneous(const std::vector<int>& weights) const;
  bool involves(std::size_t var) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial scaled(Coeff c) const;
  Polynomial pow(std::uint64_t e) const;
  Polynomial monic() const;
  /// Multiply by c * x^exps (no quotient normalisation; the order is preserved).
  Polynomial mulTerm(Coeff c, std::span<const Exp> exps) const;
  /// Formal partial derivative.
  Polynomial derivative(std::size_t var) const;

  /// Structural equality of normalised forms (rings must match).
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Total order used to sort generator lists: leading monomial, then the
  /// remaining terms, then coefficients.
  static int canonicalCompare(const Polynomial& a, const Polynomial& b);

  std::string toString() const;

  /// Same terms viewed in another ring with the same variables (and order).
  Polynomial withRing(RingPtr ring) const;
  /// Reorders terms after the ring's order changed; input ring must have the
  /// same number of variables.
  Polynomial reinterpret(RingPtr ring) const;

  // Low-level construction; terms need not be sorted or combined.
  class Builder;

 private:
  friend class Builder;
  friend class TermBuffer;
  friend Polynomial normalizeInQuotient(Polynomial p);

  RingPtr ring_;
  std::vector<Coeff> coeffs_;
  std::vector<Exp> exps_;
};

/// Collects terms in any order, then sorts and combines equal monomials.
class Polynomial::Builder {
 public:
  explicit Builder(RingPtr ring) : ring_(std::move(ring)) {}
  void add(Coeff c, std::span<const Exp> exps);
  void add(Coeff c, const Exp* exps) { add(c, {exps, ring_->numVars()}); }
  /// Appends assuming terms arrive strictly descending with nonzero coeffs.
  void appendSorted(Coeff c, const Exp* exps);
  std::size_t size() const { return coeffs_.size(); }
  /// Sort and combine; reduces modulo the ring's quotient when present.
  Polynomial build();
  /// Same as build() but skips quotient reduction.
  Polynomial buildRaw();

 private:
  RingPtr ring_;
  std::vector<Coeff> coeffs_;
  std::vector<Exp> exps_;
  bool sorted_ = true;
};

/// Division of `f` by `divisors` (any order) until no term is divisible by a
/// leading monomial. Divisors and f must share the variable layout; the result
/// keeps f's ring tag and is not quotient-normalised again.
Polynomial reduceByDivisors(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Normal form modulo the ring's quotient (identity without quotient).
Polynomial normalizeInQuotient(Polynomial p);

bool divides(std::span<const Exp> a, std::span<const Exp> b);
std::uint64_t divMask(std::span<const Exp> e);

std::vector<Polynomial> parsePolynomialList(RingPtr ring, const std::string& text);

}  // namespace reeskit
