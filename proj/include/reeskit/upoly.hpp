#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reeskit/field.hpp"

namespace reeskit {

/// Dense univariate polynomial over GF(p); coefficients stored low degree first
/// with no trailing zeros (the zero polynomial is empty).
class UPoly {
 public:
  explicit UPoly(Field field) : field_(field) {}
  UPoly(Field field, std::vector<Coeff> coeffs);

  static UPoly monomial(Field field, Coeff c, std::size_t degree);

  const Field& field() const { return field_; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  bool isOne() const { return c_.size() == 1 && c_[0] == 1; }
  Coeff leading() const { return c_.empty() ? 0 : c_.back(); }
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  UPoly monic() const;
  UPoly derivative() const;
  Coeff evaluate(Coeff x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(Coeff s) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  static void divRem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  friend UPoly operator%(const UPoly& a, const UPoly& b);
  friend UPoly operator/(const UPoly& a, const UPoly& b);

  std::string toString(const std::string& var = "x") const;

 private:
  void trim();

  Field field_;
  std::vector<Coeff> c_;
};

/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly powMod(const UPoly& base, std::uint64_t e, const UPoly& modulus);

struct UFactor {
  UPoly factor;
  int multiplicity;
};

struct UFactorization {
  Coeff unit = 0;
  std::vector<UFactor> factors;  ///< monic irreducible, sorted by degree then coefficients
};

/// Square-free decomposition, then distinct-degree and Cantor-Zassenhaus
/// equal-degree splitting. The seed drives the splitting randomness only, so
/// the result is independent of it.
UFactorization factorUnivariate(const UPoly& f, std::uint64_t seed = 0);

bool factorOrderLess(const UPoly& a, const UPoly& b);

}  // namespace reeskit
