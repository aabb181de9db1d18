#pragma once

#include <cstdint>
#include <string>

#include "reeskit/error.hpp"

namespace reeskit {

using Coeff = std::uint32_t;

bool isPrime(std::uint64_t n);

/// Arithmetic context for GF(p), 2 <= p < 2^31. Residues are stored as
/// fully reduced unsigned values so products fit in 64 bits.
class Field {
 public:
  explicit Field(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff pow(Coeff a, std::uint64_t e) const;

  Coeff fromInt(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2], used for display.
  std::int64_t toSigned(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// A residue tagged with its modulus. Mixing moduli is a hard error.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint32_t modulus);

  Coeff value() const { return value_; }
  std::uint32_t modulus() const { return field_.modulus(); }
  const Field& field() const { return field_; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string toString() const;

 private:
  FieldElement(Coeff v, Field f) : value_(v), field_(f) {}
  static const Field& common(const FieldElement& a, const FieldElement& b);

  Coeff value_;
  Field field_;
};

}  // namespace reeskit
