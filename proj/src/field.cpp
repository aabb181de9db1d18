#include "reeskit/field.hpp"

namespace reeskit {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw Error("modulus must be below 2^31, got " + std::to_string(p));
  if (!isPrime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
}

Coeff Field::inv(Coeff a) const {
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
  std::int64_t t = 0, newT = 1;
  std::int64_t r = p_, newR = a;
  while (newR != 0) {
    std::int64_t q = r / newR;
    std::int64_t tmp = t - q * newT;
    t = newT;
    newT = tmp;
    tmp = r - q * newR;
    r = newR;
    newR = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff Field::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff Field::fromInt(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t modulus)
    : value_(0), field_(modulus) {
  value_ = field_.fromInt(value);
}

const Field& FieldElement::common(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_))
    throw Error("modulus mismatch: GF(" + std::to_string(a.modulus()) + ") vs GF(" +
                std::to_string(b.modulus()) + ")");
  return a.field_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = FieldElement::common(a, b);
  return {f.add(a.value_, b.value_), f};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = FieldElement::common(a, b);
  return {f.sub(a.value_, b.value_), f};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = FieldElement::common(a, b);
  return {f.mul(a.value_, b.value_), f};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = FieldElement::common(a, b);
  return {f.div(a.value_, b.value_), f};
}

FieldElement FieldElement::operator-() const { return {field_.neg(value_), field_}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  FieldElement::common(a, b);
  return a.value_ == b.value_;
}

FieldElement FieldElement::inverse() const { return {field_.inv(value_), field_}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_.pow(value_, e), field_}; }

std::string FieldElement::toString() const { return std::to_string(field_.toSigned(value_)); }

}  // namespace reeskit
