#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reeskit/field.hpp"

namespace reeskit {

using Exp = std::uint16_t;
inline constexpr int kMaxExponent = 32767;

class Ring;
class Polynomial;
using RingPtr = std::shared_ptr<const Ring>;

enum class OrderKind { Grevlex, Lex };

struct OrderBlock {
  std::size_t size;
  OrderKind kind;
  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
};

/// Product of block orders: the first block dominates, ties are broken by the
/// next. Grevlex blocks compare weighted degree first.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::vector<OrderBlock> blocks, std::vector<int> weights);

  /// Returns >0 when a > b, <0 when a < b, 0 when equal.
  int compare(const Exp* a, const Exp* b) const;

  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t numVars() const { return weights_.size(); }
  /// True for a single grevlex block: lead terms then carry top weighted degree.
  bool isDegreeCompatible() const;

  static std::vector<OrderBlock> grevlex(std::size_t n) { return {{n, OrderKind::Grevlex}}; }
  static std::vector<OrderBlock> lex(std::size_t n) { return {{n, OrderKind::Lex}}; }
  /// First `k` variables eliminate the remaining ones; grevlex inside each block.
  static std::vector<OrderBlock> elimination(std::size_t k, std::size_t n);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<OrderBlock> blocks_;
  std::vector<int> weights_;
};

/// Named group of consecutive variables, e.g. the base block {x,y} and the
/// Rees block {w_0,w_1} of a flattened tower.
struct VariableBlock {
  std::string tag;
  std::size_t begin;
  std::size_t end;
  friend bool operator==(const VariableBlock&, const VariableBlock&) = default;
};

inline constexpr const char* kBaseTag = "base";
inline constexpr const char* kReesTag = "rees";

/// Polynomial ring over GF(p) with named variables in blocks, per-variable
/// degrees, a monomial order and an optional quotient ideal. The quotient is
/// stored as a reduced Groebner basis living in the ambient (quotient-free) ring.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  struct Spec {
    std::uint32_t characteristic = 101;
    std::vector<std::pair<std::string, std::vector<std::string>>> blocks;  // (tag, names)
    std::vector<int> weights;                                              // empty: all 1
    std::vector<OrderBlock> order;                                         // empty: grevlex
  };

  /// Builds a quotient-free ring. Throws on non-prime p or duplicate names.
  static RingPtr make(const Spec& spec);
  static RingPtr make(std::uint32_t p, const std::vector<std::string>& names);
  ~Ring();

  const Field& field() const { return field_; }
  std::size_t numVars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int weight(std::size_t i) const { return order_.weights()[i]; }
  const std::vector<int>& weights() const { return order_.weights(); }
  std::optional<std::size_t> indexOf(const std::string& name) const;
  std::size_t requireIndex(const std::string& name) const;

  const std::vector<VariableBlock>& blocks() const { return blocks_; }
  const VariableBlock* findBlock(const std::string& tag) const;
  const MonomialOrder& order() const { return order_; }

  bool hasQuotient() const { return !quotient_.empty(); }
  /// Reduced Groebner basis of the quotient ideal, in ambient().
  const std::vector<Polynomial>& quotient() const { return quotient_; }
  /// The same ring without its quotient (itself when there is none).
  RingPtr ambient() const;

  /// Structural equality: same field, names, blocks, order and quotient.
  bool sameAs(const Ring& other) const;

  std::string describe() const;

  // Used by the Groebner layer to attach a quotient.
  static RingPtr withQuotientBasis(const RingPtr& ambient, std::vector<Polynomial> basis);

 private:
  Ring(Field field) : field_(field) {}

  Field field_;
  std::vector<std::string> names_;
  std::vector<VariableBlock> blocks_;
  MonomialOrder order_;
  std::vector<Polynomial> quotient_;
  RingPtr ambient_;
};

bool sameRing(const RingPtr& a, const RingPtr& b);
void requireSameRing(const RingPtr& a, const RingPtr& b, const char* what);

}  // namespace reeskit
