#include "reeskit/ring.hpp"

#include <algorithm>
#include <set>

#include "reeskit/polynomial.hpp"

namespace reeskit {

MonomialOrder::MonomialOrder(std::vector<OrderBlock> blocks, std::vector<int> weights)
    : blocks_(std::move(blocks)), weights_(std::move(weights)) {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b.size;
  if (total != weights_.size())
    throw Error("monomial order blocks cover " + std::to_string(total) + " variables, ring has " +
                std::to_string(weights_.size()));
}

std::vector<OrderBlock> MonomialOrder::elimination(std::size_t k, std::size_t n) {
  if (k == 0 || k == n) return grevlex(n);
  return {{k, OrderKind::Grevlex}, {n - k, OrderKind::Grevlex}};
}

bool MonomialOrder::isDegreeCompatible() const {
  return blocks_.size() <= 1 && (blocks_.empty() || blocks_[0].kind == OrderKind::Grevlex);
}

int MonomialOrder::compare(const Exp* a, const Exp* b) const {
  std::size_t start = 0;
  for (const auto& block : blocks_) {
    const std::size_t end = start + block.size;
    if (block.kind == OrderKind::Grevlex) {
      long da = 0, db = 0;
      for (std::size_t i = start; i < end; ++i) {
        da += static_cast<long>(weights_[i]) * a[i];
        db += static_cast<long>(weights_[i]) * b[i];
      }
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = end; i-- > start;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    } else {
      for (std::size_t i = start; i < end; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    start = end;
  }
  return 0;
}

Ring::~Ring() = default;

RingPtr Ring::make(const Spec& spec) {
  auto ring = std::shared_ptr<Ring>(new Ring(Field(spec.characteristic)));
  std::set<std::string> seen;
  for (const auto& [tag, names] : spec.blocks) {
    VariableBlock block{tag, ring->names_.size(), ring->names_.size()};
    for (const auto& n : names) {
      if (n.empty()) throw Error("empty variable name");
      if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
      ring->names_.push_back(n);
    }
    block.end = ring->names_.size();
    ring->blocks_.push_back(block);
  }
  const std::size_t n = ring->names_.size();
  std::vector<int> weights = spec.weights.empty() ? std::vector<int>(n, 1) : spec.weights;
  if (weights.size() != n) throw Error("weight vector length does not match variable count");
  for (int w : weights)
    if (w < 0) throw Error("variable degrees must be non-negative");
  ring->order_ = MonomialOrder(spec.order.empty() ? MonomialOrder::grevlex(n) : spec.order,
                               std::move(weights));
  return ring;
}

RingPtr Ring::make(std::uint32_t p, const std::vector<std::string>& names) {
  Spec spec;
  spec.characteristic = p;
  spec.blocks.push_back({kBaseTag, names});
  return make(spec);
}

RingPtr Ring::withQuotientBasis(const RingPtr& ambient, std::vector<Polynomial> basis) {
  RingPtr amb = ambient->ambient();
  if (basis.empty()) return amb;
  auto ring = std::shared_ptr<Ring>(new Ring(amb->field_));
  ring->names_ = amb->names_;
  ring->blocks_ = amb->blocks_;
  ring->order_ = amb->order_;
  for (auto& b : basis) b = b.withRing(amb);
  ring->quotient_ = std::move(basis);
  ring->ambient_ = amb;
  return ring;
}

RingPtr Ring::ambient() const {
  if (ambient_) return ambient_;
  return shared_from_this();
}

std::optional<std::size_t> Ring::indexOf(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::requireIndex(const std::string& name) const {
  auto idx = indexOf(name);
  if (!idx) throw Error("unknown variable '" + name + "'");
  return *idx;
}

const VariableBlock* Ring::findBlock(const std::string& tag) const {
  for (const auto& b : blocks_)
    if (b.tag == tag) return &b;
  return nullptr;
}

bool Ring::sameAs(const Ring& other) const {
  if (this == &other) return true;
  if (!(field_ == other.field_) || names_ != other.names_ || blocks_ != other.blocks_ ||
      !(order_ == other.order_) || quotient_.size() != other.quotient_.size())
    return false;
  for (std::size_t i = 0; i < quotient_.size(); ++i)
    if (Polynomial::canonicalCompare(quotient_[i], other.quotient_[i]) != 0) return false;
  return true;
}

std::string Ring::describe() const {
  std::string out = "GF(" + std::to_string(field_.modulus()) + ")[";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += " | ";
    for (std::size_t i = blocks_[b].begin; i < blocks_[b].end; ++i) {
      if (i != blocks_[b].begin) out += ", ";
      out += names_[i];
    }
  }
  out += "]";
  if (hasQuotient()) {
    out += "/(";
    for (std::size_t i = 0; i < quotient_.size(); ++i) {
      if (i) out += ", ";
      out += quotient_[i].toString();
    }
    out += ")";
  }
  return out;
}

bool sameRing(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->sameAs(*b);
}

void requireSameRing(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!sameRing(a, b)) throw Error(std::string("ring mismatch in ") + what);
}

}  // namespace reeskit
