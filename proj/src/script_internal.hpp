#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "reeskit/blowup.hpp"
#include "reeskit/decompose.hpp"
#include "reeskit/factor.hpp"
#include "reeskit/intersection.hpp"
#include "reeskit/rees.hpp"
#include "reeskit/script.hpp"

namespace reeskit::script {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Int, Str, Name, Call, Unary, Binary, List, Index };
  Kind kind;
  int line = 0;
  int column = 0;
  std::string text;  // name, operator or string contents
  std::int64_t number = 0;
  std::vector<ExprPtr> args;
};

struct VarDecl {
  std::string name;
  int weight = 1;
};

struct Statement {
  enum class Kind { Ring, Use, IdealDecl, Let, Print, AssertEqual, AssertTrue, Bare };
  Kind kind;
  int line = 0;
  int column = 0;
  std::string name;
  // ring declarations
  std::int64_t characteristic = 0;
  std::vector<std::vector<VarDecl>> blocks;
  std::string order;
  std::vector<ExprPtr> args;  // quotient generators, ideal generators or operands
};

struct Infinity {
  friend bool operator==(const Infinity&, const Infinity&) { return true; }
};
struct PrimeList {
  std::vector<ComponentReport> items;
};
struct WeightedList {
  std::vector<WeightedComponent> items;
};
struct FactorValue {
  Factorization fac;
  RingPtr ring;
};
struct Value;
struct List {
  std::vector<Value> items;
};

struct Value {
  using Variant = std::variant<std::int64_t, bool, std::string, Infinity, FieldElement, Polynomial, Ideal,
                               Matrix, RingPtr, RingMap, PresentedModule, BlowupChart, GroebnerBasis,
                               HilbertSeries, ReductionCertificate, FactorValue, PrimeList, WeightedList,
                               List>;
  Variant v;

  template <typename T>
  Value(T x) : v(std::move(x)) {}
  Value() : v(std::int64_t{0}) {}

  template <typename T>
  bool is() const { return std::holds_alternative<T>(v); }
  template <typename T>
  const T& get() const { return std::get<T>(v); }
};

std::string kindName(const Value& v);

/// Interpreter state shared with the operations.
struct Context {
  Config config;
  RingPtr ring;  // current ring for names and integer literals
  std::map<std::string, Value> env;
  std::vector<std::string> flags;  // attached to the statement being evaluated

  RingPtr requireRing() const;
};

// Coercions; each throws Error naming the expected kind.
std::int64_t asInt(const Value& v);
bool asBool(const Value& v);
const std::string& asString(const Value& v);
Polynomial asPoly(const Context& ctx, const Value& v);
Polynomial asPolyIn(const Value& v, const RingPtr& ring);
Ideal asIdeal(const Context& ctx, const Value& v);
Matrix asMatrix(const Context& ctx, const Value& v);
RingPtr asRing(const Value& v);
const RingMap& asMap(const Value& v);
PresentedModule asModule(const Context& ctx, const Value& v);
const BlowupChart& asChart(const Value& v);
const List& asList(const Value& v);

/// Structural equality used by `==` and assertEqual. Lists of components
/// compare as multisets.
bool valuesEqual(const Value& a, const Value& b);

std::string renderText(const Value& v);
std::string renderJson(const Value& v);

using OpFn = std::function<Value(Context&, const std::vector<Value>&)>;
struct OpDef {
  std::string signature;
  std::string example;
  std::size_t minArgs;
  std::size_t maxArgs;
  OpFn fn;
};
const std::map<std::string, OpDef>& opRegistry();

/// Arithmetic and comparison operators ("+", "-", "*", "/", "^", "==", ...).
Value applyBinary(Context& ctx, const std::string& op, const Value& a, const Value& b);
Value applyUnaryMinus(Context& ctx, const Value& a);

}  // namespace reeskit::script
