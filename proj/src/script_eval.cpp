#include <algorithm>

#include "script_internal.hpp"

namespace reeskit::script {

namespace {

const char* kindOf(const Value::Variant& v) {
  static const char* names[] = {"integer", "boolean", "string", "infinity", "field-element", "polynomial",
                                "ideal", "matrix", "ring", "map", "module", "chart", "groebner-basis",
                                "hilbert-series", "reduction-certificate", "factorization", "components",
                                "weighted-components", "list"};
  return names[v.index()];
}

[[noreturn]] void typeError(const char* want, const Value& got) {
  throw Error(std::string("expected ") + want + ", got " + kindOf(got.v));
}

}  // namespace

std::string kindName(const Value& v) { return kindOf(v.v); }

RingPtr Context::requireRing() const {
  if (!ring) throw Error("no current ring; declare one with 'ring R = zmod p [...]'");
  return ring;
}

std::int64_t asInt(const Value& v) {
  if (v.is<std::int64_t>()) return v.get<std::int64_t>();
  if (v.is<Polynomial>()) {
    const Polynomial& p = v.get<Polynomial>();
    if (p.isZero()) return 0;
    if (p.isConstant()) return p.ring()->field().toSigned(p.leadCoeff());
  }
  typeError("an integer", v);
}

bool asBool(const Value& v) {
  if (!v.is<bool>()) typeError("a boolean", v);
  return v.get<bool>();
}

const std::string& asString(const Value& v) {
  if (!v.is<std::string>()) typeError("a string", v);
  return v.get<std::string>();
}

Polynomial asPolyIn(const Value& v, const RingPtr& ring) {
  if (v.is<std::int64_t>()) return Polynomial::fromInt(ring, v.get<std::int64_t>());
  if (v.is<FieldElement>()) {
    const FieldElement& f = v.get<FieldElement>();
    if (f.modulus() != ring->field().modulus()) throw Error("field element modulus differs from the ring's");
    return Polynomial::constant(ring, f.value());
  }
  if (v.is<Polynomial>()) {
    const Polynomial& p = v.get<Polynomial>();
    if (!sameRing(p.ring(), ring)) throw Error("polynomial belongs to another ring; use sub(f, R)");
    return p;
  }
  typeError("a polynomial", v);
}

Polynomial asPoly(const Context& ctx, const Value& v) {
  if (v.is<Polynomial>()) return v.get<Polynomial>();
  return asPolyIn(v, ctx.requireRing());
}

Ideal asIdeal(const Context& ctx, const Value& v) {
  if (v.is<Ideal>()) return v.get<Ideal>();
  if (v.is<Polynomial>()) return Ideal(v.get<Polynomial>().ring(), {v.get<Polynomial>()});
  if (v.is<std::int64_t>()) return Ideal(ctx.requireRing(), {asPoly(ctx, v)});
  if (v.is<List>()) {
    RingPtr ring = ctx.ring;
    for (const auto& item : v.get<List>().items)
      if (item.is<Polynomial>()) ring = item.get<Polynomial>().ring();
    if (!ring) throw Error("cannot infer the ring of an ideal");
    std::vector<Polynomial> gens;
    for (const auto& item : v.get<List>().items) gens.push_back(asPolyIn(item, ring));
    return Ideal(ring, gens);
  }
  typeError("an ideal", v);
}

Matrix asMatrix(const Context& ctx, const Value& v) {
  if (v.is<Matrix>()) return v.get<Matrix>();
  (void)ctx;
  typeError("a matrix", v);
}

RingPtr asRing(const Value& v) {
  if (v.is<RingPtr>()) return v.get<RingPtr>();
  if (v.is<BlowupChart>()) return v.get<BlowupChart>().ring;
  if (v.is<Ideal>()) return v.get<Ideal>().ring();
  if (v.is<Polynomial>()) return v.get<Polynomial>().ring();
  if (v.is<Matrix>()) return v.get<Matrix>().ring();
  typeError("a ring", v);
}

const RingMap& asMap(const Value& v) {
  if (!v.is<RingMap>()) typeError("a ring map", v);
  return v.get<RingMap>();
}

PresentedModule asModule(const Context& ctx, const Value& v) {
  if (v.is<PresentedModule>()) return v.get<PresentedModule>();
  if (v.is<Matrix>()) return PresentedModule::cokernel(v.get<Matrix>());
  return PresentedModule::fromIdeal(asIdeal(ctx, v));
}

const BlowupChart& asChart(const Value& v) {
  if (!v.is<BlowupChart>()) typeError("a blowup chart", v);
  return v.get<BlowupChart>();
}

const List& asList(const Value& v) {
  if (!v.is<List>()) typeError("a list", v);
  return v.get<List>();
}

namespace {

/// Elements of collection-like values, for multiset comparison.
bool collectionItems(const Value& v, std::vector<Value>& out) {
  if (v.is<List>()) {
    out = v.get<List>().items;
    return true;
  }
  if (v.is<PrimeList>()) {
    for (const auto& c : v.get<PrimeList>().items) out.push_back(c.prime);
    return true;
  }
  if (v.is<WeightedList>()) {
    for (const auto& c : v.get<WeightedList>().items)
      out.push_back(List{{Value(std::int64_t{c.multiplicity}), Value(c.prime)}});
    return true;
  }
  if (v.is<FactorValue>()) {
    for (const auto& f : v.get<FactorValue>().fac.factors)
      out.push_back(List{{Value(f.factor), Value(std::int64_t{f.multiplicity})}});
    return true;
  }
  return false;
}

bool ordered(const Value& v) { return v.is<List>(); }

}  // namespace

bool valuesEqual(const Value& a, const Value& b) {
  std::vector<Value> xa, xb;
  if (collectionItems(a, xa) && collectionItems(b, xb)) {
    if (xa.size() != xb.size()) return false;
    if (ordered(a) && ordered(b)) {
      for (std::size_t i = 0; i < xa.size(); ++i)
        if (!valuesEqual(xa[i], xb[i])) return false;
      return true;
    }
    std::vector<bool> used(xb.size(), false);
    for (const auto& x : xa) {
      bool found = false;
      for (std::size_t j = 0; j < xb.size() && !found; ++j)
        if (!used[j] && valuesEqual(x, xb[j])) found = used[j] = true;
      if (!found) return false;
    }
    return true;
  }
  if (a.is<Polynomial>() || b.is<Polynomial>()) {
    if (a.is<Ideal>() || b.is<Ideal>()) return false;
    RingPtr r = a.is<Polynomial>() ? a.get<Polynomial>().ring() : b.get<Polynomial>().ring();
    try {
      return asPolyIn(a, r) == asPolyIn(b, r);
    } catch (const Error&) {
      return false;
    }
  }
  if (a.v.index() != b.v.index()) return false;
  if (a.is<std::int64_t>()) return a.get<std::int64_t>() == b.get<std::int64_t>();
  if (a.is<bool>()) return a.get<bool>() == b.get<bool>();
  if (a.is<std::string>()) return a.get<std::string>() == b.get<std::string>();
  if (a.is<Infinity>()) return true;
  if (a.is<FieldElement>()) return a.get<FieldElement>().modulus() == b.get<FieldElement>().modulus() &&
                                   a.get<FieldElement>() == b.get<FieldElement>();
  if (a.is<Ideal>()) return a.get<Ideal>() == b.get<Ideal>();
  if (a.is<Matrix>()) {
    const Matrix& ma = a.get<Matrix>();
    const Matrix& mb = b.get<Matrix>();
    return sameRing(ma.ring(), mb.ring()) && ma.rows() == mb.rows() && ma.cols() == mb.cols() && ma == mb;
  }
  if (a.is<RingPtr>()) return sameRing(a.get<RingPtr>(), b.get<RingPtr>());
  return renderText(a) == renderText(b);
}

namespace {

bool isNumeric(const Value& v) { return v.is<std::int64_t>() || v.is<Infinity>(); }

int compareNumeric(const Value& a, const Value& b) {
  if (a.is<Infinity>() && b.is<Infinity>()) return 0;
  if (a.is<Infinity>()) return 1;
  if (b.is<Infinity>()) return -1;
  std::int64_t x = a.get<std::int64_t>(), y = b.get<std::int64_t>();
  return x < y ? -1 : (x > y ? 1 : 0);
}

std::int64_t intPow(std::int64_t b, std::int64_t e) {
  if (e < 0) throw Error("negative exponent");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, b, &r)) throw Error("integer overflow");
  }
  return r;
}

FieldElement asField(const Value& v, std::uint32_t modulus) {
  if (v.is<FieldElement>()) return v.get<FieldElement>();
  if (v.is<std::int64_t>()) return FieldElement(v.get<std::int64_t>(), modulus);
  typeError("a field element", v);
}

RingPtr polyRing(const Value& a, const Value& b, const Context& ctx) {
  if (a.is<Polynomial>()) return a.get<Polynomial>().ring();
  if (b.is<Polynomial>()) return b.get<Polynomial>().ring();
  return ctx.requireRing();
}

}  // namespace

Value applyUnaryMinus(Context& ctx, const Value& a) {
  if (a.is<std::int64_t>()) return -a.get<std::int64_t>();
  if (a.is<FieldElement>()) return -a.get<FieldElement>();
  if (a.is<Matrix>()) {
    const Matrix& m = a.get<Matrix>();
    return Matrix(m.ring(), m.rows(), m.cols()) - m;
  }
  return -asPoly(ctx, a);
}

Value applyBinary(Context& ctx, const std::string& op, const Value& a, const Value& b) {
  if (op == "==") return valuesEqual(a, b);
  if (op == "!=") return !valuesEqual(a, b);
  if (op == "<" || op == ">" || op == "<=" || op == ">=") {
    if (!isNumeric(a) || !isNumeric(b)) throw Error("comparison '" + op + "' needs integers");
    int c = compareNumeric(a, b);
    if (op == "<") return c < 0;
    if (op == ">") return c > 0;
    if (op == "<=") return c <= 0;
    return c >= 0;
  }
  if (a.is<std::int64_t>() && b.is<std::int64_t>()) {
    std::int64_t x = a.get<std::int64_t>(), y = b.get<std::int64_t>(), r = 0;
    if (op == "+" && !__builtin_add_overflow(x, y, &r)) return r;
    if (op == "-" && !__builtin_sub_overflow(x, y, &r)) return r;
    if (op == "*" && !__builtin_mul_overflow(x, y, &r)) return r;
    if (op == "^") return intPow(x, y);
    if (op == "/") {
      if (y == 0) throw Error("division by zero");
      if (x % y != 0) throw Error("integer division is not exact");
      return x / y;
    }
    throw Error("integer overflow");
  }
  if (a.is<FieldElement>() || b.is<FieldElement>()) {
    if (!a.is<Polynomial>() && !b.is<Polynomial>()) {
      std::uint32_t p = a.is<FieldElement>() ? a.get<FieldElement>().modulus() : b.get<FieldElement>().modulus();
      if (op == "^") return asField(a, p).pow(static_cast<std::uint64_t>(asInt(b)));
      FieldElement x = asField(a, p), y = asField(b, p);
      if (op == "+") return x + y;
      if (op == "-") return x - y;
      if (op == "*") return x * y;
      if (op == "/") return x / y;
    }
  }
  if (a.is<Ideal>() || b.is<Ideal>()) {
    if (op == "^") {
      std::int64_t e = asInt(b);
      if (e < 0) throw Error("negative ideal power");
      return power(asIdeal(ctx, a), static_cast<unsigned>(e));
    }
    Ideal x = asIdeal(ctx, a), y = asIdeal(ctx, b);
    if (op == "+") return x + y;
    if (op == "*") return x * y;
    throw Error("operator '" + op + "' is not defined for ideals");
  }
  if (a.is<Matrix>() || b.is<Matrix>()) {
    if (a.is<Matrix>() && b.is<Matrix>()) {
      const Matrix& x = a.get<Matrix>();
      const Matrix& y = b.get<Matrix>();
      if (op == "*") return x * y;
      if (op == "-") return x - y;
      if (op == "+") return x - (Matrix(y.ring(), y.rows(), y.cols()) - y);
    }
    if (op == "*" && (a.is<Matrix>() != b.is<Matrix>())) {
      const Matrix& m = a.is<Matrix>() ? a.get<Matrix>() : b.get<Matrix>();
      Polynomial s = asPolyIn(a.is<Matrix>() ? b : a, m.ring());
      Matrix out(m.ring(), m.rows(), m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, s * m.at(r, c));
      return out;
    }
    throw Error("operator '" + op + "' is not defined for these matrix operands");
  }
  if (op == "^") {
    std::int64_t e = asInt(b);
    if (e < 0) throw Error("negative exponent");
    return asPoly(ctx, a).pow(static_cast<std::uint64_t>(e));
  }
  RingPtr r = polyRing(a, b, ctx);
  Polynomial x = asPolyIn(a, r), y = asPolyIn(b, r);
  if (op == "+") return x + y;
  if (op == "-") return x - y;
  if (op == "*") return x * y;
  if (op == "/") {
    if (!y.isConstant() || y.isZero()) throw Error("polynomials can only be divided by nonzero constants");
    return x.scaled(r->field().inv(y.leadCoeff()));
  }
  throw Error("unknown operator '" + op + "'");
}

namespace {

class Interpreter {
 public:
  explicit Interpreter(const Config& cfg) { ctx_.config = cfg; }

  ResultDocument run(const Script& script) {
    ResultDocument doc;
    for (std::size_t i = 0; i < script.statements.size(); ++i) {
      const Statement& s = *script.statements[i];
      ctx_.flags.clear();
      try {
        execute(static_cast<int>(i), s, doc);
      } catch (const ParseError& e) {
        doc.status = Status::Error;
        doc.message = e.what();
        return doc;
      } catch (const std::exception& e) {
        doc.status = Status::Error;
        doc.message = "line " + std::to_string(s.line) + ": " + e.what();
        return doc;
      }
      if (doc.status != Status::Ok) return doc;
    }
    return doc;
  }

 private:
  void record(ResultDocument& doc, int index, const Statement& s, const Value& v) {
    doc.entries.push_back({index, s.line, kindName(v), renderText(v), renderJson(v), ctx_.flags});
  }

  void execute(int index, const Statement& s, ResultDocument& doc) {
    switch (s.kind) {
      case Statement::Kind::Ring:
        declareRing(s);
        return;
      case Statement::Kind::Use:
        ctx_.ring = asRing(eval(*s.args[0]));
        return;
      case Statement::Kind::IdealDecl: {
        std::vector<Value> vals;
        for (const auto& a : s.args) vals.push_back(eval(*a));
        ctx_.env[s.name] = buildIdeal(vals);
        return;
      }
      case Statement::Kind::Let:
        ctx_.env[s.name] = eval(*s.args[0]);
        return;
      case Statement::Kind::Print:
      case Statement::Kind::Bare:
        record(doc, index, s, eval(*s.args[0]));
        return;
      case Statement::Kind::AssertEqual: {
        Value a = eval(*s.args[0]);
        Value b = eval(*s.args[1]);
        if (!valuesEqual(a, b)) {
          doc.status = Status::AssertionFailed;
          doc.message = "line " + std::to_string(s.line) + ": assertEqual failed: " + renderText(a) +
                        " != " + renderText(b);
          return;
        }
        doc.entries.push_back({index, s.line, "assertion", "ok", "true", ctx_.flags});
        return;
      }
      case Statement::Kind::AssertTrue: {
        Value a = eval(*s.args[0]);
        if (!asBool(a)) {
          doc.status = Status::AssertionFailed;
          doc.message = "line " + std::to_string(s.line) + ": assertTrue failed";
          return;
        }
        doc.entries.push_back({index, s.line, "assertion", "ok", "true", ctx_.flags});
        return;
      }
    }
  }

  Value buildIdeal(const std::vector<Value>& vals) {
    RingPtr ring = ctx_.ring;
    for (const auto& v : vals) {
      if (v.is<Polynomial>()) {
        ring = v.get<Polynomial>().ring();
        break;
      }
      if (v.is<Ideal>()) {
        ring = v.get<Ideal>().ring();
        break;
      }
    }
    if (!ring) throw Error("no current ring for the ideal");
    std::vector<Polynomial> gens;
    for (const auto& v : vals) {
      if (v.is<Ideal>()) {
        requireSameRing(v.get<Ideal>().ring(), ring, "ideal");
        for (const auto& g : v.get<Ideal>().generators()) gens.push_back(g);
      } else if (v.is<List>()) {
        for (const auto& item : v.get<List>().items) gens.push_back(asPolyIn(item, ring));
      } else {
        gens.push_back(asPolyIn(v, ring));
      }
    }
    return Ideal(ring, gens);
  }

  void declareRing(const Statement& s) {
    Ring::Spec spec;
    spec.characteristic = static_cast<std::uint32_t>(s.characteristic);
    std::size_t total = 0;
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      std::vector<std::string> names;
      for (const auto& d : s.blocks[b]) {
        if (d.weight <= 0) throw Error("variable degrees must be positive");
        names.push_back(d.name);
        spec.weights.push_back(d.weight);
      }
      std::string tag = b == 0 ? kBaseTag : (b == 1 ? kReesTag : "block" + std::to_string(b));
      spec.blocks.push_back({tag, names});
      total += names.size();
    }
    if (s.order.empty() || s.order == "grevlex") {
      spec.order = MonomialOrder::grevlex(total);
    } else if (s.order == "lex") {
      spec.order = MonomialOrder::lex(total);
    } else {
      for (const auto& blk : s.blocks) spec.order.push_back({blk.size(), OrderKind::Grevlex});
    }
    RingPtr ring = Ring::make(spec);
    RingPtr saved = ctx_.ring;
    ctx_.ring = ring;
    if (!s.args.empty()) {
      std::vector<Value> vals;
      try {
        for (const auto& a : s.args) vals.push_back(eval(*a));
      } catch (...) {
        ctx_.ring = saved;
        throw;
      }
      ring = quotientRing(buildIdeal(vals).get<Ideal>());
    }
    ctx_.ring = ring;
    ctx_.env[s.name] = ring;
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Int:
        return e.number;
      case Expr::Kind::Str:
        return e.text;
      case Expr::Kind::Name:
        return lookup(e);
      case Expr::Kind::List: {
        List l;
        for (const auto& a : e.args) l.items.push_back(eval(*a));
        return l;
      }
      case Expr::Kind::Index: {
        Value base = eval(*e.args[0]);
        std::int64_t i = asInt(eval(*e.args[1]));
        std::vector<Value> items;
        if (!collectionItems(base, items)) {
          if (base.is<Ideal>()) {
            for (const auto& g : base.get<Ideal>().generators()) items.push_back(g);
          } else {
            typeError("a list", base);
          }
        }
        if (i < 0 || static_cast<std::size_t>(i) >= items.size())
          throw Error("index " + std::to_string(i) + " out of range");
        return items[static_cast<std::size_t>(i)];
      }
      case Expr::Kind::Unary:
        return applyUnaryMinus(ctx_, eval(*e.args[0]));
      case Expr::Kind::Binary: {
        Value a = eval(*e.args[0]);
        Value b = eval(*e.args[1]);
        return applyBinary(ctx_, e.text, a, b);
      }
      case Expr::Kind::Call:
        return call(e);
    }
    throw Error("unknown expression");
  }

  Value lookup(const Expr& e) {
    auto it = ctx_.env.find(e.text);
    if (it != ctx_.env.end()) return it->second;
    if (e.text == "true") return true;
    if (e.text == "false") return false;
    if (e.text == "INFINITY") return Infinity{};
    if (ctx_.ring) {
      if (auto idx = ctx_.ring->indexOf(e.text)) return Polynomial::variable(ctx_.ring, *idx);
    }
    throw ParseError("unknown identifier '" + e.text + "'", e.line, e.column);
  }

  Value call(const Expr& e) {
    std::vector<Value> args;
    for (const auto& a : e.args) args.push_back(eval(*a));
    auto bound = ctx_.env.find(e.text);
    if (bound != ctx_.env.end() && bound->second.is<RingMap>()) {
      if (args.size() != 1) throw Error("a ring map takes one argument");
      return opRegistry().at("apply").fn(ctx_, {bound->second, args[0]});
    }
    const auto& reg = opRegistry();
    auto it = reg.find(e.text);
    if (it == reg.end()) throw ParseError("unknown operation '" + e.text + "'", e.line, e.column);
    const OpDef& op = it->second;
    if (args.size() < op.minArgs || args.size() > op.maxArgs)
      throw ParseError("wrong number of arguments for " + e.text + ": expected " + op.signature, e.line,
                       e.column);
    return op.fn(ctx_, args);
  }

  Context ctx_;
};

}  // namespace

ResultDocument executeScript(const Script& script, const Config& config) {
  return Interpreter(config).run(script);
}

int exitCode(const ResultDocument& doc) {
  switch (doc.status) {
    case Status::Ok:
      return 0;
    case Status::AssertionFailed:
      return 1;
    case Status::Error:
      return 2;
  }
  return 2;
}

}  // namespace reeskit::script
