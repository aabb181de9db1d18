#include <algorithm>

#include "reeskit/upoly.hpp"
#include "script_internal.hpp"

namespace reeskit::script {

namespace {

using Args = std::vector<Value>;

/// Copies f into `target`, matching variables by name.
Polynomial byNames(const Polynomial& f, const RingPtr& target) {
  if (sameRing(f.ring(), target)) return f;
  if (f.ring()->field().modulus() != target->field().modulus())
    throw Error("cannot move a polynomial between different characteristics");
  std::vector<std::size_t> varMap;
  for (std::size_t i = 0; i < f.numVars(); ++i) {
    auto idx = target->indexOf(f.ring()->name(i));
    if (!idx) {
      if (f.involves(i)) throw Error("variable " + f.ring()->name(i) + " does not exist in the target ring");
      varMap.push_back(0);
      continue;
    }
    varMap.push_back(*idx);
  }
  Polynomial::Builder b(target->ambient());
  std::vector<Exp> e(target->numVars());
  for (std::size_t t = 0; t < f.size(); ++t) {
    std::fill(e.begin(), e.end(), Exp{0});
    auto src = f.exps(t);
    for (std::size_t i = 0; i < src.size(); ++i)
      if (src[i]) e[varMap[i]] = static_cast<Exp>(e[varMap[i]] + src[i]);
    b.add(f.coeff(t), e);
  }
  return toRing(b.build(), target);
}

Polynomial polyFor(const Value& v, const RingPtr& target) {
  if (v.is<Polynomial>()) return byNames(v.get<Polynomial>(), target);
  if (v.is<std::string>()) return Polynomial::parse(target, v.get<std::string>());
  return asPolyIn(v, target);
}

std::vector<Polynomial> polysFor(const Value& v, const RingPtr& target) {
  if (v.is<std::string>()) return parsePolynomialList(target, v.get<std::string>());
  if (v.is<Ideal>()) {
    std::vector<Polynomial> out;
    for (const auto& g : v.get<Ideal>().generators()) out.push_back(byNames(g, target));
    return out;
  }
  std::vector<Polynomial> out;
  for (const auto& item : asList(v).items) out.push_back(polyFor(item, target));
  return out;
}

std::vector<std::string> varNames(const Value& v) {
  std::vector<std::string> out;
  auto one = [&](const Value& item) {
    if (item.is<std::string>()) {
      out.push_back(item.get<std::string>());
    } else if (item.is<Polynomial>()) {
      const Polynomial& p = item.get<Polynomial>();
      if (p.size() != 1 || p.leadCoeff() != 1 || p.degree() < 0) throw Error("expected a variable");
      std::size_t found = p.numVars();
      for (std::size_t i = 0; i < p.numVars(); ++i)
        if (p.leadExps()[i] != 0) {
          if (found != p.numVars() || p.leadExps()[i] != 1) throw Error("expected a variable");
          found = i;
        }
      if (found == p.numVars()) throw Error("expected a variable");
      out.push_back(p.ring()->name(found));
    } else {
      throw Error("expected a variable or its name");
    }
  };
  if (v.is<List>()) {
    for (const auto& item : v.get<List>().items) one(item);
  } else {
    one(v);
  }
  return out;
}

Value intList(std::initializer_list<std::int64_t> xs) {
  List l;
  for (auto x : xs) l.items.push_back(x);
  return l;
}

Matrix buildMatrix(Context& ctx, const Value& v) {
  const List& rows = asList(v);
  RingPtr ring = ctx.ring;
  for (const auto& r : rows.items)
    for (const auto& e : asList(r).items)
      if (e.is<Polynomial>()) {
        ring = e.get<Polynomial>().ring();
        goto found;
      }
found:
  if (!ring) throw Error("no current ring for the matrix");
  std::vector<std::vector<Polynomial>> out;
  for (const auto& r : rows.items) {
    out.emplace_back();
    for (const auto& e : asList(r).items) out.back().push_back(asPolyIn(e, ring));
    if (out.back().size() != out.front().size()) throw Error("matrix rows have different lengths");
  }
  if (out.empty() || out.front().empty()) throw Error("a matrix needs at least one entry");
  return Matrix::fromRows(ring, out);
}

DecomposeOptions decomposeOptions(const Context& ctx, std::uint64_t offset = 0) {
  DecomposeOptions o;
  o.seed = ctx.config.seed + offset;
  o.factor.seed = ctx.config.seed + offset;
  return o;
}

DistinguishedOptions distinguishedOptions(const Context& ctx, std::uint64_t offset = 0) {
  DistinguishedOptions o;
  o.decompose = decomposeOptions(ctx, offset);
  return o;
}

bool sameComponents(const std::vector<WeightedComponent>& a, const std::vector<WeightedComponent>& b) {
  return valuesEqual(WeightedList{a}, WeightedList{b});
}

Value colon(Context& ctx, const Value& I, const Value& J, bool sat) {
  Ideal A = asIdeal(ctx, I);
  if (J.is<Ideal>() || J.is<List>()) {
    Ideal B = asIdeal(ctx, J);
    return sat ? saturate(A, B) : quotient(A, B);
  }
  Polynomial f = asPolyIn(J, A.ring());
  return sat ? saturate(A, f) : quotient(A, f);
}

Value reesOf(Context& ctx, const Args& a) {
  if (a[0].is<BlowupChart>()) return a[0].get<BlowupChart>().reesIdeal;
  PresentedModule M = asModule(ctx, a[0]);
  if (a.size() == 2) {
    Ideal r = reesIdeal(M, asPolyIn(a[1], M.ring()));
    if (ctx.config.verify) {
      if (!(r == reesIdeal(M))) throw Error("verify: saturation strategy disagrees with reesIdeal(M)");
      ctx.flags.push_back("verified: agrees with the default strategy");
    }
    return r;
  }
  Ideal r = reesIdeal(M);
  if (ctx.config.verify) {
    if (!(r == symmetricKernel(universalEmbedding(M))))
      throw Error("verify: reesIdeal disagrees with symmetricKernel(universalEmbedding M)");
    ctx.flags.push_back("verified: universal embedding");
  }
  return r;
}

std::map<std::string, OpDef> buildRegistry() {
  std::map<std::string, OpDef> r;
  auto def = [&](const std::string& name, std::size_t lo, std::size_t hi, const std::string& sig,
                 const std::string& example, OpFn fn) { r[name] = OpDef{sig, example, lo, hi, std::move(fn)}; };
  auto alias = [&](const std::string& name, const std::string& target) {
    OpDef d = r.at(target);
    d.signature = name + d.signature.substr(d.signature.find('('));
    for (std::size_t pos = 0; (pos = d.example.find(target + "(", pos)) != std::string::npos;
         pos += name.size())
      d.example.replace(pos, target.size(), name);
    r[name] = d;
  };

  // coefficients
  def("gf", 2, 2, "gf(a, p)", "assertEqual(gf(3, 7) * gf(5, 7), gf(1, 7));", [](Context&, const Args& a) {
    std::int64_t p = asInt(a[1]);
    if (p < 2 || p >= (std::int64_t{1} << 31) || !isPrime(static_cast<std::uint64_t>(p)))
      throw Error("gf: modulus must be a prime below 2^31");
    return Value(FieldElement(asInt(a[0]), static_cast<std::uint32_t>(p)));
  });
  def("inv", 1, 1, "inv(a)", "assertEqual(inv(gf(3, 7)), gf(5, 7));", [](Context&, const Args& a) {
    if (!a[0].is<FieldElement>()) throw Error("inv expects a field element");
    return Value(a[0].get<FieldElement>().inverse());
  });
  def("factorUnivariate", 1, 1, "factorUnivariate(f)",
      "ring R = zmod 7 [t];\nassertEqual(factorUnivariate(t^2 - 1), factor((t - 1)*(t + 1)));",
      [](Context& ctx, const Args& a) {
        Polynomial f = asPoly(ctx, a[0]);
        std::size_t var = f.numVars();
        for (std::size_t i = 0; i < f.numVars(); ++i)
          if (f.involves(i)) {
            if (var != f.numVars()) throw Error("factorUnivariate: polynomial involves more than one variable");
            var = i;
          }
        if (f.isZero()) throw Error("factorUnivariate: zero polynomial");
        if (f.ring()->hasQuotient()) throw Error("factorUnivariate: ring has a quotient");
        std::vector<Coeff> c(static_cast<std::size_t>(var == f.numVars() ? 1 : f.degreeIn(var) + 1), 0);
        for (std::size_t t = 0; t < f.size(); ++t) c[var == f.numVars() ? 0 : f.exps(t)[var]] = f.coeff(t);
        UFactorization uf = factorUnivariate(UPoly(f.ring()->field(), c), ctx.config.seed);
        Factorization fac;
        fac.unit = uf.unit;
        for (const auto& u : uf.factors) {
          Polynomial g(f.ring());
          Polynomial x = Polynomial::variable(f.ring(), var);
          for (std::size_t k = u.factor.coeffs().size(); k-- > 0;)
            g = g * x + Polynomial::constant(f.ring(), u.factor.coeffs()[k]);
          fac.factors.push_back({g, u.multiplicity});
        }
        return Value(FactorValue{fac, f.ring()});
      });
  def("factor", 1, 1, "factor(f)",
      "ring R = zmod 101 [x, y];\nassertEqual(length(factor(x^2*y - y^3)), 3);", [](Context& ctx, const Args& a) {
        Polynomial f = asPoly(ctx, a[0]);
        FactorOptions o;
        o.seed = ctx.config.seed;
        return Value(FactorValue{factorMultivariate(f, o), f.ring()});
      });
  alias("factorMultivariate", "factor");

  // polynomial ring
  def("add", 2, 2, "add(f, g)", "ring R = zmod 5 [x];\nassertEqual(add(x, 4*x), 0);",
      [](Context& ctx, const Args& a) { return applyBinary(ctx, "+", a[0], a[1]); });
  def("mul", 2, 2, "mul(f, g)", "ring R = zmod 5 [x];\nassertEqual(mul(x, x), x^2);",
      [](Context& ctx, const Args& a) { return applyBinary(ctx, "*", a[0], a[1]); });
  def("pow", 2, 2, "pow(f, n)", "ring R = zmod 5 [x];\nassertEqual(pow(x + 1, 5), x^5 + 1);",
      [](Context& ctx, const Args& a) { return applyBinary(ctx, "^", a[0], a[1]); });
  def("scale", 2, 2, "scale(c, f)", "ring R = zmod 5 [x];\nassertEqual(scale(2, 3*x), x);",
      [](Context& ctx, const Args& a) { return applyBinary(ctx, "*", a[0], a[1]); });
  def("difference", 2, 2, "difference(f, g)", "ring R = zmod 5 [x];\nassertEqual(difference(x, x), 0);",
      [](Context& ctx, const Args& a) { return applyBinary(ctx, "-", a[0], a[1]); });
  def("homogenize", 2, 2, "homogenize(I, \"h\")",
      "ring R = zmod 101 [x, y];\nlet H = homogenize(ideal(y - x^2), \"h\");\nassertEqual(numgens(vars(ring(H))), 3);",
      [](Context& ctx, const Args& a) { return Value(homogenize(asIdeal(ctx, a[0]), asString(a[1]))); });
  def("map", 3, 3, "map(target, source, {images} | \"images\")",
      "ring S = zmod 101 [t];\nring R = zmod 101 [x, y];\nlet f = map(S, R, \"t^2, t^3\");\n"
      "assertEqual(kernel(f), ideal(x^3 - y^2));",
      [](Context&, const Args& a) {
        RingPtr target = asRing(a[0]);
        RingPtr source = asRing(a[1]);
        std::vector<Polynomial> images = polysFor(a[2], target);
        if (images.size() != source->numVars())
          throw Error("map: expected " + std::to_string(source->numVars()) + " images");
        return Value(RingMap(source, target, images));
      });
  def("apply", 2, 2, "apply(phi, f | I | matrix)",
      "ring S = zmod 101 [t];\nring R = zmod 101 [x, y];\nlet f = map(S, R, \"t^2, t^3\");\n"
      "assertEqual(apply(f, x*y), sub(\"t^5\", S));\nassertEqual(f(ideal(x)), ideal(sub(\"t^2\", S)));",
      [](Context& ctx, const Args& a) {
        const RingMap& phi = asMap(a[0]);
        if (a[1].is<Ideal>()) return Value(mapIdeal(phi, a[1].get<Ideal>()));
        if (a[1].is<Matrix>()) {
          const Matrix& m = a[1].get<Matrix>();
          Matrix out(phi.target(), m.rows(), m.cols());
          for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, phi.apply(m.at(i, j)));
          return Value(out);
        }
        if (a[1].is<std::int64_t>()) return Value(Polynomial::fromInt(phi.target(), a[1].get<std::int64_t>()));
        (void)ctx;
        return Value(phi.apply(asPolyIn(a[1], phi.source())));
      });
  def("sub", 2, 2, "sub(f | I | matrix | \"text\", R)",
      "ring R = zmod 7 [x, y];\nring S = zmod 7 [y, x, z];\nassertEqual(sub(x + y, S), x + y);",
      [](Context&, const Args& a) {
        RingPtr R = asRing(a[1]);
        if (a[0].is<Ideal>()) return Value(Ideal(R, polysFor(a[0], R)));
        if (a[0].is<Matrix>()) {
          const Matrix& m = a[0].get<Matrix>();
          Matrix out(R, m.rows(), m.cols());
          for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, byNames(m.at(i, j), R));
          return Value(out);
        }
        return Value(polyFor(a[0], R));
      });
  def("randomPoly", 2, 3, "randomPoly(R, degree, seed?)",
      "ring R = zmod 101 [x, y];\nassertEqual(randomPoly(R, 2, 7), randomPoly(R, 2, 7));\n"
      "assertTrue(isHomogeneous(ideal(randomPoly(R, 3))));",
      [](Context& ctx, const Args& a) {
        std::uint64_t seed = a.size() == 3 ? static_cast<std::uint64_t>(asInt(a[2])) : ctx.config.seed;
        return Value(randomPoly(asRing(a[0]), static_cast<int>(asInt(a[1])), seed));
      });
  def("makeRing", 3, 4, "makeRing(p, {names}, \"grevlex\"|\"lex\", \"quotient\"?)",
      "let R = makeRing(5, {\"x\", \"y\"}, \"lex\", \"x^2\");\nuse R;\nassertEqual(x^2, 0);",
      [](Context&, const Args& a) {
        std::int64_t p = asInt(a[0]);
        if (p < 2 || p >= (std::int64_t{1} << 31) || !isPrime(static_cast<std::uint64_t>(p)))
          throw Error("makeRing: characteristic must be a prime below 2^31");
        Ring::Spec spec;
        spec.characteristic = static_cast<std::uint32_t>(p);
        std::vector<std::string> names;
        for (const auto& n : asList(a[1]).items) names.push_back(asString(n));
        spec.blocks.push_back({kBaseTag, names});
        const std::string& ord = asString(a[2]);
        if (ord == "lex")
          spec.order = MonomialOrder::lex(names.size());
        else if (ord != "grevlex")
          throw Error("makeRing: order must be \"grevlex\" or \"lex\"");
        return Value(makeRing(spec, a.size() == 4 ? asString(a[3]) : ""));
      });
  def("quotientRing", 1, 1, "quotientRing(I)",
      "ring R = zmod 5 [x];\nlet Q = quotientRing(ideal(x^2));\nuse Q;\nassertEqual(x^3, 0);",
      [](Context& ctx, const Args& a) { return Value(quotientRing(asIdeal(ctx, a[0]))); });
  def("ring", 1, 1, "ring(x)", "ring R = zmod 5 [x];\nassertEqual(ring(x), R);",
      [](Context&, const Args& a) { return Value(asRing(a[0])); });
  def("vars", 1, 1, "vars(R)", "ring R = zmod 5 [x, y];\nassertEqual(vars(R), {x, y});",
      [](Context&, const Args& a) {
        RingPtr R = asRing(a[0]);
        List l;
        for (std::size_t i = 0; i < R->numVars(); ++i) l.items.push_back(Polynomial::variable(R, i));
        return Value(l);
      });
  def("gens", 1, 1, "gens(I | gb)", "ring R = zmod 5 [x, y];\nassertEqual(gens(ideal(x, y)), {x, y});",
      [](Context& ctx, const Args& a) {
        List l;
        if (a[0].is<GroebnerBasis>()) {
          const auto& el = a[0].get<GroebnerBasis>().elements();
          for (auto it = el.rbegin(); it != el.rend(); ++it) l.items.push_back(*it);
          return Value(l);
        }
        Ideal I = asIdeal(ctx, a[0]);
        for (const auto& g : I.generators()) l.items.push_back(g);
        return Value(l);
      });
  def("numgens", 1, 1, "numgens(I | list)", "ring R = zmod 5 [x, y];\nassertEqual(numgens(ideal(x, y, x + y)), 3);",
      [](Context& ctx, const Args& a) {
        if (a[0].is<List>()) return Value(static_cast<std::int64_t>(a[0].get<List>().items.size()));
        return Value(static_cast<std::int64_t>(asIdeal(ctx, a[0]).numGenerators()));
      });

  // Groebner layer
  def("gb", 1, 1, "gb(I | matrix)",
      "ring R = zmod 101 [x, y];\nassertEqual(gens(gb(ideal(x^2 - y, x*y))), {x^2 - y, x*y, y^2});\n"
      "assertEqual(gb(matrix{{x, y}}), matrix{{x, y}});",
      [](Context& ctx, const Args& a) {
        if (a[0].is<Matrix>()) return Value(moduleGroebnerBasis(a[0].get<Matrix>()));
        return Value(asIdeal(ctx, a[0]).gb());
      });
  alias("groebnerBasis", "gb");
  def("isGroebner", 1, 1, "isGroebner(gb)",
      "ring R = zmod 101 [x, y, z];\nassertTrue(isGroebner(gb(ideal(x*y - z, y^2 - x))));",
      [](Context&, const Args& a) {
        if (!a[0].is<GroebnerBasis>()) throw Error("isGroebner expects a Groebner basis");
        const GroebnerBasis& g = a[0].get<GroebnerBasis>();
        return Value(satisfiesBuchbergerCriterion(g.elements(), g.moduleRank()));
      });
  def("normalForm", 2, 2, "normalForm(f, I)", "ring R = zmod 101 [x, y];\nassertEqual(normalForm(x^2, ideal(x - y)), y^2);",
      [](Context& ctx, const Args& a) {
        Ideal I = asIdeal(ctx, a[1]);
        return Value(I.normalForm(asPolyIn(a[0], I.ring())));
      });
  def("divide", 2, 2, "divide(f, {g1, ...})",
      "ring R = zmod 101 [x, y];\nassertEqual(divide(x^2 + y, {x}), {y, {x}});", [](Context& ctx, const Args& a) {
        Polynomial f = asPoly(ctx, a[0]);
        std::vector<Polynomial> gs;
        for (const auto& g : asList(a[1]).items) gs.push_back(asPolyIn(g, f.ring()));
        Division d = divideWithQuotients(f, gs);
        List q;
        for (const auto& p : d.quotients) q.items.push_back(p);
        return Value(List{{Value(d.remainder), Value(q)}});
      });
  def("eliminate", 2, 2, "eliminate(I, {vars})",
      "ring R = zmod 101 [t, x, y];\nassertEqual(eliminate(ideal(x - t^2, y - t^3), {t}), ideal(x^3 - y^2));",
      [](Context& ctx, const Args& a) { return Value(eliminate(asIdeal(ctx, a[0]), varNames(a[1]))); });
  def("kernel", 1, 1, "kernel(phi)",
      "ring S = zmod 101 [s, t];\nring R = zmod 101 [a, b, c];\n"
      "assertEqual(kernel(map(S, R, \"s^2, s*t, t^2\")), ideal(a*c - b^2));",
      [](Context&, const Args& a) { return Value(kernelOfRingMap(asMap(a[0]))); });
  alias("kernelOfRingMap", "kernel");
  def("quotient", 2, 2, "quotient(I, J | f)", "ring R = zmod 101 [x, y];\nassertEqual(quotient(ideal(x*y), x), ideal(y));",
      [](Context& ctx, const Args& a) { return colon(ctx, a[0], a[1], false); });
  def("saturate", 2, 2, "saturate(I, J | f)",
      "ring R = zmod 101 [x, y];\nassertEqual(saturate(ideal(x^3*y), ideal(x)), ideal(y));",
      [](Context& ctx, const Args& a) { return colon(ctx, a[0], a[1], true); });
  def("saturateRabinowitsch", 2, 2, "saturateRabinowitsch(I, f)",
      "ring R = zmod 101 [x, y];\nassertEqual(saturateRabinowitsch(ideal(x^3*y), x), saturate(ideal(x^3*y), x));",
      [](Context& ctx, const Args& a) {
        Ideal I = asIdeal(ctx, a[0]);
        return Value(saturateRabinowitsch(I, asPolyIn(a[1], I.ring())));
      });
  def("colonAndSaturate", 3, 3, "colonAndSaturate(I, J | f, \"quotient\" | \"saturation\")",
      "ring R = zmod 101 [x, y];\nassertEqual(colonAndSaturate(ideal(x^2*y), x, \"quotient\"), ideal(x*y));",
      [](Context& ctx, const Args& a) {
        const std::string& mode = asString(a[2]);
        if (mode != "quotient" && mode != "saturation")
          throw Error("colonAndSaturate: mode must be \"quotient\" or \"saturation\"");
        return colon(ctx, a[0], a[1], mode == "saturation");
      });
  def("intersect", 2, 64, "intersect(I, J, ...)",
      "ring R = zmod 101 [x, y];\nassertEqual(intersect(ideal(x), ideal(y)), ideal(x*y));",
      [](Context& ctx, const Args& a) {
        std::vector<Ideal> ideals;
        for (const auto& v : a) ideals.push_back(asIdeal(ctx, v));
        for (const auto& I : ideals) requireSameRing(I.ring(), ideals[0].ring(), "intersect");
        return Value(intersect(ideals));
      });
  alias("intersectIdeals", "intersect");
  def("dimensionAndDegree", 1, 1, "dimensionAndDegree(I)",
      "ring R = zmod 101 [x, y, z];\nassertEqual(dimensionAndDegree(ideal(x*y - z^2)), {2, 2});",
      [](Context& ctx, const Args& a) {
        DimDegree d = dimensionAndDegree(asIdeal(ctx, a[0]));
        return intList({d.dim, d.degree});
      });
  def("dim", 1, 1, "dim(I | R)", "ring R = zmod 101 [x, y, z];\nassertEqual(dim(ideal(x, y)), 1);\nassertEqual(dim(R), 3);",
      [](Context& ctx, const Args& a) {
        if (a[0].is<RingPtr>()) return Value(std::int64_t{dimension(Ideal::zero(a[0].get<RingPtr>()))});
        return Value(std::int64_t{dimension(asIdeal(ctx, a[0]))});
      });
  def("degree", 1, 1, "degree(I | f)",
      "ring R = zmod 101 [x, y];\nassertEqual(degree(ideal(x^3 - y^2)), 3);\nassertEqual(degree(x^2*y), 3);",
      [](Context& ctx, const Args& a) {
        if (a[0].is<Polynomial>()) return Value(std::int64_t{a[0].get<Polynomial>().degree()});
        return Value(dimensionAndDegree(asIdeal(ctx, a[0])).degree);
      });
  def("codim", 1, 1, "codim(I)", "ring R = zmod 101 [x, y, z];\nassertEqual(codim(ideal(x, y)), 2);",
      [](Context& ctx, const Args& a) { return Value(std::int64_t{codimension(asIdeal(ctx, a[0]))}); });
  def("hilbertSeries", 1, 1, "hilbertSeries(I)",
      "ring R = zmod 101 [x, y];\nassertEqual(hilbertSeries(ideal(x^2)), hilbertSeries(ideal(y^2)));",
      [](Context& ctx, const Args& a) { return Value(hilbertSeries(asIdeal(ctx, a[0]))); });
  def("hilbertCoefficient", 2, 2, "hilbertCoefficient(series, d)",
      "ring R = zmod 101 [x, y];\nassertEqual(hilbertCoefficient(hilbertSeries(ideal(x^2)), 5), 2);",
      [](Context&, const Args& a) {
        if (!a[0].is<HilbertSeries>()) throw Error("hilbertCoefficient expects a Hilbert series");
        return Value(a[0].get<HilbertSeries>().coefficient(static_cast<int>(asInt(a[1]))));
      });
  def("kernelOfMatrix", 1, 1, "kernelOfMatrix(A)",
      "ring R = zmod 101 [x, y];\nassertEqual(kernelOfMatrix(matrix{{x, y}}), matrix{{y}, {-x}});",
      [](Context& ctx, const Args& a) { return Value(kernelOfMatrix(asMatrix(ctx, a[0]))); });
  alias("syz", "kernelOfMatrix");
  def("minors", 2, 2, "minors(k, A)",
      "ring R = zmod 101 [a, b, c, d];\nassertEqual(minors(2, matrix{{a, b}, {c, d}}), ideal(a*d - b*c));",
      [](Context& ctx, const Args& a) {
        std::int64_t k = asInt(a[0]);
        if (k < 0) throw Error("minors: negative size");
        return Value(minorsIdeal(static_cast<std::size_t>(k), asMatrix(ctx, a[1])));
      });
  alias("minorsIdeal", "minors");
  def("trim", 1, 2, "trim(I, {weights}?)",
      "ring R = zmod 101 [x, y];\nassertEqual(numgens(trim(ideal(x, y, x + y, x^2))), 2);\n"
      "assertEqual(numgens(trim(ideal(x^2 - y, x^4 - y^2), {1, 2})), 1);",
      [](Context& ctx, const Args& a) {
        std::vector<int> w;
        if (a.size() == 2)
          for (const auto& v : asList(a[1]).items) w.push_back(static_cast<int>(asInt(v)));
        return Value(trimHomogeneous(asIdeal(ctx, a[0]), w));
      });
  alias("trimHomogeneous", "trim");
  def("gradedPieceDim", 3, 3, "gradedPieceDim(d, I, \"total\" | \"w\")",
      "ring R = zmod 101 [x, y];\nassertEqual(gradedPieceDim(2, ideal(x), \"total\"), 2);",
      [](Context& ctx, const Args& a) {
        const std::string& g = asString(a[2]);
        if (g != "total" && g != "w") throw Error("gradedPieceDim: grading must be \"total\" or \"w\"");
        return Value(gradedPieceDim(static_cast<int>(asInt(a[0])), asIdeal(ctx, a[1]),
                                    g == "total" ? Grading::Total : Grading::WBlock));
      });

  // decompose
  def("minimalPrimes", 1, 1, "minimalPrimes(I)",
      "ring R = zmod 101 [x, y];\nassertEqual(minimalPrimes(ideal(x*y^2)), {ideal(x), ideal(y)});",
      [](Context& ctx, const Args& a) {
        Ideal I = asIdeal(ctx, a[0]);
        auto primes = minimalPrimes(I, decomposeOptions(ctx));
        for (const auto& c : primes)
          if (!c.certified) {
            ctx.flags.push_back("unverified");
            break;
          }
        if (ctx.config.verify) {
          for (const auto& c : primes)
            if (!c.prime.contains(I)) throw Error("verify: a minimal prime does not contain the ideal");
          ctx.flags.push_back("verified: containment");
        }
        return Value(PrimeList{primes});
      });
  alias("decompose", "minimalPrimes");

  // Rees algebras
  def("module", 1, 1, "module(I)",
      "ring R = zmod 101 [x, y];\nassertEqual(presentation(module(ideal(x, y))), matrix{{y}, {-x}});",
      [](Context& ctx, const Args& a) { return Value(PresentedModule::fromIdeal(asIdeal(ctx, a[0]))); });
  def("cokernel", 1, 1, "cokernel(phi)",
      "ring R = zmod 101 [x, y];\nassertEqual(presentation(cokernel(matrix{{x}, {y}})), matrix{{x}, {y}});",
      [](Context& ctx, const Args& a) { return Value(PresentedModule::cokernel(asMatrix(ctx, a[0]))); });
  def("presentation", 1, 1, "presentation(M)",
      "ring R = zmod 101 [x];\nassertEqual(presentation(cokernel(matrix{{x}})), matrix{{x}});",
      [](Context& ctx, const Args& a) { return Value(asModule(ctx, a[0]).presentation); });
  def("universalEmbedding", 1, 1, "universalEmbedding(M)",
      "ring R = zmod 101 [x, y];\nlet u = universalEmbedding(module(ideal(x, y)));\n"
      "assertEqual(minors(1, u), ideal(x, y));",
      [](Context& ctx, const Args& a) { return Value(universalEmbedding(asModule(ctx, a[0]))); });
  def("symmetricKernel", 1, 1, "symmetricKernel(f)",
      "ring R = zmod 101 [x, y];\nassertEqual(symmetricKernel(matrix{{x, y}}), reesIdeal(ideal(x, y)));",
      [](Context& ctx, const Args& a) { return Value(symmetricKernel(asMatrix(ctx, a[0]))); });
  def("symmetricAlgebraIdeal", 1, 1, "symmetricAlgebraIdeal(M)",
      "ring R = zmod 101 [x, y];\nassertEqual(symmetricAlgebraIdeal(ideal(x, y)), reesIdeal(ideal(x, y)));",
      [](Context& ctx, const Args& a) { return Value(symmetricAlgebraIdeal(asModule(ctx, a[0]))); });
  def("reesIdeal", 1, 2, "reesIdeal(M | chart, f?)",
      "ring R = zmod 101 [x, y];\nassertEqual(reesIdeal(ideal(x^2, y^2), x), reesIdeal(ideal(x^2, y^2)));",
      reesOf);
  def("isLinearType", 1, 1, "isLinearType(M)",
      "ring R = zmod 101 [x, y];\nassertTrue(isLinearType(ideal(x, y)));\nassertTrue(not(isLinearType(ideal(x^2, x*y, y^2))));",
      [](Context& ctx, const Args& a) { return Value(isLinearType(asModule(ctx, a[0]))); });
  def("normalCone", 1, 1, "normalCone(I)",
      "ring R = zmod 101 [x, y];\nassertEqual(dim(normalCone(ideal(x, y))), 2);",
      [](Context& ctx, const Args& a) { return Value(normalCone(asIdeal(ctx, a[0]))); });
  alias("associatedGradedRing", "normalCone");
  def("multiplicity", 1, 1, "multiplicity(I)",
      "ring R = zmod 101 [x, y];\nassertEqual(multiplicity(ideal(x, y)^3), 9);", [](Context& ctx, const Args& a) {
        MultiplicityOptions o;
        o.cap = ctx.config.capMultiplicity;
        return Value(multiplicity(asIdeal(ctx, a[0]), o));
      });
  def("specialFiberIdeal", 1, 2, "specialFiberIdeal(I, mm?)",
      "ring R = zmod 101 [x, y];\nassertEqual(numgens(gens(specialFiberIdeal(ideal(x^2, x*y, y^2)))), 1);",
      [](Context& ctx, const Args& a) {
        std::optional<Ideal> mm;
        if (a.size() == 2) mm = asIdeal(ctx, a[1]);
        return Value(specialFiberIdeal(asIdeal(ctx, a[0]), mm));
      });
  def("analyticSpread", 1, 2, "analyticSpread(I, mm?)",
      "ring R = zmod 101 [x, y];\nassertEqual(analyticSpread(ideal(x^2, x*y, y^2)), 2);",
      [](Context& ctx, const Args& a) {
        std::optional<Ideal> mm;
        if (a.size() == 2) mm = asIdeal(ctx, a[1]);
        return Value(std::int64_t{analyticSpread(asIdeal(ctx, a[0]), mm)});
      });
  def("minimalReduction", 1, 1, "minimalReduction(I)",
      "ring R = zmod 101 [x, y];\nlet I = ideal(x^2, x*y, y^2);\nassertEqual(numgens(minimalReduction(I)), 2);",
      [](Context& ctx, const Args& a) {
        Ideal I = asIdeal(ctx, a[0]);
        ReductionOptions o;
        o.seed = ctx.config.seed;
        o.cap = ctx.config.capReduction;
        Ideal J = minimalReduction(I, o);
        if (ctx.config.verify) {
          if (!isReduction(I, J, o.cap).accepted) throw Error("verify: minimal reduction is not a reduction");
          ctx.flags.push_back("verified: reduction");
        }
        return Value(J);
      });
  def("isReduction", 2, 2, "isReduction(I, J)",
      "ring R = zmod 101 [x, y];\nassertTrue(accepted(isReduction(ideal(x^2, x*y, y^2), ideal(x^2, y^2))));",
      [](Context& ctx, const Args& a) {
        Ideal I = asIdeal(ctx, a[0]);
        return Value(isReduction(I, asIdeal(ctx, a[1]), ctx.config.capReduction));
      });
  def("accepted", 1, 1, "accepted(certificate)",
      "ring R = zmod 101 [x, y];\nassertTrue(not(accepted(isReduction(ideal(x, y), ideal(x)))));",
      [](Context&, const Args& a) {
        if (!a[0].is<ReductionCertificate>()) throw Error("accepted expects a reduction certificate");
        return Value(a[0].get<ReductionCertificate>().accepted);
      });
  def("reductionNumber", 2, 2, "reductionNumber(I, J)",
      "ring R = zmod 101 [x, y];\nassertEqual(reductionNumber(ideal(x^2, x*y, y^2), ideal(x^2, y^2)), 1);",
      [](Context& ctx, const Args& a) {
        return Value(std::int64_t{reductionNumber(asIdeal(ctx, a[0]), asIdeal(ctx, a[1]), ctx.config.capReduction)});
      });
  def("whichGm", 1, 1, "whichGm(I)",
      "ring R = zmod 101 [x, y, z];\nassertEqual(whichGm(ideal(x, y, z)), INFINITY);", [](Context& ctx, const Args& a) {
        auto g = whichGm(asIdeal(ctx, a[0]));
        return g ? Value(std::int64_t{*g}) : Value(Infinity{});
      });
  def("jacobianDual", 1, 2, "jacobianDual(phi, {X}?)",
      "ring R = zmod 101 [x, y];\nlet psi = jacobianDual(matrix{{y}, {-x}});\nuse ring(psi);\n"
      "assertEqual(psi, matrix{{-w_1}, {w_0}});",
      [](Context& ctx, const Args& a) {
        Matrix phi = asMatrix(ctx, a[0]);
        std::vector<Polynomial> X;
        if (a.size() == 2)
          for (const auto& v : asList(a[1]).items) X.push_back(asPolyIn(v, phi.ring()));
        return Value(jacobianDual(phi, X));
      });
  def("expectedReesIdeal", 1, 1, "expectedReesIdeal(I)",
      "ring R = zmod 101 [x, y];\nlet I = ideal(x^2, x*y, y^2);\nassertEqual(expectedReesIdeal(I), reesIdeal(I));",
      [](Context& ctx, const Args& a) { return Value(expectedReesIdeal(asIdeal(ctx, a[0]))); });

  // intersection theory
  def("distinguished", 2, 2, "distinguished(f, I)",
      "ring S = zmod 101 [x, y];\nlet Q = quotientRing(ideal(y - x^2));\nlet f = map(Q, S, \"x, y\");\n"
      "use S;\nassertEqual(distinguished(f, ideal(y)), {{2, ideal(x, y)}});",
      [](Context& ctx, const Args& a) {
        const RingMap& f = asMap(a[0]);
        return Value(WeightedList{distinguished(f, asIdeal(ctx, a[1]), distinguishedOptions(ctx))});
      });
  def("intersectInP", 2, 2, "intersectInP(I, J)",
      "ring R = zmod 101 [x, y];\nassertEqual(intersectInP(ideal(y - x^2), ideal(y)), {{2, ideal(x, y)}});",
      [](Context& ctx, const Args& a) {
        Ideal I = asIdeal(ctx, a[0]);
        Ideal J = asIdeal(ctx, a[1]);
        auto out = intersectInP(I, J, distinguishedOptions(ctx));
        if (ctx.config.verify) {
          if (!sameComponents(out, intersectInP(I, J, distinguishedOptions(ctx, 1))))
            throw Error("verify: intersectInP depends on the seed");
          ctx.flags.push_back("verified: seed independence");
        }
        for (const auto& c : out)
          if (!c.certified) {
            ctx.flags.push_back("unverified");
            break;
          }
        return Value(WeightedList{out});
      });

  // blowups
  def("blowupOf", 1, 1, "blowupOf(center)",
      "ring R = zmod 101 [x, y];\nlet B = blowupOf(ideal(x, y));\nassertEqual(reesIdeal(B), reesIdeal(ideal(x, y)));",
      [](Context& ctx, const Args& a) { return Value(blowupOf(asIdeal(ctx, a[0]))); });
  def("totalTransform", 2, 2, "totalTransform(chart, X)",
      "ring R = zmod 101 [x, y];\nlet B = blowupOf(ideal(x, y));\n"
      "assertEqual(length(minimalPrimes(totalTransform(B, ideal(x*y)))), 3);",
      [](Context& ctx, const Args& a) { return Value(totalTransform(asChart(a[0]), asIdeal(ctx, a[1]))); });
  def("strictTransform", 2, 2, "strictTransform(chart, X)",
      "ring R = zmod 101 [x, y];\nlet B = blowupOf(ideal(x, y));\n"
      "assertEqual(length(minimalPrimes(strictTransform(B, ideal(x*y)))), 2);",
      [](Context& ctx, const Args& a) { return Value(strictTransform(asChart(a[0]), asIdeal(ctx, a[1]))); });
  def("singularLocusIdeal", 1, 2, "singularLocusIdeal(X, c?)",
      "ring R = zmod 101 [x, y];\nassertEqual(singularLocusIdeal(ideal(y^2 - x^3)), ideal(x^2, y));",
      [](Context& ctx, const Args& a) {
        std::optional<int> c;
        if (a.size() == 2) c = static_cast<int>(asInt(a[1]));
        return Value(singularLocusIdeal(asIdeal(ctx, a[0]), c));
      });
  def("isSmoothAwayFromIrrelevant", 2, 2, "isSmoothAwayFromIrrelevant(chart, X)",
      "ring R = zmod 101 [x, y];\nlet B = blowupOf(ideal(x, y));\n"
      "assertTrue(isSmoothAwayFromIrrelevant(B, strictTransform(B, ideal(y^2 - x^2 - x^3))));",
      [](Context& ctx, const Args& a) {
        const BlowupChart& B = asChart(a[0]);
        Ideal X = asIdeal(ctx, a[1]);
        if (!sameRing(X.ring(), B.ring)) X = totalTransform(B, X);
        return Value(isSmoothAwayFromIrrelevant(B, X));
      });
  def("exceptional", 1, 1, "exceptional(chart)",
      "ring R = zmod 101 [x, y];\nassertEqual(numgens(exceptional(blowupOf(ideal(x, y)))), 2);",
      [](Context&, const Args& a) { return Value(asChart(a[0]).exceptional); });
  def("irrelevant", 1, 1, "irrelevant(chart)",
      "ring R = zmod 101 [x, y];\nassertEqual(numgens(irrelevant(blowupOf(ideal(x, y)))), 2);",
      [](Context&, const Args& a) { return Value(asChart(a[0]).irrelevant); });
  def("projection", 1, 1, "projection(chart)",
      "ring R = zmod 101 [x, y];\nlet B = blowupOf(ideal(x, y));\nassertEqual(apply(projection(B), x), sub(x, ring(B)));",
      [](Context&, const Args& a) { return Value(asChart(a[0]).proj); });

  // utilities
  def("ideal", 0, 256, "ideal(f, ...)", "ring R = zmod 101 [x, y];\nassertEqual(ideal(x, x + y), ideal(x, y));",
      [](Context& ctx, const Args& a) {
        if (a.size() == 1 && a[0].is<Ideal>()) return a[0];
        List l;
        for (const auto& v : a) {
          if (v.is<Ideal>())
            for (const auto& g : v.get<Ideal>().generators()) l.items.push_back(g);
          else if (v.is<List>())
            for (const auto& x : v.get<List>().items) l.items.push_back(x);
          else
            l.items.push_back(v);
        }
        if (l.items.empty()) return Value(Ideal::zero(ctx.requireRing()));
        return Value(asIdeal(ctx, l));
      });
  def("matrix", 1, 1, "matrix{{a, b}, {c, d}}",
      "ring R = zmod 101 [x, y];\nassertEqual(transpose(matrix{{x, y}}), matrix{{x}, {y}});",
      [](Context& ctx, const Args& a) { return Value(buildMatrix(ctx, a[0])); });
  def("transpose", 1, 1, "transpose(A)", "ring R = zmod 101 [x];\nassertEqual(transpose(transpose(matrix{{x, 1}})), matrix{{x, 1}});",
      [](Context& ctx, const Args& a) { return Value(asMatrix(ctx, a[0]).transpose()); });
  def("numRows", 1, 1, "numRows(A)", "ring R = zmod 101 [x];\nassertEqual(numRows(matrix{{x}, {1}}), 2);",
      [](Context& ctx, const Args& a) { return Value(static_cast<std::int64_t>(asMatrix(ctx, a[0]).rows())); });
  def("numColumns", 1, 1, "numColumns(A)", "ring R = zmod 101 [x];\nassertEqual(numColumns(matrix{{x}, {1}}), 1);",
      [](Context& ctx, const Args& a) { return Value(static_cast<std::int64_t>(asMatrix(ctx, a[0]).cols())); });
  def("length", 1, 1, "length(list)", "assertEqual(length({1, 2, 3}), 3);", [](Context&, const Args& a) {
    if (a[0].is<PrimeList>()) return Value(static_cast<std::int64_t>(a[0].get<PrimeList>().items.size()));
    if (a[0].is<WeightedList>()) return Value(static_cast<std::int64_t>(a[0].get<WeightedList>().items.size()));
    if (a[0].is<FactorValue>()) return Value(static_cast<std::int64_t>(a[0].get<FactorValue>().fac.factors.size()));
    return Value(static_cast<std::int64_t>(asList(a[0]).items.size()));
  });
  def("contains", 2, 2, "contains(I, f | J)", "ring R = zmod 101 [x, y];\nassertTrue(contains(ideal(x), x*y));",
      [](Context& ctx, const Args& a) {
        Ideal I = asIdeal(ctx, a[0]);
        if (a[1].is<Ideal>()) return Value(I.contains(a[1].get<Ideal>()));
        return Value(I.contains(asPolyIn(a[1], I.ring())));
      });
  def("isUnit", 1, 1, "isUnit(I)", "ring R = zmod 101 [x];\nassertTrue(isUnit(ideal(x, x + 1)));",
      [](Context& ctx, const Args& a) { return Value(asIdeal(ctx, a[0]).isUnit()); });
  def("isZero", 1, 1, "isZero(I | f | A)", "ring R = zmod 5 [x] / (x^2);\nassertTrue(isZero(x^3));",
      [](Context& ctx, const Args& a) {
        if (a[0].is<Matrix>()) return Value(a[0].get<Matrix>().isZero());
        if (a[0].is<Ideal>()) return Value(a[0].get<Ideal>().isZero());
        return Value(asPoly(ctx, a[0]).isZero());
      });
  def("isHomogeneous", 1, 1, "isHomogeneous(I)", "ring R = zmod 101 [x, y:2];\nassertTrue(isHomogeneous(ideal(x^2 - y)));",
      [](Context& ctx, const Args& a) { return Value(isHomogeneous(asIdeal(ctx, a[0]))); });
  def("not", 1, 1, "not(b)", "assertTrue(not(1 == 2));", [](Context&, const Args& a) { return Value(!asBool(a[0])); });
  def("isPrimeIdeal", 1, 1, "isPrimeIdeal(I)",
      "ring R = zmod 101 [x, y];\nassertTrue(isPrimeIdeal(ideal(y - x^2)));\nassertTrue(not(isPrimeIdeal(ideal(x*y))));",
      [](Context& ctx, const Args& a) {
        Ideal I = asIdeal(ctx, a[0]);
        if (I.isUnit()) return Value(false);
        auto primes = minimalPrimes(I, decomposeOptions(ctx));
        if (primes.size() != 1 || !primes[0].certified) return Value(false);
        return Value(primes[0].prime == I);
      });
  return r;
}

}  // namespace

const std::map<std::string, OpDef>& opRegistry() {
  static const std::map<std::string, OpDef> registry = buildRegistry();
  return registry;
}

std::vector<OpInfo> registeredOps() {
  std::vector<OpInfo> out;
  for (const auto& [name, def] : opRegistry()) out.push_back({name, def.signature, def.example});
  return out;
}

}  // namespace reeskit::script
