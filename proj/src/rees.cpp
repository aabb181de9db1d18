#include "reeskit/rees.hpp"

#include <algorithm>
#include <random>

namespace reeskit {

namespace {

std::string wName(std::size_t i) { return "w_" + std::to_string(i); }

std::vector<std::size_t> identityMap(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

/// Ambient of `base` with extra variables in a trailing block of weight 1,
/// carrying the base quotient.
RingPtr extendRing(const RingPtr& base, const std::string& tag,
                   const std::vector<std::string>& names) {
  RingPtr amb = base->ambient();
  for (const auto& n : names)
    if (amb->indexOf(n)) throw Error("variable '" + n + "' already exists in the base ring");
  Ring::Spec s = specOf(*amb);
  s.blocks.push_back({tag, names});
  s.weights.insert(s.weights.end(), names.size(), 1);
  if (amb->order().isDegreeCompatible() && !names.empty()) {
    s.order = MonomialOrder::grevlex(amb->numVars() + names.size());
  } else if (!names.empty()) {
    s.order.push_back({names.size(), OrderKind::Grevlex});
  }
  RingPtr ext = Ring::make(s);
  if (!base->hasQuotient()) return ext;
  std::vector<Polynomial> q;
  for (const auto& g : base->quotient()) q.push_back(remap(g, ext, identityMap(amb->numVars())));
  return quotientRing(Ideal(ext, std::move(q)));
}

Polynomial promoteInto(const Polynomial& f, const RingPtr& target) {
  RingPtr src = f.ring()->ambient();
  if (target->numVars() < src->numVars()) throw Error("cannot promote into a smaller ring");
  for (std::size_t i = 0; i < src->numVars(); ++i)
    if (src->name(i) != target->name(i)) throw Error("promotion: base variables do not match");
  return toRing(remap(f.withRing(src), target->ambient(), identityMap(src->numVars())), target);
}

std::vector<Polynomial> wVariables(const RingPtr& S) {
  const VariableBlock* b = S->findBlock(kReesTag);
  std::vector<Polynomial> w;
  for (std::size_t i = b->begin; i < b->end; ++i) w.push_back(Polynomial::variable(S, i));
  return w;
}

void requireNonzeroModule(const PresentedModule& M, const char* what) {
  if (M.numGenerators() == 0) throw Error(std::string(what) + ": zero module");
}

std::vector<std::size_t> baseIndices(const RingPtr& S) {
  const VariableBlock* b = S->findBlock(kReesTag);
  return identityMap(b->begin);
}

Ideal defaultMaximal(const RingPtr& R) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < R->numVars(); ++i) vars.push_back(Polynomial::variable(R, i));
  return Ideal(R, vars);
}

Ideal promoteIdeal(const Ideal& I, const RingPtr& S) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(promoteToRees(g, S));
  return Ideal(S, std::move(gens));
}

}  // namespace

PresentedModule PresentedModule::fromIdeal(const Ideal& I) {
  std::vector<Polynomial> gens = I.generators();
  if (gens.empty()) throw Error("zero ideal has no presentation as a nonzero module");
  Matrix row = Matrix::rowVector(I.ring(), gens);
  return PresentedModule{kernelOfMatrix(row), gens};
}

PresentedModule PresentedModule::cokernel(const Matrix& phi) {
  if (!phi.ring()) throw Error("presentation without a ring");
  return PresentedModule{phi, std::nullopt};
}

RingPtr reesRing(const RingPtr& base, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(wName(i));
  return extendRing(base, kReesTag, names);
}

Polynomial promoteToRees(const Polynomial& f, const RingPtr& rees) { return promoteInto(f, rees); }

Matrix promoteToRees(const Matrix& m, const RingPtr& rees) {
  Matrix out(rees, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, promoteInto(m.at(r, c), rees));
  return out;
}

Matrix universalEmbedding(const PresentedModule& M) {
  const RingPtr& R = M.ring();
  const std::size_t m = M.numGenerators();
  if (M.presentation.cols() == 0) return Matrix::identity(R, m);
  Matrix hom = kernelOfMatrix(M.presentation.transpose());
  // Each kernel column is a functional M -> R; stack them as rows.
  return hom.transpose();
}

Ideal symmetricKernel(const Matrix& f) {
  const RingPtr& R = f.ring();
  const std::size_t g = f.rows(), n = f.cols();
  RingPtr S = reesRing(R, n);
  std::vector<std::string> uNames;
  for (std::size_t j = 0; j < g; ++j) uNames.push_back("#u" + std::to_string(j));
  RingPtr T = extendRing(R, "fiber", uNames);
  const std::size_t nb = R->numVars();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < nb; ++i) images.push_back(Polynomial::variable(T, i));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img(T);
    for (std::size_t j = 0; j < g; ++j)
      img += promoteInto(f.at(j, i), T) * Polynomial::variable(T, nb + j);
    images.push_back(img);
  }
  return kernelOfRingMap(RingMap(S, T, std::move(images)));
}

Ideal symmetricAlgebraIdeal(const PresentedModule& M) {
  requireNonzeroModule(M, "symmetric algebra");
  RingPtr S = reesRing(M.ring(), M.numGenerators());
  Matrix row = Matrix::rowVector(S, wVariables(S));
  Matrix prod = row * promoteToRees(M.presentation, S);
  return Ideal(S, prod.row(0));
}

Ideal reesIdeal(const PresentedModule& M) {
  requireNonzeroModule(M, "Rees ideal");
  if (M.isIdeal()) return symmetricKernel(Matrix::rowVector(M.ring(), *M.idealGenerators));
  Matrix u = universalEmbedding(M);
  if (u.rows() == 0) throw Error("Rees ideal: the module has no nonzero map to a free module");
  return symmetricKernel(u);
}

Ideal reesIdeal(const PresentedModule& M, const Polynomial& f) {
  requireSameRing(M.ring(), f.ring(), "Rees ideal");
  if (f.isZero()) throw Error("Rees ideal: saturating element is zero");
  Ideal I0 = symmetricAlgebraIdeal(M);
  return saturate(I0, promoteToRees(f, I0.ring()));
}

bool isLinearType(const PresentedModule& M) { return reesIdeal(M) == symmetricAlgebraIdeal(M); }

RingPtr normalCone(const Ideal& I) {
  if (I.isUnit()) throw Error("normal cone of the unit ideal");
  Ideal rees = reesIdeal(PresentedModule::fromIdeal(I));
  return quotientRing(rees + promoteIdeal(I, rees.ring()));
}

std::int64_t multiplicity(const Ideal& I, const MultiplicityOptions& opt) {
  const RingPtr& R = I.ring();
  for (int w : R->weights())
    if (w != 1) throw Error("multiplicity needs a standard graded ring");
  for (const auto& q : R->quotient())
    if (!q.isHomogeneous()) throw Error("multiplicity needs a standard graded ring");
  if (I.isUnit() || dimension(I) != 0) throw Error("multiplicity needs a zero-dimensional ideal");
  const int d = dimension(Ideal::zero(R));
  std::vector<std::int64_t> lengths;
  Ideal base(R, I.basis());
  Ideal pw = base;
  for (int n = 0; n <= opt.cap; ++n) {
    if (n > 0) pw = Ideal(R, (pw * base).basis());
    lengths.push_back(dimensionAndDegree(pw).degree);
    const std::size_t need = static_cast<std::size_t>(d) + 4;
    if (lengths.size() < need) continue;
    std::vector<std::int64_t> diff(lengths.end() - static_cast<long>(need), lengths.end());
    for (int k = 0; k < d; ++k)
      for (std::size_t i = 0; i + 1 < diff.size() - static_cast<std::size_t>(k); ++i) diff[i] = diff[i + 1] - diff[i];
    // diff[0..3] now holds the d-th differences; they must agree.
    if (diff[0] == diff[1] && diff[1] == diff[2] && diff[2] == diff[3]) return diff[3];
  }
  throw LimitExceeded("multiplicity: lengths did not stabilise within n <= " + std::to_string(opt.cap));
}

Ideal specialFiberIdeal(const Ideal& I, const std::optional<Ideal>& mmIn) {
  const RingPtr& R = I.ring();
  Ideal mm = mmIn ? *mmIn : defaultMaximal(R);
  requireSameRing(R, mm.ring(), "special fiber");
  if (!mm.contains(I)) throw Error("special fiber: the ideal is not contained in the maximal ideal");
  Ideal rees = reesIdeal(PresentedModule::fromIdeal(I));
  const RingPtr& S = rees.ring();
  Ideal fiber = eliminate(rees + promoteIdeal(mm, S), baseIndices(S));

  const VariableBlock* wb = S->findBlock(kReesTag);
  std::vector<std::string> names(S->names().begin() + wb->begin, S->names().begin() + wb->end);
  RingPtr F = Ring::make(R->field().modulus(), names);
  std::vector<Polynomial> gens;
  for (const auto& g : fiber.generators()) {
    Polynomial::Builder b(F);
    for (std::size_t t = 0; t < g.size(); ++t) b.add(g.coeff(t), g.exps(t).subspan(wb->begin, names.size()));
    gens.push_back(b.build());
  }
  return Ideal(F, std::move(gens));
}

int analyticSpread(const Ideal& I, const std::optional<Ideal>& mm) {
  return dimension(specialFiberIdeal(I, mm));
}

ReductionCertificate isReduction(const Ideal& I, const Ideal& J, int cap) {
  requireSameRing(I.ring(), J.ring(), "reduction test");
  if (!I.contains(J)) throw Error("reduction test: J is not contained in I");
  const RingPtr& R = I.ring();
  Ideal mm = defaultMaximal(R);
  const bool local = mm.contains(I);
  Ideal base(R, I.basis());
  Ideal Ir = Ideal::unit(R);
  for (int r = 0; r <= cap; ++r) {
    Ideal next = Ideal(R, (Ir * base).basis());
    Ideal lower = J * Ir;
    if (lower.contains(next)) return {J, true, r, cap};
    // Equality in the localisation at mm: some unit of R_mm multiplies I^{r+1} into J I^r.
    if (local && (quotient(lower, next) + mm).isUnit()) return {J, true, r, cap};
    Ir = next;
  }
  return {J, false, -1, cap};
}

int reductionNumber(const Ideal& I, const Ideal& J, int cap) {
  ReductionCertificate c = isReduction(I, J, cap);
  if (!c.accepted) throw Error("not a reduction within r <= " + std::to_string(cap));
  return c.witness;
}

Ideal minimalReduction(const Ideal& I, const ReductionOptions& opt) {
  const int ell = analyticSpread(I);
  const auto& gens = I.generators();
  if (gens.size() <= static_cast<std::size_t>(ell)) return I;
  const RingPtr& R = I.ring();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, R->field().modulus() - 1);
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    std::vector<Polynomial> combos;
    for (int i = 0; i < ell; ++i) {
      Polynomial c(R);
      for (const auto& g : gens) c += g.scaled(coeff(rng));
      combos.push_back(c);
    }
    Ideal J(R, combos);
    if (isReduction(I, J, opt.cap).accepted) return J;
  }
  throw LimitExceeded("minimal reduction: no reduction found in " + std::to_string(opt.retries) +
                      " attempts; try another seed");
}

std::optional<int> whichGm(const Ideal& I) {
  PresentedModule M = PresentedModule::fromIdeal(I);
  const int n = static_cast<int>(M.numGenerators());
  for (int p = 1; p <= n; ++p) {
    Ideal minors = minorsIdeal(static_cast<std::size_t>(n - p), M.presentation);
    if (minors.isUnit()) continue;
    if (codimension(minors) <= p) return p;
  }
  return std::nullopt;
}

Matrix jacobianDual(const Matrix& phi, const std::vector<Polynomial>& Xin) {
  const RingPtr& R = phi.ring();
  RingPtr S = reesRing(R, phi.rows());
  std::vector<Polynomial> X;
  if (Xin.empty()) {
    for (std::size_t i = 0; i < R->numVars(); ++i) X.push_back(Polynomial::variable(S, i));
  } else {
    for (const auto& x : Xin) X.push_back(sameRing(x.ring(), S) ? x : promoteToRees(x, S));
  }
  RingPtr amb = S->ambient();
  std::vector<Polynomial> divisors;
  for (const auto& x : X) divisors.push_back(x.withRing(amb));
  for (const auto& q : S->quotient()) divisors.push_back(q);
  GroebnerOptions gopt;
  gopt.trackRepresentation = true;
  GroebnerBasis gb = computeGroebner(amb, divisors, gopt);
  const auto& rep = *gb.representation();

  Matrix Tphi = Matrix::rowVector(S, wVariables(S)) * promoteToRees(phi, S);
  Matrix psi(S, X.size(), phi.cols());
  for (std::size_t c = 0; c < phi.cols(); ++c) {
    Division d = divideWithQuotients(Tphi.at(0, c).withRing(amb), gb.elements());
    if (!d.remainder.isZero())
      throw Error("Jacobian dual: an entry of T*phi is not in the ideal of X");
    for (std::size_t i = 0; i < X.size(); ++i) {
      Polynomial e(amb);
      for (std::size_t k = 0; k < d.quotients.size(); ++k) e += d.quotients[k] * rep[k][i];
      psi.set(i, c, toRing(e, S));
    }
  }
  Matrix check = Matrix::rowVector(S, X) * psi - Tphi;
  if (!check.isZero()) throw Error("Jacobian dual: identity T*phi = X*psi failed");
  return psi;
}

Ideal expectedReesIdeal(const Ideal& I) {
  PresentedModule M = PresentedModule::fromIdeal(I);
  Matrix psi = jacobianDual(M.presentation);
  Ideal I0 = symmetricAlgebraIdeal(M);
  Ideal J = I0 + minorsIdeal(psi.rows(), psi);
  const RingPtr& R = I.ring();
  std::vector<int> w = R->weights();
  bool graded = std::all_of(w.begin(), w.end(), [](int x) { return x > 0; });
  for (const auto& g : M.idealGenerators.value()) {
    if (!graded) break;
    graded = g.isHomogeneous() && g.degree() > 0;
    if (graded) w.push_back(g.degree());
  }
  if (!graded || !isHomogeneous(J, w)) return J;
  return trimHomogeneous(J, w);
}

}  // namespace reeskit
