#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reeskit/ideal_ops.hpp"

namespace reeskit {

/// Module given by generators and relations: cokernel of the presentation
/// (rows = generators, columns = relations). Ideals keep their generators.
struct PresentedModule {
  Matrix presentation;
  std::optional<std::vector<Polynomial>> idealGenerators;

  const RingPtr& ring() const { return presentation.ring(); }
  std::size_t numGenerators() const { return presentation.rows(); }
  bool isIdeal() const { return idealGenerators.has_value(); }

  /// Generators as given (zeros dropped); relations from their syzygies.
  static PresentedModule fromIdeal(const Ideal& I);
  static PresentedModule cokernel(const Matrix& phi);
};

/// base[w_0..w_{n-1}] with the base quotient; the w-block is tagged "rees".
RingPtr reesRing(const RingPtr& base, std::size_t n);
/// Base ring elements promoted into a Rees ring (base variables come first).
Polynomial promoteToRees(const Polynomial& f, const RingPtr& rees);
Matrix promoteToRees(const Matrix& m, const RingPtr& rees);

/// Rows are generators of Hom(M, R): the map M -> R^g through which every map
/// to a free module factors.
Matrix universalEmbedding(const PresentedModule& M);
/// Kernel of Sym(R^n) -> Sym(R^g) for a g x n matrix f, in reesRing(R, n).
Ideal symmetricKernel(const Matrix& f);
/// (w_0 .. w_{n-1}) * presentation.
Ideal symmetricAlgebraIdeal(const PresentedModule& M);
/// Ideals: kernel of w_i -> g_i t. Modules: symmetricKernel(universalEmbedding).
Ideal reesIdeal(const PresentedModule& M);
/// Via I_0 : f^infinity.
Ideal reesIdeal(const PresentedModule& M, const Polynomial& f);
bool isLinearType(const PresentedModule& M);
/// Rees ring modulo the Rees ideal plus I times the Rees ring.
RingPtr normalCone(const Ideal& I);

struct MultiplicityOptions {
  int cap = 30;  ///< largest n for length(R / I^{n+1})
};
std::int64_t multiplicity(const Ideal& I, const MultiplicityOptions& options = {});

/// Special fiber ideal in k[w_0..w_{n-1}]; mm defaults to the base variables.
Ideal specialFiberIdeal(const Ideal& I, const std::optional<Ideal>& mm = std::nullopt);
int analyticSpread(const Ideal& I, const std::optional<Ideal>& mm = std::nullopt);

/// J I^r = I^{r+1}, read in the localisation at the base variables when I lies
/// in their ideal (inhomogeneous reductions only hold locally).
struct ReductionCertificate {
  Ideal J;
  bool accepted;
  int witness;  ///< smallest r with J I^r = I^{r+1} when accepted
  int cap;
};
ReductionCertificate isReduction(const Ideal& I, const Ideal& J, int cap = 20);
int reductionNumber(const Ideal& I, const Ideal& J, int cap = 20);

struct ReductionOptions {
  std::uint64_t seed = 0;
  int retries = 10;
  int cap = 20;
};
/// analyticSpread(I) random scalar combinations of the generators, accepted
/// once they form a reduction.
Ideal minimalReduction(const Ideal& I, const ReductionOptions& options = {});

/// Largest m with codim I_{n-p}(phi) > p for all 1 <= p < m; nullopt stands
/// for infinity.
std::optional<int> whichGm(const Ideal& I);

/// psi over the Rees ring with T * phi = X * psi. Empty X means the base
/// variables; T is the w-block.
Matrix jacobianDual(const Matrix& phi, const std::vector<Polynomial>& X = {});
/// I_0 + maximal minors of the Jacobian dual (size = rows of psi), trimmed
/// when homogeneous for the generator-degree grading.
Ideal expectedReesIdeal(const Ideal& I);

}  // namespace reeskit
