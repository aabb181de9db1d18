#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reeskit/hilbert.hpp"
#include "reeskit/ideal.hpp"
#include "reeskit/matrix.hpp"
#include "reeskit/ring_map.hpp"

namespace reeskit {

/// Spec reproducing a ring's variables, blocks, weights and order (no quotient).
Ring::Spec specOf(const Ring& ring);

/// Copies `p` into `target`, sending variable i to variable varMap[i].
/// No quotient normalisation is applied.
Polynomial remap(const Polynomial& p, const RingPtr& target, const std::vector<std::size_t>& varMap);

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& I, unsigned k);
Ideal mapIdeal(const RingMap& phi, const Ideal& I);

/// I intersected with the subring of the variables outside `vars`.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars);
Ideal eliminate(const Ideal& I, const std::vector<std::string>& names);

/// Kernel by the graph construction. Source variables sent to distinct target
/// variables are identified with them, which shrinks the joint ring.
Ideal kernelOfRingMap(const RingMap& phi);

Ideal quotient(const Ideal& I, const Polynomial& f);
Ideal quotient(const Ideal& I, const Ideal& J);
/// Iterated colon until stable.
Ideal saturate(const Ideal& I, const Polynomial& f);
Ideal saturate(const Ideal& I, const Ideal& J);
/// Adjoin z, add f*z - 1, eliminate z.
Ideal saturateRabinowitsch(const Ideal& I, const Polynomial& f);

Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);

/// Krull dimension of ring/I and degree of its projective closure, both read
/// from the lead ideal under standard-graded grevlex.
DimDegree dimensionAndDegree(const Ideal& I);
int dimension(const Ideal& I);
/// dim(ring) - dim(ring/I); the unit ideal has codimension dim(ring) + 1.
int codimension(const Ideal& I);

bool isHomogeneous(const Ideal& I);
bool isHomogeneous(const Ideal& I, const std::vector<int>& weights);
HilbertSeries hilbertSeries(const Ideal& I);

enum class Grading { Total, WBlock };
/// dim_k of the degree-d piece of I (modulo the ring's quotient).
std::int64_t gradedPieceDim(int d, const Ideal& I, Grading grading);

/// Columns generate the kernel of A (modulo the ring's quotient).
Matrix kernelOfMatrix(const Matrix& A);
/// Reduced Groebner basis of the column span (position over term), as columns
/// in descending order.
Matrix moduleGroebnerBasis(const Matrix& A);
Ideal minorsIdeal(std::size_t k, const Matrix& A);
/// Minimal generators of an ideal homogeneous for `weights` (default: the
/// ring's variable degrees), chosen greedily by degree.
Ideal trimHomogeneous(const Ideal& I, const std::vector<int>& weights = {});
Ideal homogenize(const Ideal& I, const std::string& newVar);

/// Leading monomials of the Groebner basis of I (with the quotient).
std::vector<std::vector<Exp>> leadMonomials(const Ideal& I);

}  // namespace reeskit
