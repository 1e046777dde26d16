// Finite-dimensional complex Hilbert space: states, Hermitian operators,
// the real/imaginary inner-product decomposition, and the exact unitary
// propagator used as ground truth throughout the test suites.

#pragma once

#include "gqm/types.hpp"

namespace gqm {

/// A nonzero vector of complex amplitudes together with the value of hbar
/// used by every structure derived from it.  Not required to be normalized;
/// all physical quantities are computed projectively.
class StateVector {
 public:
  explicit StateVector(CVector amplitudes, double hbar = 1.0);

  const CVector& amplitudes() const { return amps_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  double hbar() const { return hbar_; }
  double norm() const { return amps_.norm(); }

 private:
  CVector amps_;
  double hbar_;
};

/// An n x n Hermitian matrix (energy units).  Construction rejects input
/// whose anti-Hermitian part exceeds 1e-12 relative and stores the exact
/// Hermitian part, so downstream expectation values are real.
class HermitianOperator {
 public:
  explicit HermitianOperator(CMatrix matrix);

  const CMatrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  CMatrix mat_;
};

struct InnerDecomposition {
  double g;      // symmetric part,   G = 2*hbar*Re<psi|phi>
  double omega;  // antisymmetric,    Omega = 2*hbar*Im<psi|phi>
};

/// Splits the Hermitian inner product as
///   <psi|phi> = G/(2 hbar) + i Omega/(2 hbar).
InnerDecomposition inner_decompose(const StateVector& psi,
                                   const StateVector& phi);

/// Expectation value <psi|H|psi> / <psi|psi>; invariant under rescaling of
/// psi by any nonzero complex number.
double expectation(const HermitianOperator& op, const StateVector& psi);

/// Applies U(t) = exp(-i H t / hbar) via Hermitian eigendecomposition.
/// Caches the eigendecomposition so repeated times are cheap.
class ExactPropagator {
 public:
  ExactPropagator(const HermitianOperator& op, double hbar);

  StateVector at(const StateVector& psi0, double t) const;

 private:
  RVector eigenvalues_;
  CMatrix eigenvectors_;
  double hbar_;
};

/// One-shot exact evolution of psi0 by time t under H.
StateVector propagate_exact(const HermitianOperator& op,
                            const StateVector& psi0, double t);

}  // namespace gqm
