#include "gqm/hilbert.hpp"

#include <cmath>

namespace gqm {

StateVector::StateVector(CVector amplitudes, double hbar)
    : amps_(std::move(amplitudes)), hbar_(hbar) {
  if (amps_.size() < 2) {
    throw std::invalid_argument("StateVector: dimension must be >= 2");
  }
  if (!amps_.allFinite()) {
    throw std::invalid_argument("StateVector: amplitudes must be finite");
  }
  if (amps_.norm() < kZeroNormThreshold) {
    throw std::invalid_argument(
        "StateVector: zero vector has no projective image");
  }
  if (!(hbar_ > 0.0)) {
    throw std::invalid_argument("StateVector: hbar must be positive");
  }
}

HermitianOperator::HermitianOperator(CMatrix matrix) : mat_(std::move(matrix)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
    throw std::invalid_argument("HermitianOperator: matrix must be square");
  }
  if (!mat_.allFinite()) {
    throw std::invalid_argument("HermitianOperator: entries must be finite");
  }
  const double scale = 1.0 + mat_.cwiseAbs().maxCoeff();
  const double asym = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTolerance * scale) {
    throw std::invalid_argument("HermitianOperator: matrix is not Hermitian");
  }
  mat_ = ((mat_ + mat_.adjoint()) / 2.0).eval();
}

InnerDecomposition inner_decompose(const StateVector& psi,
                                   const StateVector& phi) {
  if (psi.dim() != phi.dim()) {
    throw std::invalid_argument("inner_decompose: dimension mismatch");
  }
  if (psi.hbar() != phi.hbar()) {
    throw std::invalid_argument("inner_decompose: hbar mismatch");
  }
  const Complex ip = psi.amplitudes().dot(phi.amplitudes());
  const double two_hbar = 2.0 * psi.hbar();
  return {two_hbar * ip.real(), two_hbar * ip.imag()};
}

double expectation(const HermitianOperator& op, const StateVector& psi) {
  if (op.dim() != psi.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  const CVector& a = psi.amplitudes();
  const Complex num = a.dot(op.matrix() * a);
  return num.real() / a.squaredNorm();
}

ExactPropagator::ExactPropagator(const HermitianOperator& op, double hbar)
    : hbar_(hbar) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(op.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("ExactPropagator: eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

StateVector ExactPropagator::at(const StateVector& psi0, double t) const {
  if (psi0.dim() != eigenvalues_.size()) {
    throw std::invalid_argument("ExactPropagator: dimension mismatch");
  }
  const CVector coeffs = eigenvectors_.adjoint() * psi0.amplitudes();
  CVector rotated(coeffs.size());
  for (int k = 0; k < coeffs.size(); ++k) {
    rotated[k] =
        coeffs[k] * std::exp(Complex(0.0, -eigenvalues_[k] * t / hbar_));
  }
  return StateVector(eigenvectors_ * rotated, psi0.hbar());
}

StateVector propagate_exact(const HermitianOperator& op,
                            const StateVector& psi0, double t) {
  return ExactPropagator(op, psi0.hbar()).at(psi0, t);
}

}  // namespace gqm
