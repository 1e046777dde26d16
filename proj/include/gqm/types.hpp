// Shared scalar/matrix aliases and error types.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gqm {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

// Vectors with norm below this are treated as the zero vector, which has no
// image in the projective space.
inline constexpr double kZeroNormThreshold = 1e-12;

// Relative tolerance for accepting a matrix as Hermitian / antisymmetric.
inline constexpr double kHermitianTolerance = 1e-12;

// A deformed symplectic form failed an admissibility hypothesis
// (closure or non-degeneracy).  CLI maps this to exit code 3.
class AdmissibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical procedure broke down (solver failure, non-finite state).
// CLI maps this to exit code 4.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gqm
