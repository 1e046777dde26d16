#include "gqm/random.hpp"

namespace gqm {

StateVector random_state(int dim, std::mt19937_64& rng, double hbar) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector amps(dim);
  do {
    for (int j = 0; j < dim; ++j) amps[j] = Complex(gauss(rng), gauss(rng));
  } while (amps.norm() < 1e-6);
  return StateVector(std::move(amps), hbar);
}

HermitianOperator random_hermitian(int dim, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
  }
  CMatrix h = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const double radius = solver.eigenvalues().cwiseAbs().maxCoeff();
  if (radius > 0.0) h *= scale / radius;
  return HermitianOperator(std::move(h));
}

RMatrix random_antisymmetric(int dim, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  RMatrix a(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = gauss(rng);
  }
  RMatrix t = (a - a.transpose()) / 2.0;
  Eigen::JacobiSVD<RMatrix> svd(t);
  const double norm = svd.singularValues().maxCoeff();
  if (norm > 0.0) t *= scale / norm;
  return t;
}

ChartPoint random_chart_point(int hilbert_dim, std::mt19937_64& rng,
                              double hbar, double radius) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  RVector coords(2 * (hilbert_dim - 1));
  for (int k = 0; k + 1 < coords.size(); k += 2) {
    const double r = radius * std::sqrt(uni(rng));
    const double a = angle(rng);
    coords[k] = r * std::cos(a);
    coords[k + 1] = r * std::sin(a);
  }
  return ChartPoint(0, std::move(coords), hilbert_dim, hbar);
}

RVector random_tangent(int chart_dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  RVector v(chart_dim);
  do {
    for (int k = 0; k < chart_dim; ++k) v[k] = gauss(rng);
  } while (v.norm() < 1e-6);
  v.normalize();
  return v;
}

}  // namespace gqm
