#include "gqm/qubit.hpp"

#include <cmath>

namespace gqm {

BlochVector bloch_from_state(const StateVector& psi) {
  if (psi.dim() != 2) {
    throw std::invalid_argument("bloch_from_state: requires a two-level state");
  }
  const Complex a = psi.amplitudes()[0];
  const Complex b = psi.amplitudes()[1];
  const double s = std::norm(a) + std::norm(b);
  const Complex cross = std::conj(a) * b;
  return {2.0 * cross.real() / s, 2.0 * cross.imag() / s,
          (std::norm(a) - std::norm(b)) / s};
}

StateVector spin_coherent_state(double colatitude, double azimuth, double hbar) {
  CVector amps(2);
  amps[0] = std::cos(colatitude / 2.0);
  amps[1] = std::polar(std::sin(colatitude / 2.0), azimuth);
  return StateVector(std::move(amps), hbar);
}

HermitianOperator qubit_hamiltonian(double omega, double hbar) {
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 0) = hbar * omega / 2.0;
  h(1, 1) = -hbar * omega / 2.0;
  return HermitianOperator(std::move(h));
}

BlochVector precession_closed_form(const BlochVector& n0, double omega,
                                   double epsilon, double curvature, double t) {
  const double denom = 1.0 + epsilon * curvature;
  if (std::abs(denom) < 1e-6) {
    throw AdmissibilityError(
        "precession_closed_form: 1 + epsilon*R vanishes (Lemma: Admissibility "
        "of the Constant Curvature Deformation)");
  }
  const double angle = omega * t / denom;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * n0.x() - s * n0.y(), s * n0.x() + c * n0.y(), n0.z()};
}

std::vector<BlochVector> bloch_track(const Trajectory& traj) {
  std::vector<BlochVector> track;
  track.reserve(traj.points.size());
  for (const ChartPoint& p : traj.points) {
    track.push_back(bloch_from_state(embed(p)));
  }
  return track;
}

double estimate_frequency(const Trajectory& traj) {
  if (traj.points.size() < 2) {
    throw std::invalid_argument("estimate_frequency: need at least 2 samples");
  }
  const std::vector<BlochVector> track = bloch_track(traj);

  // Unwrapped azimuth.
  std::vector<double> phase(track.size());
  double previous = 0.0;
  double accumulated = 0.0;
  for (std::size_t k = 0; k < track.size(); ++k) {
    if (std::abs(track[k].z()) >= 0.99) {
      throw NumericalError(
          "estimate_frequency: trajectory passes too close to a pole; "
          "azimuth is ill-defined");
    }
    const double raw = std::atan2(track[k].y(), track[k].x());
    if (k > 0) {
      double delta = raw - previous;
      delta -= 2.0 * M_PI * std::round(delta / (2.0 * M_PI));
      accumulated += delta;
    }
    previous = raw;
    phase[k] = accumulated;
  }

  // Least-squares slope of phase against time.
  const std::size_t n = phase.size();
  double t_mean = 0.0, p_mean = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    t_mean += traj.times[k];
    p_mean += phase[k];
  }
  t_mean /= static_cast<double>(n);
  p_mean /= static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dt = traj.times[k] - t_mean;
    num += dt * (phase[k] - p_mean);
    den += dt * dt;
  }
  if (den == 0.0) {
    throw std::invalid_argument("estimate_frequency: degenerate time axis");
  }
  return num / den;
}

}  // namespace gqm
