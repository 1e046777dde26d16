// Two-level specialization: Bloch-sphere map, closed-form deformed
// precession, and frequency estimation from simulated trajectories.

#pragma once

#include <vector>

#include "gqm/dynamics.hpp"
#include "gqm/hilbert.hpp"

namespace gqm {

using BlochVector = Eigen::Vector3d;

/// Pauli expectation values (sigma_x, sigma_y, sigma_z); unit norm for any
/// nonzero two-component state, independent of phase and normalization.
BlochVector bloch_from_state(const StateVector& psi);

/// (cos(theta/2), e^{i phi} sin(theta/2)): the +1 eigenstate of sigma.n at
/// colatitude theta, azimuth phi.
StateVector spin_coherent_state(double colatitude, double azimuth,
                                double hbar = 1.0);

/// H = (hbar Omega / 2) sigma_z.
HermitianOperator qubit_hamiltonian(double omega, double hbar);

/// Rotation of n0 about z by angle Omega t / (1 + epsilon R); the deformed
/// precession n' = Omega_eff z x n in closed form.
BlochVector precession_closed_form(const BlochVector& n0, double omega,
                                   double epsilon, double curvature, double t);

/// Bloch vectors of a two-level trajectory, sample by sample.
std::vector<BlochVector> bloch_track(const Trajectory& traj);

/// Least-squares slope of the unwrapped azimuth atan2(n_y, n_x) over time.
/// Requires the track to stay off the poles (|n_z| < 0.99).
double estimate_frequency(const Trajectory& traj);

}  // namespace gqm
