// Hamiltonian vector fields of the deformed symplectic structure, RK4 flow
// integration with chart switching, the exact-propagator correspondence
// diagnostic, and (deformed) Poisson brackets of observables.

#pragma once

#include <limits>
#include <random>
#include <vector>

#include "gqm/deformation.hpp"
#include "gqm/hilbert.hpp"
#include "gqm/projective.hpp"

namespace gqm {

struct Trajectory {
  std::vector<double> times;
  std::vector<ChartPoint> points;
  std::vector<double> energies;
  int pivot_switches = 0;

  /// max_k |energies[k] - energies[0]|
  double energy_drift() const;
};

struct FlowOptions {
  double dt = 1e-3;
  double t_end = 10.0;
  double pivot_switch_threshold = kPivotSwitchThreshold;
  long max_steps = 100'000'000;
  // Admissibility (sigma_min of omega_G) is re-checked every this many steps;
  // the defining-equation residual is checked on every solve regardless.
  long admissibility_stride = 100;
  // Optional hard bound on |<H> - <H>(0)|; NaN disables the check.
  double energy_tolerance = std::numeric_limits<double>::quiet_NaN();
};

/// Unique solution X of  iota_X omega_G = dH, i.e. omega_G^T X = dH.
/// Throws AdmissibilityError when omega_G is (numerically) degenerate.
TangentVector hamiltonian_field(const ChartPoint& p,
                                const HermitianOperator& op,
                                const DeformationSpec& spec);

/// First-order field correction dX solving  iota_dX omega = -iota_X delta_omega
/// for the full delta_omega of the spec (linear in epsilon; zero for none).
TangentVector first_order_correction(const ChartPoint& p,
                                     const HermitianOperator& op,
                                     const DeformationSpec& spec);

/// Classical fixed-step RK4 integration of the deformed Hamiltonian flow.
/// Charts are switched between steps when max |z_j| exceeds the threshold.
Trajectory integrate_flow(const ChartPoint& start, const HermitianOperator& op,
                          const DeformationSpec& spec, double t_end, double dt);
Trajectory integrate_flow(const ChartPoint& start, const HermitianOperator& op,
                          const DeformationSpec& spec, const FlowOptions& opt);

/// Max chart distance between the undeformed geometric flow of psi0 and the
/// projected exact Schr\"odinger evolution, sampled every step.
double correspondence_error(const StateVector& psi0,
                            const HermitianOperator& op, double t_end,
                            double dt);

/// Transports two random tangent vectors along the flow by the variational
/// equation (finite-difference Jacobian of the field) and returns the max
/// drift of omega_G(v1, v2) from its initial value.
double symplectic_preservation_error(const ChartPoint& start,
                                     const HermitianOperator& op,
                                     const DeformationSpec& spec, double t_end,
                                     double dt, std::mt19937_64& rng);

/// {A, H}_{omega_G}(p) = omega_G(X_A^G, X_H^G); the Ehrenfest rate of <A>.
double poisson_bracket(const HermitianOperator& a, const HermitianOperator& h,
                       const ChartPoint& p, const DeformationSpec& spec);

/// Per-unit-epsilon observable correction for a constant-torsion deformation:
/// the first-order prediction {A,H}_omega + epsilon * correction matches the
/// deformed bracket to O(epsilon^2).
double torsion_observable_correction(const HermitianOperator& a,
                                     const HermitianOperator& h,
                                     const ChartPoint& p,
                                     const DeformationSpec& spec);

}  // namespace gqm
