// Geometric (Berry) phase of closed loops in state space: the gauge-invariant
// Pancharatnam overlap product for discrete loops at any dimension, and the
// surface integral of the (deformed) symplectic form on CP^1.

#pragma once

#include <span>
#include <vector>

#include "gqm/deformation.hpp"
#include "gqm/hilbert.hpp"

namespace gqm {

/// -arg prod_k <psi_k|psi_{k+1}> around the closed loop, wrapped to (-pi, pi].
/// With closed == true the final entry is treated as a duplicate of the first
/// and dropped, so per-state phase changes cancel exactly; otherwise the
/// product wraps from the last entry back to the first.
double discrete_loop_phase(std::span<const StateVector> loop, bool closed);

/// Proportionality constant kappa between the Kahler symplectic form of this
/// library (normalized so omega_01 = 2 hbar at the chart origin) and the
/// Berry curvature.  Measured once by matching the surface integral to the
/// Pancharatnam phase of the equator loop and frozen here; the calibration
/// test recomputes it.
inline double berry_calibration(double hbar) { return -1.0 / hbar; }

/// Integral of kappa * omega_G over the cap bounded by the loop (CP^1 only).
/// The cap is triangulated as a fan from the normalized loop centroid on the
/// Bloch sphere (north pole when the centroid degenerates), each fan triangle
/// split into `radial_subdivisions` strips, midpoint rule per triangle.
/// The loop must be closed: first and last samples coincide.
double surface_phase(std::span<const ChartPoint> loop,
                     const DeformationSpec& spec, int radial_subdivisions = 64);

/// surface_phase(loop, spec) - surface_phase(loop, none): the deformation
/// correction to the geometric phase, linear in the coupling.
double deformed_phase_correction(std::span<const ChartPoint> loop,
                                 const DeformationSpec& spec,
                                 int radial_subdivisions = 64);

/// Latitude loop at the given colatitude: `segments` states with azimuth
/// 2 pi k / segments (open; the product wraps).
std::vector<StateVector> latitude_loop_states(double colatitude, int segments,
                                              double hbar = 1.0);

/// Same loop as chart points, explicitly closed (first sample repeated).
std::vector<ChartPoint> latitude_loop_points(double colatitude, int segments,
                                             double hbar = 1.0);

}  // namespace gqm
