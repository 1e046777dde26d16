#include "gqm/dynamics.hpp"

#include <cmath>

namespace gqm {

namespace {

constexpr double kSigmaMinThreshold = 1e-8;
constexpr double kJacobianStep = 1e-6;

// Solves W^T x = rhs and rejects degenerate systems via the defining-equation
// residual (catches singular and severely ill-conditioned omega_G without a
// per-call SVD).
RVector solve_contraction(const RMatrix& w, const RVector& rhs) {
  const RMatrix wt = w.transpose();
  Eigen::PartialPivLU<RMatrix> lu(wt);
  RVector x = lu.solve(rhs);
  if (!x.allFinite() ||
      (wt * x - rhs).norm() > 1e-10 * (1.0 + rhs.norm())) {
    throw AdmissibilityError(
        "hamiltonian field: omega_G is singular at this point, violating "
        "Lemma (Non-Degeneracy under Small Perturbations)");
  }
  return x;
}

RVector field_at(const ChartPoint& p, const HermitianOperator& op,
                 const DeformationSpec& spec) {
  return solve_contraction(deformed_form_at(p, spec),
                           expectation_differential(p, op));
}

void check_admissibility(const ChartPoint& p, const DeformationSpec& spec) {
  if (smallest_singular_value(p, spec) < kSigmaMinThreshold) {
    throw AdmissibilityError(
        "integrate_flow: omega_G lost non-degeneracy along the trajectory "
        "(Lemma: Non-Degeneracy under Small Perturbations)");
  }
}

long step_count(double t_end, double dt, long max_steps, double* last_dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate_flow: dt must be > 0");
  if (t_end < 0.0) throw std::invalid_argument("integrate_flow: t_end must be >= 0");
  const double raw = t_end / dt;
  long full = static_cast<long>(std::floor(raw + 1e-9));
  double rem = t_end - static_cast<double>(full) * dt;
  if (rem < dt * 1e-9) rem = 0.0;
  const long total = full + (rem > 0.0 ? 1 : 0);
  if (total > max_steps) {
    throw std::invalid_argument("integrate_flow: step count exceeds guard");
  }
  *last_dt = rem;
  return total;
}

}  // namespace

double Trajectory::energy_drift() const {
  double drift = 0.0;
  for (double e : energies) drift = std::max(drift, std::abs(e - energies.front()));
  return energies.empty() ? 0.0 : drift;
}

TangentVector hamiltonian_field(const ChartPoint& p,
                                const HermitianOperator& op,
                                const DeformationSpec& spec) {
  return {p.pivot(), field_at(p, op, spec)};
}

TangentVector first_order_correction(const ChartPoint& p,
                                     const HermitianOperator& op,
                                     const DeformationSpec& spec) {
  const int d = p.chart_dim();
  if (spec.is_none()) return {p.pivot(), RVector::Zero(d)};

  const RMatrix omega = kahler_at(p).omega;
  const RMatrix omega_t = omega.transpose();
  Eigen::PartialPivLU<RMatrix> lu(omega_t);
  const RVector dh = expectation_differential(p, op);
  const RVector x = lu.solve(dh);
  const RMatrix dw = delta_omega_at(p, spec);
  RVector dx = lu.solve(RVector(-dw.transpose() * x));
  if (!dx.allFinite()) {
    throw AdmissibilityError("first_order_correction: omega is singular");
  }
  return {p.pivot(), std::move(dx)};
}

Trajectory integrate_flow(const ChartPoint& start, const HermitianOperator& op,
                          const DeformationSpec& spec, double t_end, double dt) {
  FlowOptions opt;
  opt.dt = dt;
  opt.t_end = t_end;
  return integrate_flow(start, op, spec, opt);
}

Trajectory integrate_flow(const ChartPoint& start, const HermitianOperator& op,
                          const DeformationSpec& spec, const FlowOptions& opt) {
  double last_dt = 0.0;
  const long steps = step_count(opt.t_end, opt.dt, opt.max_steps, &last_dt);

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.points.reserve(steps + 1);
  traj.energies.reserve(steps + 1);

  ChartPoint x = start;
  check_admissibility(x, spec);

  const auto record = [&](double t, const ChartPoint& pt) {
    traj.times.push_back(t);
    traj.points.push_back(pt);
    traj.energies.push_back(expectation(op, embed(pt)));
    if (!std::isnan(opt.energy_tolerance) &&
        std::abs(traj.energies.back() - traj.energies.front()) >
            opt.energy_tolerance) {
      throw NumericalError("integrate_flow: energy drift exceeded tolerance");
    }
  };
  record(0.0, x);

  for (long k = 0; k < steps; ++k) {
    const bool last = (k == steps - 1) && last_dt > 0.0;
    const double h = last ? last_dt : opt.dt;

    const RVector k1 = field_at(x, op, spec);
    const RVector k2 =
        field_at(x.with_coords(x.coords() + (0.5 * h) * k1), op, spec);
    const RVector k3 =
        field_at(x.with_coords(x.coords() + (0.5 * h) * k2), op, spec);
    const RVector k4 = field_at(x.with_coords(x.coords() + h * k3), op, spec);
    RVector next = x.coords() + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.allFinite()) {
      throw NumericalError("integrate_flow: state became non-finite");
    }
    x = x.with_coords(std::move(next));

    // Chart switches happen between steps, never inside an RK4 stage.
    if (x.max_coordinate_modulus() > opt.pivot_switch_threshold) {
      x = rechart(x, preferred_pivot(embed(x)));
      ++traj.pivot_switches;
      check_admissibility(x, spec);
    } else if (opt.admissibility_stride > 0 &&
               (k + 1) % opt.admissibility_stride == 0) {
      check_admissibility(x, spec);
    }
    record(last ? opt.t_end : (k + 1) * opt.dt, x);
  }
  return traj;
}

double correspondence_error(const StateVector& psi0,
                            const HermitianOperator& op, double t_end,
                            double dt) {
  const Trajectory traj = integrate_flow(project(psi0), op,
                                         DeformationSpec::none(), t_end, dt);
  const ExactPropagator prop(op, psi0.hbar());
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const ChartPoint exact = project(prop.at(psi0, traj.times[k]));
    worst = std::max(worst, chart_distance(traj.points[k], exact));
  }
  return worst;
}

double symplectic_preservation_error(const ChartPoint& start,
                                     const HermitianOperator& op,
                                     const DeformationSpec& spec, double t_end,
                                     double dt, std::mt19937_64& rng) {
  const int d = start.chart_dim();
  std::normal_distribution<double> gauss(0.0, 1.0);
  RVector v1(d), v2(d);
  for (int i = 0; i < d; ++i) {
    v1[i] = gauss(rng);
    v2[i] = gauss(rng);
  }
  v1.normalize();
  v2.normalize();

  const auto field = [&](const ChartPoint& pt) { return field_at(pt, op, spec); };

  // Finite-difference Jacobian of the field at pt.
  const auto jacobian = [&](const ChartPoint& pt) {
    RMatrix jac(d, d);
    for (int j = 0; j < d; ++j) {
      RVector plus = pt.coords();
      RVector minus = pt.coords();
      plus[j] += kJacobianStep;
      minus[j] -= kJacobianStep;
      jac.col(j) = (field(pt.with_coords(plus)) - field(pt.with_coords(minus))) /
                   (2.0 * kJacobianStep);
    }
    return jac;
  };

  double last_dt = 0.0;
  const long steps = step_count(t_end, dt, 100'000'000, &last_dt);

  ChartPoint x = start;
  const double initial = v1.dot(deformed_form_at(x, spec) * v2);
  double worst = 0.0;

  for (long k = 0; k < steps; ++k) {
    const bool last = (k == steps - 1) && last_dt > 0.0;
    const double h = last ? last_dt : dt;

    // RK4 on the extended system (x, v1, v2) with dv = J(x) v.
    RVector kx[4], kv1[4], kv2[4];
    const double stage_scale[4] = {0.0, 0.5, 0.5, 1.0};
    for (int s = 0; s < 4; ++s) {
      const double c = stage_scale[s] * h;
      const ChartPoint xs =
          s == 0 ? x : x.with_coords(RVector(x.coords() + c * kx[s - 1]));
      const RVector vs1 = s == 0 ? v1 : RVector(v1 + c * kv1[s - 1]);
      const RVector vs2 = s == 0 ? v2 : RVector(v2 + c * kv2[s - 1]);
      kx[s] = field(xs);
      const RMatrix jac = jacobian(xs);
      kv1[s] = jac * vs1;
      kv2[s] = jac * vs2;
    }
    x = x.with_coords(RVector(
        x.coords() + (h / 6.0) * (kx[0] + 2.0 * kx[1] + 2.0 * kx[2] + kx[3])));
    v1 += (h / 6.0) * (kv1[0] + 2.0 * kv1[1] + 2.0 * kv1[2] + kv1[3]);
    v2 += (h / 6.0) * (kv2[0] + 2.0 * kv2[1] + 2.0 * kv2[2] + kv2[3]);

    if (x.max_coordinate_modulus() > kPivotSwitchThreshold) {
      const int new_pivot = preferred_pivot(embed(x));
      const RMatrix jac = chart_transition_jacobian(x, new_pivot);
      v1 = jac * v1;
      v2 = jac * v2;
      x = rechart(x, new_pivot);
    }
    worst = std::max(worst,
                     std::abs(v1.dot(deformed_form_at(x, spec) * v2) - initial));
  }
  return worst;
}

double poisson_bracket(const HermitianOperator& a, const HermitianOperator& h,
                       const ChartPoint& p, const DeformationSpec& spec) {
  const RMatrix omega_g = deformed_form_at(p, spec);
  const RVector xa = solve_contraction(omega_g, expectation_differential(p, a));
  const RVector xh = solve_contraction(omega_g, expectation_differential(p, h));
  return xa.dot(omega_g * xh);
}

double torsion_observable_correction(const HermitianOperator& a,
                                     const HermitianOperator& h,
                                     const ChartPoint& p,
                                     const DeformationSpec& spec) {
  const auto* ct = std::get_if<ConstantTorsionDeformation>(&spec.value());
  if (ct == nullptr) {
    throw std::invalid_argument(
        "torsion_observable_correction: spec must be constant torsion");
  }
  // Theta in the chart of p at unit epsilon.
  const DeformationSpec unit =
      DeformationSpec::constant_torsion(1.0, ct->theta, ct->reference_pivot);
  const RMatrix theta = delta_omega_at(p, unit);

  const RMatrix omega = kahler_at(p).omega;
  const RMatrix omega_t = omega.transpose();
  Eigen::PartialPivLU<RMatrix> lu(omega_t);
  const RVector xa = lu.solve(expectation_differential(p, a));
  const RVector xh = lu.solve(expectation_differential(p, h));
  const RVector dxa = lu.solve(RVector(-theta.transpose() * xa));
  if (!xa.allFinite() || !xh.allFinite() || !dxa.allFinite()) {
    throw AdmissibilityError("torsion_observable_correction: omega singular");
  }
  return dxa.dot(omega * xh);
}

}  // namespace gqm
