#include "gqm/verify.hpp"

#include <cmath>

#include "gqm/dynamics.hpp"
#include "gqm/phase.hpp"
#include "gqm/qubit.hpp"
#include "gqm/random.hpp"

namespace gqm {

namespace {

constexpr double kEpsilon = 0.1;
constexpr double kCurvature = 2.0;

double circular_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * M_PI);
  return std::min(d, 2.0 * M_PI - d);
}

CheckResult upper(std::string name, double measured, double threshold) {
  return {std::move(name), measured, threshold, true, measured <= threshold};
}

CheckResult lower(std::string name, double measured, double threshold) {
  return {std::move(name), measured, threshold, false, measured >= threshold};
}

// Deformations exercised by every deformed-structure check.
std::vector<DeformationSpec> canonical_specs(int chart_dim,
                                             std::mt19937_64& rng) {
  std::vector<DeformationSpec> specs;
  specs.push_back(DeformationSpec::scalar_curvature(kEpsilon, kCurvature));
  specs.push_back(DeformationSpec::constant_torsion(
      0.05, random_antisymmetric(chart_dim, rng, 0.5)));
  // Coordinate-dependent but closed field: only the dx0 ^ dx1 component
  // varies, and only with x0.
  specs.push_back(DeformationSpec::custom_field(
      0.05, [chart_dim](const ChartPoint& p) {
        RMatrix t = RMatrix::Zero(chart_dim, chart_dim);
        t(0, 1) = 0.3 * p.coords()[0];
        t(1, 0) = -t(0, 1);
        return t;
      }));
  return specs;
}

double defining_residual(const ChartPoint& p, const HermitianOperator& h,
                         const DeformationSpec& spec) {
  const RMatrix w = deformed_form_at(p, spec);
  const RVector dh = expectation_differential(p, h);
  const TangentVector x = hamiltonian_field(p, h, spec);
  return (w.transpose() * x.components - dh).norm() / (1.0 + dh.norm());
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifySettings& st) {
  std::vector<CheckResult> results;
  const double hbar = st.hbar;
  const int m = std::max(1, st.instances);

  // --- Inner product decomposition -----------------------------------------
  {
    std::mt19937_64 rng(st.seed + 1);
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const StateVector psi = random_state(n, rng, hbar);
      const StateVector phi = random_state(n, rng, hbar);
      const auto [g, om] = inner_decompose(psi, phi);
      const auto [g2, om2] = inner_decompose(phi, psi);
      const Complex ip = psi.amplitudes().dot(phi.amplitudes());
      const double scale = psi.norm() * phi.norm();
      worst = std::max(
          worst, std::abs(ip - Complex(g, om) / (2.0 * hbar)) / scale);
      worst = std::max(worst, std::abs(g - g2) / (2.0 * hbar * scale));
      worst = std::max(worst, std::abs(om + om2) / (2.0 * hbar * scale));
    }
    results.push_back(upper(
        "Definition (Hilbert Space and Inner Product Decomposition)", worst,
        1e-14));
  }

  // --- Unitary evolution ----------------------------------------------------
  {
    std::mt19937_64 rng(st.seed + 2);
    std::uniform_real_distribution<double> time(-5.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const HermitianOperator h = random_hermitian(n, rng);
      const StateVector psi = random_state(n, rng, hbar);
      const StateVector phi = random_state(n, rng, hbar);
      const double t = time(rng);
      const double s = time(rng);
      const ExactPropagator prop(h, hbar);
      const Complex before = psi.amplitudes().dot(phi.amplitudes());
      const Complex after =
          prop.at(psi, t).amplitudes().dot(prop.at(phi, t).amplitudes());
      worst = std::max(worst,
                       std::abs(after - before) / (psi.norm() * phi.norm()));
      const CVector group =
          prop.at(prop.at(psi, s), t).amplitudes() -
          prop.at(psi, s + t).amplitudes();
      worst = std::max(worst, group.norm() / psi.norm());
    }
    results.push_back(
        upper("Proposition (Unitary Evolution on the Hilbert Space)", worst,
              1e-10));
  }

  // --- Kahler structure ------------------------------------------------------
  {
    std::mt19937_64 rng(st.seed + 3);
    double compat = 0.0;
    double jsq = 0.0;
    for (int i = 0; i < m; ++i) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const ChartPoint p = random_chart_point(n, rng, hbar, 2.0);
      const KahlerData kd = kahler_at(p);
      const RVector x = random_tangent(p.chart_dim(), rng);
      const RVector y = random_tangent(p.chart_dim(), rng);
      compat = std::max(compat,
                        std::abs(x.dot(kd.g * y) - x.dot(kd.omega * (kd.j * y))));
      jsq = std::max(jsq, (kd.j * kd.j + RMatrix::Identity(p.chart_dim(),
                                                           p.chart_dim()))
                              .cwiseAbs()
                              .maxCoeff());
    }
    results.push_back(
        upper("Definition (Kähler Structure): compatibility g(X,Y) = ω(X,JY)",
              compat, 1e-10));
    results.push_back(
        upper("Definition (Kähler Structure): J² = -I", jsq, 1e-10));
  }

  // --- Axiom 1: closed and non-degenerate -----------------------------------
  {
    std::mt19937_64 rng(st.seed + 4);
    double closure = 0.0;
    double sigma = std::numeric_limits<double>::infinity();
    const DeformationSpec none = DeformationSpec::none();
    for (int i = 0; i < std::min(m, 8); ++i) {
      const int n = 2 + static_cast<int>(rng() % 2);
      const ChartPoint p = random_chart_point(n, rng, hbar, 2.0);
      closure = std::max(closure, closure_residual(none, p, 1e-4));
      sigma = std::min(sigma, smallest_singular_value(p, none));
    }
    // Also probe near the working chart boundary.
    const ChartPoint far = random_chart_point(2, rng, hbar, 10.0);
    sigma = std::min(sigma, smallest_singular_value(far, none));
    results.push_back(
        upper("Axiom (Symplectic State Space): dω = 0", closure, 1e-6));
    results.push_back(
        lower("Axiom (Symplectic State Space): ωⁿ ≠ 0", sigma, 1e-8));
  }

  // --- Schroedinger correspondence ------------------------------------------
  {
    std::mt19937_64 rng(st.seed + 5);
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n) {
      const HermitianOperator h = random_hermitian(n, rng);
      const StateVector psi0 = random_state(n, rng, hbar);
      worst = std::max(worst, correspondence_error(psi0, h, 2.0, 1e-3));
    }
    results.push_back(
        upper("Theorem (Geometric Formulation of Schrödinger Evolution)",
              worst, 1e-6));
  }

  // --- Symplectic preservation along the flow --------------------------------
  {
    std::mt19937_64 rng(st.seed + 6);
    const HermitianOperator h = qubit_hamiltonian(1.0, hbar);
    const ChartPoint start = project(spin_coherent_state(M_PI / 2, 0.3, hbar));
    double worst = 0.0;
    for (const auto& spec :
         {DeformationSpec::none(),
          DeformationSpec::scalar_curvature(kEpsilon, kCurvature)}) {
      worst = std::max(worst, symplectic_preservation_error(
                                  start, h, spec, 2.0 * M_PI, 1e-3, rng));
    }
    results.push_back(
        upper("Lemma (Preservation of the Symplectic Structure)", worst, 1e-6));
  }

  // --- Existence/uniqueness: defining-equation residual ----------------------
  {
    std::mt19937_64 rng(st.seed + 7);
    double undeformed = 0.0;
    double deformed = 0.0;
    for (int i = 0; i < m; ++i) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const ChartPoint p = random_chart_point(n, rng, hbar, 1.5);
      const HermitianOperator h = random_hermitian(n, rng);
      undeformed =
          std::max(undeformed, defining_residual(p, h, DeformationSpec::none()));
      for (const auto& spec : canonical_specs(p.chart_dim(), rng)) {
        deformed = std::max(deformed, defining_residual(p, h, spec));
      }
    }
    results.push_back(
        upper("Lemma (Existence and Uniqueness of the Hamiltonian Flow)",
              undeformed, 1e-10));
    results.push_back(
        upper("Theorem (Existence of the Deformed Hamiltonian Flow)", deformed,
              1e-10));
  }

  // --- Deformed closure and non-degeneracy ----------------------------------
  {
    std::mt19937_64 rng(st.seed + 8);
    double closure = 0.0;
    double sigma = std::numeric_limits<double>::infinity();
    double weyl_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < std::min(m, 6); ++i) {
      const ChartPoint p = random_chart_point(3, rng, hbar, 1.5);
      for (const auto& spec : canonical_specs(p.chart_dim(), rng)) {
        closure = std::max(closure, closure_residual(spec, p, 1e-4));
        sigma = std::min(sigma, smallest_singular_value(p, spec));
      }
      // Weyl bound for the additive torsion family.
      const RMatrix theta = random_antisymmetric(p.chart_dim(), rng, 0.5);
      const double eps = 0.05;
      const auto spec = DeformationSpec::constant_torsion(eps, theta);
      Eigen::JacobiSVD<RMatrix> svd(eps * theta);
      const double bound =
          smallest_singular_value(p, DeformationSpec::none()) -
          svd.singularValues().maxCoeff();
      weyl_margin = std::min(
          weyl_margin, smallest_singular_value(p, spec) - bound);
    }
    results.push_back(
        upper("Lemma (Closure of the Deformed Symplectic Form)", closure, 1e-6));
    results.push_back(
        lower("Lemma (Non-Degeneracy under Small Perturbations): σ_min", sigma,
              1e-8));
    results.push_back(
        lower("Lemma (Non-Degeneracy under Small Perturbations): Weyl bound",
              weyl_margin, -1e-10));
  }

  // --- Constant-curvature family: admissibility and rescaling ----------------
  {
    std::mt19937_64 rng(st.seed + 9);
    const auto scalar = DeformationSpec::scalar_curvature(kEpsilon, kCurvature);
    const double factor = 1.0 + kEpsilon * kCurvature;
    double sigma_dev = 0.0;
    double field_dev = 0.0;
    double recovery = 0.0;
    for (int i = 0; i < m; ++i) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const ChartPoint p = random_chart_point(n, rng, hbar, 1.5);
      const HermitianOperator h = random_hermitian(n, rng);
      const double s0 = smallest_singular_value(p, DeformationSpec::none());
      const double s1 = smallest_singular_value(p, scalar);
      sigma_dev = std::max(sigma_dev, std::abs(s1 / s0 - factor) / factor);
      const RVector x =
          hamiltonian_field(p, h, DeformationSpec::none()).components;
      const RVector xg = hamiltonian_field(p, h, scalar).components;
      field_dev = std::max(field_dev, (xg - x / factor).norm() / x.norm());
      const RVector x0 = hamiltonian_field(
                             p, h, DeformationSpec::scalar_curvature(
                                       0.0, kCurvature))
                             .components;
      recovery = std::max(recovery, (x0 - x).norm() / x.norm());
    }
    results.push_back(upper(
        "Lemma (Admissibility of the Constant Curvature Deformation)",
        sigma_dev, 1e-10));
    results.push_back(upper(
        "Proposition (Modified Hamiltonian Vector Field)", field_dev, 1e-12));
    results.push_back(
        upper("Corollary (Recovery of Standard Dynamics)", recovery, 1e-15));
  }

  // --- Time reparametrization and effective generator ------------------------
  {
    const auto scalar = DeformationSpec::scalar_curvature(kEpsilon, kCurvature);
    const double factor = 1.0 + kEpsilon * kCurvature;
    const HermitianOperator h = qubit_hamiltonian(1.0, hbar);
    const ChartPoint start = project(spin_coherent_state(M_PI / 2, 0.0, hbar));
    const Trajectory deformed = integrate_flow(start, h, scalar, 10.0, 1e-3);
    const Trajectory rescaled = integrate_flow(
        start, h, DeformationSpec::none(), 10.0 / factor, 1e-3 / factor);
    double worst = 0.0;
    for (std::size_t k = 0; k < deformed.points.size(); ++k) {
      worst = std::max(
          worst, chart_distance(deformed.points[k], rescaled.points[k]));
    }
    results.push_back(
        upper("Corollary (Curvature-Modified Flow Parameter)", worst, 1e-7));

    // Deformed geometric flow == exact evolution under H/(1+eps R).
    const HermitianOperator h_eff(CMatrix(h.matrix() / factor));
    const StateVector psi0 = spin_coherent_state(M_PI / 2, 0.0, hbar);
    const ExactPropagator prop(h_eff, hbar);
    double dev = 0.0;
    for (std::size_t k = 0; k < deformed.points.size(); ++k) {
      dev = std::max(dev, chart_distance(deformed.points[k],
                                         project(prop.at(psi0,
                                                         deformed.times[k]))));
    }
    results.push_back(upper(
        "Proposition (Effective Modification of Schrödinger Evolution)", dev,
        1e-6));
  }

  // --- Perturbative order and asymptotic correspondence ----------------------
  {
    std::mt19937_64 rng(st.seed + 10);
    const ChartPoint p = project(spin_coherent_state(M_PI / 2, 0.7, hbar));
    const HermitianOperator h = random_hermitian(2, rng);
    const RMatrix theta = random_antisymmetric(p.chart_dim(), rng, 1.0);
    const RVector x =
        hamiltonian_field(p, h, DeformationSpec::none()).components;

    const auto residual = [&](double eps) {
      const auto spec = DeformationSpec::constant_torsion(eps, theta);
      const RVector xg = hamiltonian_field(p, h, spec).components;
      const RVector dx = first_order_correction(p, h, spec).components;
      return (xg - x - dx).norm();
    };
    double band = 0.0;
    for (double eps : {0.1, 0.05}) {
      band = std::max(band,
                      std::abs(residual(eps) / residual(eps / 2.0) - 4.0));
    }
    results.push_back(upper(
        "Theorem (Perturbative Deformation of Quantum Evolution)", band, 0.4));

    // || X(eps) - X || decays linearly: slopes agree across decades.
    std::vector<double> slopes;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const auto spec = DeformationSpec::constant_torsion(eps, theta);
      slopes.push_back(
          (hamiltonian_field(p, h, spec).components - x).norm() / eps);
    }
    double slope_dev = 0.0;
    for (double s : slopes) {
      slope_dev = std::max(slope_dev, std::abs(s / slopes.back() - 1.0));
    }
    results.push_back(
        upper("Proposition (Asymptotic Correspondence)", slope_dev, 0.5));
  }

  // --- Qubit: modified precession and frequency shift ------------------------
  {
    const HermitianOperator h = qubit_hamiltonian(1.0, hbar);
    const StateVector psi0 = spin_coherent_state(M_PI / 2, 0.0, hbar);
    const BlochVector n0 = bloch_from_state(psi0);
    const auto scalar = DeformationSpec::scalar_curvature(kEpsilon, kCurvature);
    const Trajectory traj = integrate_flow(project(psi0), h, scalar, 20.0, 1e-3);
    const std::vector<BlochVector> track = bloch_track(traj);
    double dev = 0.0;
    for (std::size_t k = 0; k < track.size(); ++k) {
      dev = std::max(dev, (track[k] - precession_closed_form(
                                          n0, 1.0, kEpsilon, kCurvature,
                                          traj.times[k]))
                              .norm());
    }
    results.push_back(upper("Theorem (Modified Qubit Dynamics)", dev, 1e-7));

    const double base = estimate_frequency(integrate_flow(
        project(psi0), h, DeformationSpec::none(), 20.0, 1e-3));
    double freq_dev = 0.0;
    for (double eps : {0.05, 0.1}) {
      const double est = estimate_frequency(integrate_flow(
          project(psi0), h,
          DeformationSpec::scalar_curvature(eps, kCurvature), 20.0, 1e-3));
      freq_dev = std::max(
          freq_dev, std::abs(est / base - 1.0 / (1.0 + eps * kCurvature)));
    }
    results.push_back(
        upper("Corollary (Effective Frequency Shift)", freq_dev, 1e-6));
  }

  // --- Berry phase ------------------------------------------------------------
  {
    const auto states = latitude_loop_states(M_PI / 2, 10000, hbar);
    const double discrete = discrete_loop_phase(states, false);
    results.push_back(upper("Definition (Berry Phase)",
                            circular_distance(discrete, -M_PI), 1e-3));

    const auto loop = latitude_loop_points(M_PI / 3, 2000, hbar);
    const auto scalar = DeformationSpec::scalar_curvature(kEpsilon, kCurvature);
    const double base = surface_phase(loop, DeformationSpec::none(), 32);
    const double shifted = surface_phase(loop, scalar, 32);
    results.push_back(
        upper("Corollary (Curvature-Induced Phase Shift)",
              std::abs(shifted / base - (1.0 + kEpsilon * kCurvature)), 1e-6));

    const double c1 = deformed_phase_correction(loop, scalar, 32);
    const double c2 = deformed_phase_correction(
        loop, DeformationSpec::scalar_curvature(kEpsilon / 2.0, kCurvature),
        32);
    results.push_back(upper("Theorem (Berry Phase Correction)",
                            std::abs(c1 / c2 - 2.0), 1e-6));
  }

  // --- Observable evolution ----------------------------------------------------
  {
    std::mt19937_64 rng(st.seed + 11);
    const HermitianOperator h = qubit_hamiltonian(1.0, hbar);
    CMatrix sx(2, 2);
    sx << 0, 1, 1, 0;
    const HermitianOperator a{std::move(sx)};

    // Ehrenfest: {A,H} equals d<A>/dt along the exact evolution.
    double ehrenfest = 0.0;
    for (int i = 0; i < 5; ++i) {
      const StateVector psi = random_state(2, rng, hbar);
      const ChartPoint p = project(psi);
      const double bracket =
          poisson_bracket(a, h, p, DeformationSpec::none());
      const double fd_step = 1e-5;
      const ExactPropagator prop(h, hbar);
      const double rate = (expectation(a, prop.at(psi, fd_step)) -
                           expectation(a, prop.at(psi, -fd_step))) /
                          (2.0 * fd_step);
      ehrenfest = std::max(ehrenfest, std::abs(bracket - rate));
    }
    results.push_back(
        upper("Discussion (Modified Poisson Bracket): Ehrenfest rate",
              ehrenfest, 1e-8));

    // First-order observable correction under constant torsion.
    double band = 0.0;
    for (int i = 0; i < 5; ++i) {
      const ChartPoint p = random_chart_point(2, rng, hbar, 0.8);
      const HermitianOperator ha = random_hermitian(2, rng);
      const HermitianOperator hh = random_hermitian(2, rng);
      const RMatrix theta = random_antisymmetric(p.chart_dim(), rng, 1.0);
      const double base =
          poisson_bracket(ha, hh, p, DeformationSpec::none());
      const auto resid = [&](double eps) {
        const auto spec = DeformationSpec::constant_torsion(eps, theta);
        const double corr = torsion_observable_correction(ha, hh, p, spec);
        return std::abs(poisson_bracket(ha, hh, p, spec) -
                        (base + eps * corr));
      };
      band = std::max(band, std::abs(resid(0.1) / resid(0.05) - 4.0));
    }
    results.push_back(
        upper("Proposition (Modification of Observables)", band, 0.4));
  }

  // --- User-supplied deformation (from config) --------------------------------
  if (st.user_deformation.has_value()) {
    std::mt19937_64 rng(st.seed + 12);
    double closure = 0.0;
    double sigma = std::numeric_limits<double>::infinity();
    for (int i = 0; i < std::min(m, 6); ++i) {
      const ChartPoint p = random_chart_point(st.user_dim, rng, hbar, 1.0);
      closure =
          std::max(closure, closure_residual(*st.user_deformation, p, 1e-4));
      sigma = std::min(sigma,
                       smallest_singular_value(p, *st.user_deformation));
    }
    results.push_back(upper(
        "Lemma (Closure of the Deformed Symplectic Form) [config deformation]",
        closure, 1e-6));
    results.push_back(lower(
        "Lemma (Non-Degeneracy under Small Perturbations) [config deformation]",
        sigma, 1e-8));
  }

  return results;
}

}  // namespace gqm
