#include "gqm/phase.hpp"

#include <cmath>

#include "gqm/qubit.hpp"

namespace gqm {

namespace {

double wrap_to_pi(double angle) {
  double y = std::fmod(angle, 2.0 * M_PI);
  if (y <= -M_PI) y += 2.0 * M_PI;
  if (y > M_PI) y -= 2.0 * M_PI;
  return y;
}

// Chart point of a Bloch-sphere direction, using the chart whose pivot keeps
// |z| <= 1 (pivot 0 on the northern hemisphere, pivot 1 on the southern).
ChartPoint chart_from_bloch(const Eigen::Vector3d& n, double hbar) {
  RVector coords(2);
  if (n.z() >= 0.0) {
    const double d = 1.0 + n.z();
    coords << n.x() / d, n.y() / d;
    return ChartPoint(0, std::move(coords), 2, hbar);
  }
  const double d = 1.0 - n.z();
  coords << n.x() / d, -n.y() / d;
  return ChartPoint(1, std::move(coords), 2, hbar);
}

// Jacobian of the chart -> Bloch map at p (3 x 2).
Eigen::Matrix<double, 3, 2> bloch_jacobian(const ChartPoint& p) {
  const double x = p.coords()[0];
  const double y = p.coords()[1];
  const double s = 1.0 + x * x + y * y;
  const double s2 = s * s;
  Eigen::Matrix<double, 3, 2> jac;
  if (p.pivot() == 0) {
    jac << 2.0 / s - 4.0 * x * x / s2, -4.0 * x * y / s2,
           -4.0 * x * y / s2,          2.0 / s - 4.0 * y * y / s2,
           -4.0 * x / s2,              -4.0 * y / s2;
  } else {
    jac << 2.0 / s - 4.0 * x * x / s2, -4.0 * x * y / s2,
           4.0 * x * y / s2,           -2.0 / s + 4.0 * y * y / s2,
           4.0 * x / s2,               4.0 * y / s2;
  }
  return jac;
}

// omega_G at the sphere point m evaluated on two R^3 edge vectors, pulled
// back through the chart map (radial components projected off).
double form_on_sphere(const Eigen::Vector3d& m, const Eigen::Vector3d& e1,
                      const Eigen::Vector3d& e2, const DeformationSpec& spec,
                      double hbar) {
  const ChartPoint cp = chart_from_bloch(m, hbar);
  const Eigen::Matrix<double, 3, 2> jac = bloch_jacobian(cp);
  const Eigen::Matrix2d gram = jac.transpose() * jac;
  const Eigen::Vector3d t1 = e1 - e1.dot(m) * m;
  const Eigen::Vector3d t2 = e2 - e2.dot(m) * m;
  const Eigen::Vector2d a1 = gram.ldlt().solve(jac.transpose() * t1);
  const Eigen::Vector2d a2 = gram.ldlt().solve(jac.transpose() * t2);
  const RMatrix w = deformed_form_at(cp, spec);
  return a1.dot(w * a2);
}

}  // namespace

double discrete_loop_phase(std::span<const StateVector> loop, bool closed) {
  const std::size_t count = closed ? loop.size() - 1 : loop.size();
  if (loop.size() < 3 || count < 3) {
    throw std::invalid_argument("discrete_loop_phase: need at least 3 states");
  }
  const int dim = loop.front().dim();
  double total = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const StateVector& bra = loop[k];
    const StateVector& ket = loop[(k + 1) % count];
    if (bra.dim() != dim || ket.dim() != dim) {
      throw std::invalid_argument("discrete_loop_phase: dimension mismatch");
    }
    const Complex overlap = bra.amplitudes().dot(ket.amplitudes());
    if (std::abs(overlap) <= 1e-8 * bra.norm() * ket.norm()) {
      throw NumericalError(
          "discrete_loop_phase: consecutive states are orthogonal; the loop "
          "is too coarse");
    }
    total += std::arg(overlap);
  }
  return wrap_to_pi(-total);
}

double surface_phase(std::span<const ChartPoint> loop,
                     const DeformationSpec& spec, int radial_subdivisions) {
  if (loop.size() < 4) {
    throw std::invalid_argument("surface_phase: need a closed loop (>= 4 samples)");
  }
  if (radial_subdivisions < 1) {
    throw std::invalid_argument("surface_phase: radial_subdivisions must be >= 1");
  }
  for (const ChartPoint& p : loop) {
    if (p.dim() != 2) {
      throw std::invalid_argument("surface_phase: CP^1 only");
    }
  }
  if (chart_distance(loop.front(), loop.back()) > 1e-10) {
    throw std::invalid_argument("surface_phase: loop is not closed");
  }
  const double hbar = loop.front().hbar();

  std::vector<Eigen::Vector3d> rim(loop.size());
  for (std::size_t k = 0; k < loop.size(); ++k) {
    rim[k] = bloch_from_state(embed(loop[k]));
  }

  // Fan apex: normalized centroid; +z when the centroid degenerates (e.g. a
  // great circle).  This selects the cap on the chart-origin side for
  // equatorial and northern loops.
  Eigen::Vector3d apex = Eigen::Vector3d::Zero();
  for (std::size_t k = 0; k + 1 < rim.size(); ++k) apex += rim[k];
  apex /= static_cast<double>(rim.size() - 1);
  if (apex.norm() < 1e-8) {
    apex = Eigen::Vector3d::UnitZ();
  } else {
    apex.normalize();
  }

  const auto on_sphere = [&](double t, const Eigen::Vector3d& b) {
    Eigen::Vector3d v = (1.0 - t) * apex + t * b;
    const double len = v.norm();
    return len < 1e-14 ? b : Eigen::Vector3d(v / len);
  };
  const auto triangle = [&](const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                            const Eigen::Vector3d& c) {
    Eigen::Vector3d m = (a + b + c) / 3.0;
    const double len = m.norm();
    if (len < 1e-14) return 0.0;
    m /= len;
    return 0.5 * form_on_sphere(m, b - a, c - a, spec, hbar);
  };

  const int strips = radial_subdivisions;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < rim.size(); ++k) {
    const Eigen::Vector3d& b0 = rim[k];
    const Eigen::Vector3d& b1 = rim[k + 1];
    for (int l = 0; l < strips; ++l) {
      const double t0 = static_cast<double>(l) / strips;
      const double t1 = static_cast<double>(l + 1) / strips;
      const Eigen::Vector3d u0 = on_sphere(t0, b0);
      const Eigen::Vector3d v0 = on_sphere(t0, b1);
      const Eigen::Vector3d u1 = on_sphere(t1, b0);
      const Eigen::Vector3d v1 = on_sphere(t1, b1);
      if (l == 0) {
        total += triangle(apex, u1, v1);
      } else {
        total += triangle(u0, v0, v1);
        total += triangle(u0, v1, u1);
      }
    }
  }
  return berry_calibration(hbar) * total;
}

double deformed_phase_correction(std::span<const ChartPoint> loop,
                                 const DeformationSpec& spec,
                                 int radial_subdivisions) {
  return surface_phase(loop, spec, radial_subdivisions) -
         surface_phase(loop, DeformationSpec::none(), radial_subdivisions);
}

std::vector<StateVector> latitude_loop_states(double colatitude, int segments,
                                              double hbar) {
  if (segments < 3) {
    throw std::invalid_argument("latitude_loop_states: need >= 3 segments");
  }
  std::vector<StateVector> loop;
  loop.reserve(segments);
  for (int k = 0; k < segments; ++k) {
    loop.push_back(
        spin_coherent_state(colatitude, 2.0 * M_PI * k / segments, hbar));
  }
  return loop;
}

std::vector<ChartPoint> latitude_loop_points(double colatitude, int segments,
                                             double hbar) {
  const std::vector<StateVector> states =
      latitude_loop_states(colatitude, segments, hbar);
  std::vector<ChartPoint> points;
  points.reserve(states.size() + 1);
  for (const StateVector& psi : states) points.push_back(project(psi));
  points.push_back(points.front());
  return points;
}

}  // namespace gqm
