#include "gqm/deformation.hpp"

#include <cmath>
#include <vector>

namespace gqm {

namespace {

void require_antisymmetric(const RMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  if ((m + m.transpose()).cwiseAbs().maxCoeff() > kHermitianTolerance * scale) {
    throw std::invalid_argument(std::string(what) +
                                ": matrix must be antisymmetric");
  }
}

}  // namespace

DeformationSpec DeformationSpec::none() {
  return DeformationSpec(Variant(NoDeformation{}));
}

DeformationSpec DeformationSpec::scalar_curvature(double epsilon,
                                                  double curvature) {
  if (std::abs(1.0 + epsilon * curvature) < 1e-6) {
    throw AdmissibilityError(
        "scalar curvature deformation: 1 + epsilon*R vanishes, violating the "
        "hypothesis of Lemma (Admissibility of the Constant Curvature "
        "Deformation)");
  }
  return DeformationSpec(Variant(ScalarCurvatureDeformation{epsilon, curvature}));
}

DeformationSpec DeformationSpec::constant_torsion(double epsilon, RMatrix theta,
                                                  int reference_pivot) {
  require_antisymmetric(theta, "constant torsion deformation");
  return DeformationSpec(Variant(
      ConstantTorsionDeformation{epsilon, std::move(theta), reference_pivot}));
}

DeformationSpec DeformationSpec::custom_field(
    double epsilon, std::function<RMatrix(const ChartPoint&)> theta_at) {
  if (!theta_at) {
    throw std::invalid_argument("custom field deformation: null field");
  }
  return DeformationSpec(Variant(CustomFieldDeformation{epsilon, std::move(theta_at)}));
}

double DeformationSpec::epsilon() const {
  return std::visit(
      [](const auto& d) -> double {
        if constexpr (std::is_same_v<std::decay_t<decltype(d)>, NoDeformation>) {
          return 0.0;
        } else {
          return d.epsilon;
        }
      },
      v_);
}

RMatrix delta_omega_at(const ChartPoint& p, const DeformationSpec& spec) {
  const int d = p.chart_dim();
  if (spec.is_none()) return RMatrix::Zero(d, d);

  if (const auto* sc = std::get_if<ScalarCurvatureDeformation>(&spec.value())) {
    return (sc->epsilon * sc->curvature) * kahler_at(p).omega;
  }
  if (const auto* ct = std::get_if<ConstantTorsionDeformation>(&spec.value())) {
    if (ct->theta.rows() != d) {
      throw std::invalid_argument("constant torsion: theta has wrong size");
    }
    if (p.pivot() == ct->reference_pivot) {
      return ct->epsilon * ct->theta;
    }
    // Pull the 2-form back through the transition into the reference chart.
    const RMatrix jac = chart_transition_jacobian(p, ct->reference_pivot);
    return ct->epsilon * (jac.transpose() * ct->theta * jac);
  }
  const auto& cf = std::get<CustomFieldDeformation>(spec.value());
  RMatrix theta = cf.theta_at(p);
  if (theta.rows() != d || theta.cols() != d) {
    throw std::invalid_argument("custom field: theta has wrong size");
  }
  require_antisymmetric(theta, "custom field deformation");
  return cf.epsilon * theta;
}

RMatrix deformed_form_at(const ChartPoint& p, const DeformationSpec& spec) {
  if (spec.is_none()) return kahler_at(p).omega;
  if (const auto* sc = std::get_if<ScalarCurvatureDeformation>(&spec.value())) {
    return (1.0 + sc->epsilon * sc->curvature) * kahler_at(p).omega;
  }
  return kahler_at(p).omega + delta_omega_at(p, spec);
}

double closure_residual(const DeformationSpec& spec, const ChartPoint& p,
                        double step) {
  if (step < 1e-6 || step > 1e-2) {
    throw std::invalid_argument("closure_residual: step outside [1e-6, 1e-2]");
  }
  const int d = p.chart_dim();
  if (d < 3) return 0.0;

  // d(omega_G)_abc via centered differences of each entry.
  std::vector<RMatrix> deriv(d);  // deriv[a](b, c) ~ d_a (omega_G)_bc
  for (int a = 0; a < d; ++a) {
    RVector plus = p.coords();
    RVector minus = p.coords();
    plus[a] += step;
    minus[a] -= step;
    deriv[a] = (deformed_form_at(p.with_coords(plus), spec) -
                deformed_form_at(p.with_coords(minus), spec)) /
               (2.0 * step);
  }
  double worst = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      for (int c = b + 1; c < d; ++c) {
        const double total =
            deriv[a](b, c) + deriv[b](c, a) + deriv[c](a, b);
        worst = std::max(worst, std::abs(total));
      }
    }
  }
  return worst;
}

double smallest_singular_value(const ChartPoint& p,
                               const DeformationSpec& spec) {
  const RMatrix omega_g = deformed_form_at(p, spec);
  Eigen::JacobiSVD<RMatrix> svd(omega_g);
  return svd.singularValues().minCoeff();
}

}  // namespace gqm
