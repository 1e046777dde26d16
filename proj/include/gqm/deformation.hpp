// Deformed symplectic forms omega_G = omega + delta_omega and their
// admissibility diagnostics (closure residual, smallest singular value).

#pragma once

#include <functional>
#include <variant>

#include "gqm/projective.hpp"
#include "gqm/types.hpp"

namespace gqm {

struct NoDeformation {};

// delta_omega = epsilon * R * omega; admissible iff 1 + epsilon*R != 0.
struct ScalarCurvatureDeformation {
  double epsilon = 0.0;
  double curvature = 0.0;
};

// delta_omega = epsilon * Theta with Theta a constant closed 2-form.  The
// matrix is given in the chart with `reference_pivot`; in other charts it is
// pulled back through the chart transition so the 2-form is what stays fixed.
struct ConstantTorsionDeformation {
  double epsilon = 0.0;
  RMatrix theta;
  int reference_pivot = 0;
};

// delta_omega = epsilon * theta_at(p), evaluated in the chart of the queried
// point.  Admissibility (closure, non-degeneracy) is the caller's hypothesis
// and is checked, not assumed, by the verification suite.
struct CustomFieldDeformation {
  double epsilon = 0.0;
  std::function<RMatrix(const ChartPoint&)> theta_at;
};

class DeformationSpec {
 public:
  using Variant = std::variant<NoDeformation, ScalarCurvatureDeformation,
                               ConstantTorsionDeformation,
                               CustomFieldDeformation>;

  static DeformationSpec none();
  /// Throws AdmissibilityError when |1 + epsilon*R| < 1e-6.
  static DeformationSpec scalar_curvature(double epsilon, double curvature);
  /// Throws std::invalid_argument unless theta is antisymmetric.
  static DeformationSpec constant_torsion(double epsilon, RMatrix theta,
                                          int reference_pivot = 0);
  static DeformationSpec custom_field(
      double epsilon, std::function<RMatrix(const ChartPoint&)> theta_at);

  const Variant& value() const { return v_; }
  bool is_none() const { return std::holds_alternative<NoDeformation>(v_); }
  bool is_scalar_curvature() const {
    return std::holds_alternative<ScalarCurvatureDeformation>(v_);
  }
  bool is_constant_torsion() const {
    return std::holds_alternative<ConstantTorsionDeformation>(v_);
  }
  bool is_custom_field() const {
    return std::holds_alternative<CustomFieldDeformation>(v_);
  }
  double epsilon() const;

 private:
  explicit DeformationSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// The deformation term delta_omega alone, in the chart of p.
RMatrix delta_omega_at(const ChartPoint& p, const DeformationSpec& spec);

/// omega_G = omega + delta_omega at p.
RMatrix deformed_form_at(const ChartPoint& p, const DeformationSpec& spec);

/// Max over index triples a<b<c of the centered finite-difference exterior
/// derivative  d_a w_bc + d_b w_ca + d_c w_ab  of omega_G.  Zero for charts
/// of real dimension < 3.  Admissible specs decay as O(step^2).
double closure_residual(const DeformationSpec& spec, const ChartPoint& p,
                        double step);

/// Smallest singular value of omega_G at p (non-degeneracy margin).
double smallest_singular_value(const ChartPoint& p,
                               const DeformationSpec& spec);

}  // namespace gqm
