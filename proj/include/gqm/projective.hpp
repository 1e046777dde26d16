// Affine-chart representation of the projective space CP^{n-1} and numerical
// evaluation of the Kahler triple (g, omega, J) at a point.
//
// Chart convention: pivot index p with |psi_p| maximal; coordinates are
// (Re z_j, Im z_j) for z_j = psi_j / psi_p, j != p in increasing order.

#pragma once

#include "gqm/hilbert.hpp"
#include "gqm/types.hpp"

namespace gqm {

// Trajectories leave a chart once any |z_j| exceeds this.
inline constexpr double kPivotSwitchThreshold = 10.0;

class ChartPoint {
 public:
  ChartPoint(int pivot, RVector coords, int dim, double hbar);

  int pivot() const { return pivot_; }
  const RVector& coords() const { return coords_; }
  int dim() const { return dim_; }                    // Hilbert dimension n
  int chart_dim() const { return 2 * (dim_ - 1); }    // real dimension of CP^{n-1}
  double hbar() const { return hbar_; }

  /// Largest |z_j| of the affine coordinates.
  double max_coordinate_modulus() const;

  ChartPoint with_coords(RVector coords) const {
    return ChartPoint(pivot_, std::move(coords), dim_, hbar_);
  }

 private:
  int pivot_;
  int dim_;
  double hbar_;
  RVector coords_;
};

/// A tangent vector in the chart of its base point.  The pivot tag must
/// match the base point whenever the two are paired.
struct TangentVector {
  int pivot = 0;
  RVector components;
};

struct KahlerData {
  RMatrix g;      // Fubini-Study metric, symmetric positive definite
  RMatrix omega;  // symplectic form, antisymmetric
  RMatrix j;      // complex structure, J^2 = -I
};

/// Pivot chosen for a representative: argmax_j |psi_j|, ties to lowest index.
int preferred_pivot(const StateVector& psi);

/// Natural projection H \ {0} -> CP^{n-1} in the argmax chart.
ChartPoint project(const StateVector& psi);

/// Chart section: psi_pivot = 1, psi_j = z_j.
StateVector embed(const ChartPoint& p);

/// Kahler triple at p.  Built from the horizontal lifts h_a of the chart
/// basis directions:
///   g_ab     = 2 hbar Re<h_a|h_b> / <psi|psi>
///   omega_ab = 2 hbar Im<h_a|h_b> / <psi|psi>
/// and J is multiplication by i realized per complex coordinate.
KahlerData kahler_at(const ChartPoint& p);

/// Differential of x -> <psi(x)|H|psi(x)> / <psi(x)|psi(x)> in chart
/// coordinates (analytic, not finite differences).
RVector expectation_differential(const ChartPoint& p,
                                 const HermitianOperator& op);

/// Re-expresses p in the chart with the given pivot.  Throws NumericalError
/// if the ray has (numerically) no component along new_pivot.
ChartPoint rechart(const ChartPoint& p, int new_pivot);

/// Jacobian d(new coords)/d(old coords) of the chart transition at p.
/// Identity when new_pivot == p.pivot().
RMatrix chart_transition_jacobian(const ChartPoint& p, int new_pivot);

/// Euclidean distance of chart coordinates after expressing `other` in the
/// chart of `ref`.
double chart_distance(const ChartPoint& ref, const ChartPoint& other);

}  // namespace gqm
