#include "gqm/projective.hpp"

#include <cmath>

namespace gqm {

namespace {

// Hilbert indices in coordinate order for a chart (all j != pivot, ascending).
inline int hilbert_index(int slot, int pivot) {
  return slot < pivot ? slot : slot + 1;
}

inline int coord_slot(int hilbert_idx, int pivot) {
  return hilbert_idx < pivot ? hilbert_idx : hilbert_idx - 1;
}

// Realification of multiplication by a complex scalar.
inline void put_block(RMatrix& m, int row_pair, int col_pair, Complex c) {
  m(2 * row_pair, 2 * col_pair) = c.real();
  m(2 * row_pair, 2 * col_pair + 1) = -c.imag();
  m(2 * row_pair + 1, 2 * col_pair) = c.imag();
  m(2 * row_pair + 1, 2 * col_pair + 1) = c.real();
}

}  // namespace

ChartPoint::ChartPoint(int pivot, RVector coords, int dim, double hbar)
    : pivot_(pivot), dim_(dim), hbar_(hbar), coords_(std::move(coords)) {
  if (dim_ < 2) {
    throw std::invalid_argument("ChartPoint: Hilbert dimension must be >= 2");
  }
  if (pivot_ < 0 || pivot_ >= dim_) {
    throw std::invalid_argument("ChartPoint: pivot outside [0, n)");
  }
  if (coords_.size() != 2 * (dim_ - 1)) {
    throw std::invalid_argument("ChartPoint: coords must have length 2(n-1)");
  }
  if (!coords_.allFinite()) {
    throw std::invalid_argument("ChartPoint: coords must be finite");
  }
  if (!(hbar_ > 0.0)) {
    throw std::invalid_argument("ChartPoint: hbar must be positive");
  }
  // Hard validity cap: twice the working pivot-switch threshold, so that
  // integration steps may transiently overshoot before re-charting.
  if (max_coordinate_modulus() > 2.0 * kPivotSwitchThreshold) {
    throw std::invalid_argument("ChartPoint: coordinates exceed chart validity");
  }
}

double ChartPoint::max_coordinate_modulus() const {
  double m = 0.0;
  for (int k = 0; k + 1 < coords_.size(); k += 2) {
    m = std::max(m, std::hypot(coords_[k], coords_[k + 1]));
  }
  return m;
}

int preferred_pivot(const StateVector& psi) {
  const CVector& a = psi.amplitudes();
  int pivot = 0;
  double best = std::abs(a[0]);
  for (int j = 1; j < a.size(); ++j) {
    const double mag = std::abs(a[j]);
    if (mag > best) {
      best = mag;
      pivot = j;
    }
  }
  return pivot;
}

ChartPoint project(const StateVector& psi) {
  const CVector& a = psi.amplitudes();
  const int n = psi.dim();
  const int pivot = preferred_pivot(psi);
  const Complex p = a[pivot];
  RVector coords(2 * (n - 1));
  for (int slot = 0; slot < n - 1; ++slot) {
    const Complex z = a[hilbert_index(slot, pivot)] / p;
    coords[2 * slot] = z.real();
    coords[2 * slot + 1] = z.imag();
  }
  return ChartPoint(pivot, std::move(coords), n, psi.hbar());
}

StateVector embed(const ChartPoint& p) {
  CVector amps(p.dim());
  amps[p.pivot()] = Complex(1.0, 0.0);
  for (int slot = 0; slot < p.dim() - 1; ++slot) {
    amps[hilbert_index(slot, p.pivot())] =
        Complex(p.coords()[2 * slot], p.coords()[2 * slot + 1]);
  }
  return StateVector(std::move(amps), p.hbar());
}

KahlerData kahler_at(const ChartPoint& p) {
  const int d = p.chart_dim();
  const StateVector psi = embed(p);
  const CVector& a = psi.amplitudes();
  const double s = a.squaredNorm();
  const double f = 2.0 * p.hbar() / s;

  // Gram matrix of the horizontal lifts u_j = e_j - psi conj(psi_j)/s of the
  // holomorphic chart directions:  <u_j|u_l> = delta_jl - psi_j conj(psi_l)/s.
  KahlerData out;
  out.g = RMatrix::Zero(d, d);
  out.omega = RMatrix::Zero(d, d);
  out.j = RMatrix::Zero(d, d);
  for (int k = 0; k < p.dim() - 1; ++k) {
    const Complex pk = a[hilbert_index(k, p.pivot())];
    for (int l = 0; l < p.dim() - 1; ++l) {
      const Complex pl = a[hilbert_index(l, p.pivot())];
      Complex m = -pk * std::conj(pl) / s;
      if (k == l) m += 1.0;
      const double re = f * m.real();
      const double im = f * m.imag();
      // Lifts pair as h_{2k} = u_k, h_{2k+1} = i u_k.
      out.g(2 * k, 2 * l) = re;
      out.g(2 * k, 2 * l + 1) = -im;
      out.g(2 * k + 1, 2 * l) = im;
      out.g(2 * k + 1, 2 * l + 1) = re;
      out.omega(2 * k, 2 * l) = im;
      out.omega(2 * k, 2 * l + 1) = re;
      out.omega(2 * k + 1, 2 * l) = -re;
      out.omega(2 * k + 1, 2 * l + 1) = im;
    }
    out.j(2 * k, 2 * k + 1) = -1.0;
    out.j(2 * k + 1, 2 * k) = 1.0;
  }
  return out;
}

RVector expectation_differential(const ChartPoint& p,
                                 const HermitianOperator& op) {
  if (op.dim() != p.dim()) {
    throw std::invalid_argument("expectation_differential: dimension mismatch");
  }
  const StateVector psi = embed(p);
  const CVector& a = psi.amplitudes();
  const double s = a.squaredNorm();
  const CVector ha = op.matrix() * a;
  const double value = a.dot(ha).real() / s;

  RVector d(p.chart_dim());
  for (int slot = 0; slot < p.dim() - 1; ++slot) {
    const int j = hilbert_index(slot, p.pivot());
    const Complex resid = ha[j] - value * a[j];
    d[2 * slot] = 2.0 * resid.real() / s;
    d[2 * slot + 1] = 2.0 * resid.imag() / s;
  }
  return d;
}

ChartPoint rechart(const ChartPoint& p, int new_pivot) {
  if (new_pivot == p.pivot()) return p;
  if (new_pivot < 0 || new_pivot >= p.dim()) {
    throw std::invalid_argument("rechart: pivot outside [0, n)");
  }
  const StateVector psi = embed(p);
  const CVector& a = psi.amplitudes();
  const Complex q = a[new_pivot];
  if (std::abs(q) < kZeroNormThreshold) {
    throw NumericalError("rechart: ray has no component along requested pivot");
  }
  RVector coords(p.chart_dim());
  for (int slot = 0; slot < p.dim() - 1; ++slot) {
    const Complex w = a[hilbert_index(slot, new_pivot)] / q;
    coords[2 * slot] = w.real();
    coords[2 * slot + 1] = w.imag();
  }
  return ChartPoint(new_pivot, std::move(coords), p.dim(), p.hbar());
}

RMatrix chart_transition_jacobian(const ChartPoint& p, int new_pivot) {
  const int d = p.chart_dim();
  if (new_pivot == p.pivot()) return RMatrix::Identity(d, d);
  if (new_pivot < 0 || new_pivot >= p.dim()) {
    throw std::invalid_argument("chart_transition_jacobian: pivot out of range");
  }

  const int old_pivot = p.pivot();
  const int zq_slot = coord_slot(new_pivot, old_pivot);
  const Complex zq(p.coords()[2 * zq_slot], p.coords()[2 * zq_slot + 1]);
  if (std::abs(zq) < kZeroNormThreshold) {
    throw NumericalError("chart_transition_jacobian: transition is singular");
  }

  // Holomorphic transition: w_k = z_k / z_q for k not in {p, q}, w_p = 1/z_q.
  RMatrix jac = RMatrix::Zero(d, d);
  for (int new_slot = 0; new_slot < p.dim() - 1; ++new_slot) {
    const int k = hilbert_index(new_slot, new_pivot);
    if (k == old_pivot) {
      put_block(jac, new_slot, zq_slot, -1.0 / (zq * zq));
    } else {
      const int k_slot = coord_slot(k, old_pivot);
      const Complex zk(p.coords()[2 * k_slot], p.coords()[2 * k_slot + 1]);
      put_block(jac, new_slot, k_slot, 1.0 / zq);
      put_block(jac, new_slot, zq_slot, -zk / (zq * zq));
    }
  }
  return jac;
}

double chart_distance(const ChartPoint& ref, const ChartPoint& other) {
  if (ref.dim() != other.dim()) {
    throw std::invalid_argument("chart_distance: dimension mismatch");
  }
  if (ref.pivot() == other.pivot()) {
    return (ref.coords() - other.coords()).norm();
  }
  return (ref.coords() - rechart(other, ref.pivot()).coords()).norm();
}

}  // namespace gqm
