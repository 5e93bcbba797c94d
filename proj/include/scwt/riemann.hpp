#pragma once

// Riemann-method propagation for u_ab + (R/a) u_a = 0 on the (a, b) plane.
//
// Cauchy data (u, u_a, u_b) are given on the segment b = c - k a,
// a in [a_min, a_max].  For a target M = (a0, b0) the characteristics a = a0
// and b = b0 cut the segment at P = (a0, c - k a0) and Q = ((c - b0)/k, b0),
// and
//
//   u(M) = [(uv)_P + (uv)_Q] / 2
//        + 1/2 Int_QP (v u_a - u v_a) da - (v u_b - u v_b + (2R/a) u v) db
//
// with the Riemann function v = exp(R (b - b0) / a).

#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "scwt/direct_transform.hpp"
#include "scwt/types.hpp"
#include "scwt/wavelet.hpp"

namespace scwt {

template <typename Scalar>
struct RiemannKernel {
  std::complex<Scalar> R;
  Scalar a0;
  Scalar b0;
};

template <typename Scalar>
inline std::complex<Scalar> kernel_value(const RiemannKernel<Scalar>& kr, Scalar a, Scalar b) {
  require_positive_scale(a);
  return std::exp(kr.R * (b - kr.b0) / a);
}

/// (dv/da, dv/db).
template <typename Scalar>
inline std::array<std::complex<Scalar>, 2> kernel_partials(const RiemannKernel<Scalar>& kr, Scalar a, Scalar b) {
  const std::complex<Scalar> v = kernel_value(kr, a, b);
  return {-kr.R * (b - kr.b0) / (a * a) * v, kr.R / a * v};
}

inline RiemannKernel<double> kernel_for(const WaveletComponentd& c, ScaleShiftPoint target) {
  return {c.R(), target.a, target.b};
}

struct LineSegmentSpec {
  double k;
  double intercept;
  double a_min;
  double a_max;
  int n_nodes;

  /// Throws InvalidArgument unless k > 0, 0 <= a_min < a_max and n_nodes >= 3.
  void validate() const;
  double spacing() const { return (a_max - a_min) / static_cast<double>(n_nodes - 1); }
  double node(int i) const;
  double b_on_line(double a) const { return intercept - k * a; }

  friend bool operator==(const LineSegmentSpec&, const LineSegmentSpec&) = default;
};

struct LineData {
  LineSegmentSpec spec;
  WaveletComponentd component;
  Eigen::VectorXcd u;
  Eigen::VectorXcd u_a;
  Eigen::VectorXcd u_b;

  /// Throws InconsistentLineData on length mismatch or non-finite entries.
  void validate() const;
};

struct LineSample {
  Complex u;
  Complex u_a;
  Complex u_b;
};

using LineSource = std::function<LineSample(double a, double b)>;

/// Samples `source` at the n_nodes equally spaced nodes of the segment.
LineData build_line_data(const LineSegmentSpec& spec, const WaveletComponentd& c, const LineSource& source);

/// Line source backed by the direct transform: u from cwt_component_pv, u_a
/// from partial_a_component, u_b by central difference with step h_b.
LineSource direct_line_source(const WaveletComponentd& c, Signal signal, const QuadratureSpec& q = {},
                              double h_b = 1e-3);

/// Right triangle bounded by the segment, the characteristic a = a_max and
/// the characteristic b = c - k a_min.
struct DeterminacyTriangle {
  LineSegmentSpec spec;

  std::array<ScaleShiftPoint, 3> vertices() const;
  bool contains(ScaleShiftPoint p, double tol = 1e-12) const;
};

DeterminacyTriangle triangle_of(const LineSegmentSpec& spec);

enum class PathRule {
  /// Composite Simpson on a uniform resampling of [a_Q, a0].  Between nodes,
  /// u is cubic Hermite (values plus the derivative along the segment) and
  /// u_a, u_b are cubic Lagrange, all kept inside the cells covering [a_Q, a0].
  Simpson,
  /// Composite trapezoid with linear interpolation.
  Trapezoid,
};

/// Lattice nodes the propagated value at `target` depends on.
struct Dependency {
  int first;
  int last;
};
Dependency dependency_range(const LineSegmentSpec& spec, ScaleShiftPoint target);

Complex propagate_general(const LineData& ld, ScaleShiftPoint target, PathRule rule = PathRule::Simpson);

/// Valid for k = 2n and b0 = intercept, where v is identically 1 on PQ:
///   u(M) = (u_P + u_Q)/2 + 1/2 Int_QP (u_a - (2Rn/a) u) da - (u_b + (R/a) u) db.
/// Q then sits at a = 0, so the segment must start at a_min = 0.
Complex propagate_simplified(const LineData& ld, ScaleShiftPoint target, PathRule rule = PathRule::Simpson);

/// Propagates both components over an na x nb lattice of the triangle's
/// bounding box.  Outside nodes stay NaN with evaluated = false.
TransformField fill_triangle(const LineData& first, const LineData& second, Eigen::Index na, Eigen::Index nb,
                             PathRule rule = PathRule::Simpson);

/// Single-component variant; the values land in w1 or w2 according to the
/// component, w is left unpopulated.
TransformField fill_triangle(const LineData& ld, Eigen::Index na, Eigen::Index nb,
                             PathRule rule = PathRule::Simpson);

}  // namespace scwt
