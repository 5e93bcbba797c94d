#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "scwt/direct_transform.hpp"
#include "scwt/types.hpp"

namespace scwt {

using FieldEval = std::function<Complex(double a, double b)>;

struct ResidualReport {
  double max_abs = 0.0;
  double mean_abs = 0.0;
  double h = 0.0;
  int n_points = 0;
};

/// |u_ab + (R/a) u_a| at each probe, with the 4-point cross stencil for the
/// mixed derivative and a 2-point central difference for u_a.
ResidualReport residual_hyperbolic(const FieldEval& field, Complex R, const std::vector<ScaleShiftPoint>& probes,
                                   double h);

/// |v_ab - (R/a) v_a + (R/a^2) v|: the formal adjoint of the operator above,
/// which the Riemann function solves.
ResidualReport residual_conjugate(const FieldEval& field, Complex R, const std::vector<ScaleShiftPoint>& probes,
                                  double h);

/// Sum of |stencil weights| of the residual operator at scale a, i.e. how
/// much a pointwise error eps in the field can move the residual.
double residual_amplification(Complex R, double a, double h);

struct FieldDiff {
  double max_abs_diff = 0.0;
  double rms_diff = 0.0;
  long n_compared = 0;
};

/// Statistics of f.w - g.w over nodes evaluated (and finite) in both.
FieldDiff compare_fields(const TransformField& f, const TransformField& g);

struct OpCountReport {
  std::uint64_t direct_ops = 0;
  std::uint64_t propagation_ops = 0;
  std::uint64_t targets = 0;
  std::uint64_t nodes_per_point = 0;
  std::uint64_t path_nodes = 0;
};

/// Node-evaluation cost model: direct = targets * nodes_per_point;
/// propagation = 3 * ld_nodes * nodes_per_point + targets * ld_nodes (the
/// path quadrature never uses more nodes than the line lattice).
OpCountReport op_count_compare(std::uint64_t targets, const QuadratureSpec& q, std::uint64_t ld_nodes);

}  // namespace scwt
