#include "scwt/verification.hpp"

#include <algorithm>
#include <cmath>

namespace scwt {

namespace {

struct Stencil {
  Complex center;
  Complex mixed;
  Complex d_a;
};

Stencil differentiate(const FieldEval& u, ScaleShiftPoint p, double h) {
  const double a = p.a;
  const double b = p.b;
  const Complex mixed = (u(a + h, b + h) - u(a + h, b - h) - u(a - h, b + h) + u(a - h, b - h)) / (4.0 * h * h);
  const Complex d_a = (u(a + h, b) - u(a - h, b)) / (2.0 * h);
  return {u(a, b), mixed, d_a};
}

template <typename Residual>
ResidualReport aggregate(const FieldEval& field, const std::vector<ScaleShiftPoint>& probes, double h,
                         Residual&& residual) {
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "difference step must be positive");
  ResidualReport report;
  report.h = h;
  double total = 0.0;
  for (const auto& p : probes) {
    validate(p);
    if (!(p.a > h)) throw Error(ErrorKind::InvalidArgument, "probe scale must exceed the difference step");
    const double r = std::abs(residual(differentiate(field, p, h), p.a));
    report.max_abs = std::max(report.max_abs, r);
    total += r;
    ++report.n_points;
  }
  if (report.n_points > 0) report.mean_abs = total / report.n_points;
  return report;
}

}  // namespace

ResidualReport residual_hyperbolic(const FieldEval& field, Complex R, const std::vector<ScaleShiftPoint>& probes,
                                   double h) {
  return aggregate(field, probes, h, [&](const Stencil& s, double a) { return s.mixed + R / a * s.d_a; });
}

ResidualReport residual_conjugate(const FieldEval& field, Complex R, const std::vector<ScaleShiftPoint>& probes,
                                  double h) {
  return aggregate(field, probes, h,
                   [&](const Stencil& s, double a) { return s.mixed - R / a * s.d_a + R / (a * a) * s.center; });
}

double residual_amplification(Complex R, double a, double h) {
  // Four cross-stencil weights of 1/(4h^2) and two a-difference weights of 1/(2h).
  return 1.0 / (h * h) + std::abs(R) / (a * h);
}

FieldDiff compare_fields(const TransformField& f, const TransformField& g) {
  if (f.a_values.size() != g.a_values.size() || f.b_values.size() != g.b_values.size() ||
      !f.a_values.isApprox(g.a_values, 1e-12) || !f.b_values.isApprox(g.b_values, 1e-12))
    throw Error(ErrorKind::Shape, "fields have different axes");
  FieldDiff d;
  double sum_sq = 0.0;
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    for (Eigen::Index j = 0; j < f.cols(); ++j) {
      if (!f.evaluated(i, j) || !g.evaluated(i, j)) continue;
      const Complex x = f.w(i, j);
      const Complex y = g.w(i, j);
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || !std::isfinite(y.real()) ||
          !std::isfinite(y.imag()))
        continue;
      const double diff = std::abs(x - y);
      d.max_abs_diff = std::max(d.max_abs_diff, diff);
      sum_sq += diff * diff;
      ++d.n_compared;
    }
  }
  if (d.n_compared > 0) d.rms_diff = std::sqrt(sum_sq / static_cast<double>(d.n_compared));
  return d;
}

OpCountReport op_count_compare(std::uint64_t targets, const QuadratureSpec& q, std::uint64_t ld_nodes) {
  q.validate();
  OpCountReport r;
  r.targets = targets;
  r.nodes_per_point = static_cast<std::uint64_t>(q.total_nodes());
  r.path_nodes = ld_nodes;
  r.direct_ops = targets * r.nodes_per_point;
  r.propagation_ops = 3 * ld_nodes * r.nodes_per_point + targets * ld_nodes;
  return r;
}

}  // namespace scwt
