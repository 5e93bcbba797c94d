#include "scwt/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "parallel.hpp"

namespace scwt {

namespace {

// Relative slack for geometric membership tests on the (a, b) plane.
constexpr double kGeomTol = 1e-10;

double geom_tol(const LineSegmentSpec& spec) {
  return kGeomTol * std::max({1.0, std::abs(spec.intercept), spec.k * spec.a_max});
}

/// Value of `values` at abscissa s using Lagrange interpolation over at most
/// `order` lattice nodes, all taken from [lo, hi].
Complex interpolate(const LineSegmentSpec& spec, const Eigen::VectorXcd& values, double s, int lo, int hi,
                    int order) {
  const double h = spec.spacing();
  const double x = (s - spec.a_min) / h;
  const int nearest = static_cast<int>(std::lround(x));
  if (nearest >= lo && nearest <= hi && std::abs(x - nearest) <= 1e-9) return values[nearest];

  const int available = hi - lo + 1;
  const int points = std::min(order, available);
  const int cell = std::clamp(static_cast<int>(std::floor(x)), lo, std::max(lo, hi - 1));
  const int start = std::clamp(cell - (points / 2 - 1), lo, hi - points + 1);

  Complex result(0.0, 0.0);
  for (int m = start; m < start + points; ++m) {
    double weight = 1.0;
    for (int l = start; l < start + points; ++l)
      if (l != m) weight *= (x - l) / static_cast<double>(m - l);
    result += weight * values[m];
  }
  return result;
}

/// Cubic Hermite value of u inside one lattice cell of [lo, hi], using the
/// derivative along the segment, u_a - k u_b, at the cell ends.
Complex hermite_u(const LineData& ld, double s, int lo, int hi) {
  const LineSegmentSpec& spec = ld.spec;
  const double h = spec.spacing();
  const double x = (s - spec.a_min) / h;
  const int nearest = static_cast<int>(std::lround(x));
  if (nearest >= lo && nearest <= hi && std::abs(x - nearest) <= 1e-9) return ld.u[nearest];
  if (hi <= lo) return ld.u[lo];
  const int i = std::clamp(static_cast<int>(std::floor(x)), lo, hi - 1);
  const double t = x - i;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const Complex d0 = h * (ld.u_a[i] - spec.k * ld.u_b[i]);
  const Complex d1 = h * (ld.u_a[i + 1] - spec.k * ld.u_b[i + 1]);
  return (2 * t3 - 3 * t2 + 1) * ld.u[i] + (t3 - 2 * t2 + t) * d0 + (-2 * t3 + 3 * t2) * ld.u[i + 1] +
         (t3 - t2) * d1;
}

struct PathGeometry {
  double a_q;
  double a_p;
  double b0;
  double b_p;
  bool degenerate;
  Dependency dependency;
};

PathGeometry locate(const LineData& ld, ScaleShiftPoint target) {
  validate(target);
  ld.validate();
  const LineSegmentSpec& s = ld.spec;
  const double tol = geom_tol(s);
  if (target.a < s.a_min - tol || target.a > s.a_max + tol)
    throw Error(ErrorKind::OutOfDeterminacy, "target (" + std::to_string(target.a) + ", " + std::to_string(target.b) +
                                                 ") lies outside the scale range of the segment");
  const double b_line = s.b_on_line(target.a);
  if (target.b < b_line - tol)
    throw Error(ErrorKind::OutOfDeterminacy, "target (" + std::to_string(target.a) + ", " + std::to_string(target.b) +
                                                 ") lies below the initial segment");
  double a_q = (s.intercept - target.b) / s.k;
  if (std::abs(s.intercept - target.b) <= tol) a_q = 0.0;
  if (a_q < s.a_min - tol / s.k)
    throw Error(ErrorKind::OutOfDeterminacy, "characteristic b = " + std::to_string(target.b) +
                                                 " meets the line at a = " + std::to_string(a_q) +
                                                 ", before the segment starts");
  PathGeometry g;
  g.a_p = std::clamp(target.a, s.a_min, s.a_max);
  g.a_q = std::clamp(a_q, s.a_min, g.a_p);
  g.b0 = target.b;
  g.b_p = b_line;
  g.degenerate = (g.a_p - g.a_q) <= 1e-12 * std::max(1.0, g.a_p);
  g.dependency = dependency_range(s, {g.a_p, target.b});
  return g;
}

/// Integrand evaluator signature: (s, b, u, u_a, u_b) -> integrand along QP
/// per unit da (db = -k da already folded in).
template <typename Integrand, typename Endpoints>
Complex integrate_path(const LineData& ld, const PathGeometry& g, PathRule rule, Integrand&& integrand,
                       Endpoints&& endpoints) {
  const LineSegmentSpec& s = ld.spec;
  const int order = rule == PathRule::Simpson ? 4 : 2;
  const int lo = g.dependency.first;
  const int hi = g.dependency.last;
  auto sample = [&](double a) {
    const Complex u = rule == PathRule::Simpson ? hermite_u(ld, a, lo, hi) : interpolate(s, ld.u, a, lo, hi, order);
    return LineSample{u, interpolate(s, ld.u_a, a, lo, hi, order),
                      interpolate(s, ld.u_b, a, lo, hi, order)};
  };

  if (g.degenerate) return sample(g.a_p).u;

  const double length = g.a_p - g.a_q;
  const double h = s.spacing();
  long m = 0;
  if (rule == PathRule::Simpson) {
    m = std::max(2L, 2L * static_cast<long>(std::ceil(length / (2.0 * h) - 1e-9)));
  } else {
    m = std::max(1L, static_cast<long>(std::ceil(length / h - 1e-9)));
  }
  const double step = length / static_cast<double>(m);

  Complex sum(0.0, 0.0);
  LineSample at_q{};
  LineSample at_p{};
  for (long i = 0; i <= m; ++i) {
    const double a = i == m ? g.a_p : g.a_q + step * static_cast<double>(i);
    const double b = i == 0 ? g.b0 : (i == m ? g.b_p : s.b_on_line(a));
    const LineSample d = sample(a);
    if (i == 0) at_q = d;
    if (i == m) at_p = d;
    double weight = 1.0;
    if (rule == PathRule::Simpson) {
      if (i != 0 && i != m) weight = (i % 2 == 1) ? 4.0 : 2.0;
    } else if (i != 0 && i != m) {
      weight = 2.0;
    }
    sum += weight * integrand(a, b, d);
  }
  const double scale = rule == PathRule::Simpson ? step / 3.0 : step / 2.0;
  return endpoints(at_q, at_p) + 0.5 * scale * sum;
}

}  // namespace

void LineSegmentSpec::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorKind::InvalidArgument, "line slope k must be positive");
  if (!std::isfinite(intercept)) throw Error(ErrorKind::InvalidArgument, "line intercept must be finite");
  if (!(a_min >= 0.0) || !std::isfinite(a_min)) throw Error(ErrorKind::InvalidArgument, "a_min must be non-negative");
  if (!(a_max > a_min) || !std::isfinite(a_max)) throw Error(ErrorKind::InvalidArgument, "a_max must exceed a_min");
  if (n_nodes < 3) throw Error(ErrorKind::InvalidArgument, "line data need at least 3 nodes");
}

double LineSegmentSpec::node(int i) const {
  if (i == n_nodes - 1) return a_max;
  return a_min + spacing() * static_cast<double>(i);
}

void LineData::validate() const {
  spec.validate();
  const auto n = static_cast<Eigen::Index>(spec.n_nodes);
  if (u.size() != n || u_a.size() != n || u_b.size() != n)
    throw Error(ErrorKind::InconsistentLineData, "line data length differs from n_nodes");
  if (!u.allFinite() || !u_a.allFinite() || !u_b.allFinite())
    throw Error(ErrorKind::InconsistentLineData, "line data contain non-finite values");
}

LineData build_line_data(const LineSegmentSpec& spec, const WaveletComponentd& c, const LineSource& source) {
  spec.validate();
  LineData ld{spec, c, Eigen::VectorXcd(spec.n_nodes), Eigen::VectorXcd(spec.n_nodes), Eigen::VectorXcd(spec.n_nodes)};
  for (int i = 0; i < spec.n_nodes; ++i) {
    const double a = spec.node(i);
    try {
      const LineSample sample = source(a, spec.b_on_line(a));
      ld.u[i] = sample.u;
      ld.u_a[i] = sample.u_a;
      ld.u_b[i] = sample.u_b;
    } catch (const Error& e) {
      throw Error(e.kind(), "line node " + std::to_string(i) + " (a = " + std::to_string(a) + "): " + e.what());
    }
  }
  ld.validate();
  return ld;
}

LineSource direct_line_source(const WaveletComponentd& c, Signal signal, const QuadratureSpec& q, double h_b) {
  auto rule = std::make_shared<const QuadratureRule>(q);
  return [c, signal = std::move(signal), rule, h_b](double a, double b) {
    const ScaleShiftPoint p{a, b};
    return LineSample{cwt_component_pv(c, signal, p, *rule), partial_a_component(c, signal, p, *rule),
                      partial_b_component(c, signal, p, *rule, h_b)};
  };
}

std::array<ScaleShiftPoint, 3> DeterminacyTriangle::vertices() const {
  const double top = spec.b_on_line(spec.a_min);
  return {ScaleShiftPoint{spec.a_min, top}, ScaleShiftPoint{spec.a_max, spec.b_on_line(spec.a_max)},
          ScaleShiftPoint{spec.a_max, top}};
}

bool DeterminacyTriangle::contains(ScaleShiftPoint p, double tol) const {
  return p.a >= spec.a_min - tol && p.a <= spec.a_max + tol && p.b >= spec.b_on_line(p.a) - tol &&
         p.b <= spec.b_on_line(spec.a_min) + tol;
}

DeterminacyTriangle triangle_of(const LineSegmentSpec& spec) {
  spec.validate();
  return {spec};
}

Dependency dependency_range(const LineSegmentSpec& spec, ScaleShiftPoint target) {
  const double h = spec.spacing();
  double a_q = (spec.intercept - target.b) / spec.k;
  a_q = std::clamp(a_q, spec.a_min, spec.a_max);
  const double a_p = std::clamp(target.a, spec.a_min, spec.a_max);
  int first = static_cast<int>(std::floor((a_q - spec.a_min) / h + 1e-9));
  int last = static_cast<int>(std::ceil((a_p - spec.a_min) / h - 1e-9));
  first = std::clamp(first, 0, spec.n_nodes - 1);
  last = std::clamp(last, first, spec.n_nodes - 1);
  return {first, last};
}

Complex propagate_general(const LineData& ld, ScaleShiftPoint target, PathRule rule) {
  const PathGeometry g = locate(ld, target);
  const auto kernel = kernel_for(ld.component, target);
  const Complex R = ld.component.R();
  const double k = ld.spec.k;

  auto integrand = [&](double a, double b, const LineSample& d) -> Complex {
    if (a == 0.0) {
      // Only reachable with b0 = intercept: the 1/a terms cancel and v = exp(-Rk).
      return std::exp(-R * k) * (d.u_a + k * d.u_b);
    }
    const Complex v = kernel_value(kernel, a, b);
    const auto [v_a, v_b] = kernel_partials(kernel, a, b);
    return (v * d.u_a - d.u * v_a) + k * (v * d.u_b - d.u * v_b + 2.0 * R / a * d.u * v);
  };
  // v = 1 at Q because Q lies on the characteristic b = b0.
  auto endpoints = [&](const LineSample& q, const LineSample& p) {
    const Complex v_p = kernel_value(kernel, g.a_p, g.b_p);
    return 0.5 * (p.u * v_p + q.u);
  };
  return integrate_path(ld, g, rule, integrand, endpoints);
}

Complex propagate_simplified(const LineData& ld, ScaleShiftPoint target, PathRule rule) {
  const double half = ld.spec.k / 2.0;
  const double n = std::round(half);
  if (n < 1.0 || std::abs(half - n) > 1e-12 * std::max(1.0, half))
    throw Error(ErrorKind::SimplificationInapplicable, "slope k = " + std::to_string(ld.spec.k) +
                                                           " is not an even positive integer");
  const double tol = geom_tol(ld.spec);
  if (std::abs(target.b - ld.spec.intercept) > tol)
    throw Error(ErrorKind::SimplificationInapplicable,
                "target ordinate " + std::to_string(target.b) + " differs from the line intercept " +
                    std::to_string(ld.spec.intercept));
  const PathGeometry g = locate(ld, target);
  const Complex R = ld.component.R();
  const double k = 2.0 * n;

  auto integrand = [&](double a, double, const LineSample& d) -> Complex {
    if (a == 0.0) return d.u_a + k * d.u_b;
    return (d.u_a - 2.0 * R * n / a * d.u) + k * (d.u_b + R / a * d.u);
  };
  auto endpoints = [](const LineSample& q, const LineSample& p) { return 0.5 * (p.u + q.u); };
  return integrate_path(ld, g, rule, integrand, endpoints);
}

namespace {

TransformField fill_impl(const LineData* first, const LineData* second, const LineData& reference, Eigen::Index na,
                         Eigen::Index nb, PathRule rule) {
  if (na < 2 || nb < 2) throw Error(ErrorKind::Shape, "triangle lattice needs at least 2 x 2 nodes");
  const LineSegmentSpec& s = reference.spec;
  const DeterminacyTriangle tri = triangle_of(s);
  const Eigen::VectorXd a_values = linspace(s.a_min, s.a_max, na);
  const Eigen::VectorXd b_values = linspace(s.b_on_line(s.a_max), s.b_on_line(s.a_min), nb);
  TransformField field = TransformField::empty_like(a_values, b_values);
  field.has_w1 = first != nullptr;
  field.has_w2 = second != nullptr;
  field.has_w = field.has_w1 && field.has_w2;
  const double tol = geom_tol(s);

  std::vector<std::vector<NodeError>> row_errors(static_cast<std::size_t>(na));
  detail::parallel_for(na, [&](Eigen::Index i) {
    for (Eigen::Index j = 0; j < nb; ++j) {
      const ScaleShiftPoint p{a_values[i], b_values[j]};
      if (!(p.a > 0.0) || !tri.contains(p, tol)) continue;
      try {
        if (first) field.w1(i, j) = propagate_general(*first, p, rule);
        if (second) field.w2(i, j) = propagate_general(*second, p, rule);
        if (field.has_w) field.w(i, j) = field.w1(i, j) - field.w2(i, j);
        field.evaluated(i, j) = true;
      } catch (const Error& e) {
        row_errors[static_cast<std::size_t>(i)].push_back({i, j, e.what()});
      }
    }
  });
  for (auto& errors : row_errors)
    for (auto& e : errors) field.mark_failed(e.i, e.j, std::move(e.message));
  return field;
}

}  // namespace

TransformField fill_triangle(const LineData& first, const LineData& second, Eigen::Index na, Eigen::Index nb,
                             PathRule rule) {
  first.validate();
  second.validate();
  if (!(first.spec == second.spec))
    throw Error(ErrorKind::InconsistentLineData, "both components must share the same segment");
  if (first.component.tag != Component::First || second.component.tag != Component::Second)
    throw Error(ErrorKind::InconsistentLineData, "expected first- and second-component line data");
  return fill_impl(&first, &second, first, na, nb, rule);
}

TransformField fill_triangle(const LineData& ld, Eigen::Index na, Eigen::Index nb, PathRule rule) {
  ld.validate();
  if (ld.component.tag == Component::First) return fill_impl(&ld, nullptr, ld, na, nb, rule);
  return fill_impl(nullptr, &ld, ld, na, nb, rule);
}

}  // namespace scwt
