#include "scwt/types.hpp"

#include <cmath>
#include <limits>

namespace scwt {

void validate(const ScaleShiftPoint& p) {
  if (!(p.a > 0.0) || !std::isfinite(p.a)) throw Error(ErrorKind::InvalidScale, "scale a must be positive and finite");
  if (!std::isfinite(p.b)) throw Error(ErrorKind::InvalidArgument, "shift b must be finite");
}

void QuadratureSpec::validate() const {
  if (!(halfwidth_xi > 0.0) || !std::isfinite(halfwidth_xi))
    throw Error(ErrorKind::InvalidArgument, "halfwidth_xi must be positive");
  if (nodes_per_unit_xi < 2) throw Error(ErrorKind::InvalidArgument, "nodes_per_unit_xi must be at least 2");
  if (pv_exclusion_pairs < 1) throw Error(ErrorKind::InvalidArgument, "pv_exclusion_pairs must be positive");
  if (!(taper_fraction >= 0.0 && taper_fraction < 1.0))
    throw Error(ErrorKind::InvalidArgument, "taper_fraction must lie in [0, 1)");
}

long QuadratureSpec::half_nodes() const {
  return static_cast<long>(std::lround(halfwidth_xi * nodes_per_unit_xi));
}

Complex Sampled::at(double t) const {
  const double x = (t - t0) / dt;
  const auto n = values.size();
  if (x < 0.0 || x > static_cast<double>(n - 1)) return {0.0, 0.0};
  auto i = static_cast<Eigen::Index>(std::floor(x));
  if (i >= n - 1) return values[n - 1];
  const double frac = x - static_cast<double>(i);
  return values[i] + frac * (values[i + 1] - values[i]);
}

Signal Signal::harmonic(double omega) {
  if (!std::isfinite(omega)) throw Error(ErrorKind::InvalidArgument, "harmonic frequency must be finite");
  return Signal(Harmonic{omega});
}

Signal Signal::sampled(double t0, double dt, Eigen::VectorXcd values) {
  if (!std::isfinite(t0)) throw Error(ErrorKind::InvalidArgument, "sample origin must be finite");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorKind::Spacing, "sample step must be positive");
  if (values.size() == 0) throw Error(ErrorKind::InvalidArgument, "sampled signal needs at least one value");
  if (!values.allFinite()) throw Error(ErrorKind::InvalidArgument, "sampled signal contains non-finite values");
  return Signal(Sampled{t0, dt, std::move(values)});
}

Complex Signal::operator()(double t) const {
  if (const auto* h = std::get_if<Harmonic>(&kind_)) return std::polar(1.0, h->omega * t);
  return std::get<Sampled>(kind_).at(t);
}

bool Signal::overlaps(double lo, double hi) const {
  if (is_harmonic()) return true;
  const auto& s = as_sampled();
  return hi >= s.t0 && lo <= s.t_end();
}

TransformField TransformField::empty_like(const Eigen::VectorXd& a_values, const Eigen::VectorXd& b_values) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  TransformField f;
  f.a_values = a_values;
  f.b_values = b_values;
  f.w = Eigen::MatrixXcd::Constant(a_values.size(), b_values.size(), Complex(nan, nan));
  f.w1 = f.w;
  f.w2 = f.w;
  f.evaluated.setConstant(a_values.size(), b_values.size(), false);
  f.near_edge.setConstant(a_values.size(), b_values.size(), false);
  return f;
}

void TransformField::mark_failed(Eigen::Index i, Eigen::Index j, std::string message) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  w(i, j) = w1(i, j) = w2(i, j) = Complex(nan, nan);
  evaluated(i, j) = false;
  errors.push_back({i, j, std::move(message)});
}

void validate_axes(const Eigen::VectorXd& a_values, const Eigen::VectorXd& b_values) {
  if (a_values.size() == 0 || b_values.size() == 0) throw Error(ErrorKind::Shape, "empty axis");
  if (!a_values.allFinite() || !b_values.allFinite()) throw Error(ErrorKind::Shape, "non-finite axis value");
  if (a_values.minCoeff() <= 0.0) throw Error(ErrorKind::InvalidScale, "scale axis must be positive");
  for (Eigen::Index i = 1; i < a_values.size(); ++i)
    if (!(a_values[i] > a_values[i - 1])) throw Error(ErrorKind::Shape, "scale axis must be strictly ascending");
  for (Eigen::Index j = 1; j < b_values.size(); ++j)
    if (!(b_values[j] > b_values[j - 1])) throw Error(ErrorKind::Shape, "shift axis must be strictly ascending");
}

Eigen::VectorXd linspace(double lo, double hi, Eigen::Index count) {
  if (count < 1) throw Error(ErrorKind::Shape, "empty axis");
  Eigen::VectorXd v(count);
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (Eigen::Index i = 0; i < count; ++i) v[i] = lo + step * static_cast<double>(i);
  v[count - 1] = hi;
  return v;
}

}  // namespace scwt
