#include "scwt/direct_transform.hpp"

#include <cmath>
#include <numbers>
#include <unsupported/Eigen/FFT>

#include "parallel.hpp"

namespace scwt {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I(0.0, 1.0);

void check_support(const Signal& signal, ScaleShiftPoint p, const QuadratureSpec& q) {
  validate(p);
  const double half = p.a * q.halfwidth_xi;
  if (!signal.overlaps(p.b - half, p.b + half))
    throw Error(ErrorKind::InsufficientSupport, "quadrature window does not meet the sample range");
}

}  // namespace

QuadratureRule::QuadratureRule(const QuadratureSpec& spec) : spec_(spec) {
  spec_.validate();
  const long n = spec_.half_nodes();
  const double step = 1.0 / spec_.nodes_per_unit_xi;
  const double flat = (1.0 - spec_.taper_fraction) * spec_.halfwidth_xi;
  const double roll = spec_.taper_fraction * spec_.halfwidth_xi;
  xi_.resize(static_cast<std::size_t>(n));
  weight_.resize(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) {
    const double xi = (static_cast<double>(j) + 0.5) * step;
    double taper = 1.0;
    if (xi > flat && roll > 0.0) taper = 0.5 * (1.0 + std::cos(pi * (xi - flat) / roll));
    xi_[static_cast<std::size_t>(j)] = xi;
    weight_[static_cast<std::size_t>(j)] = step * taper;
  }
}

Complex cwt_direct(const Signal& signal, ScaleShiftPoint p, const QuadratureRule& rule) {
  check_support(signal, p, rule.spec());
  const auto& xi = rule.nodes();
  const auto& w = rule.weights();
  Complex sum(0.0, 0.0);
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const Complex kernel = std::conj(psi(xi[j]));
    // psi(-xi) = sinc(xi) exp(+2 pi i xi), so its conjugate mirrors the kernel.
    const Complex mirrored = std::conj(kernel);
    sum += w[j] * (signal(p.b + p.a * xi[j]) * kernel + signal(p.b - p.a * xi[j]) * mirrored);
  }
  // C(a) * a from dt = a dxi.
  return sum / pi;
}

Complex cwt_direct(const Signal& signal, ScaleShiftPoint p, const QuadratureSpec& q) {
  return cwt_direct(signal, p, QuadratureRule(q));
}

Complex cwt_component_pv(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                         const QuadratureRule& rule) {
  check_support(signal, p, rule.spec());
  const auto& xi = rule.nodes();
  const auto& w = rule.weights();
  const auto paired = static_cast<std::size_t>(rule.spec().pv_exclusion_pairs);
  Complex sum(0.0, 0.0);
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const Complex phase = std::polar(1.0, c.modulation * xi[j]);
    const Complex right = signal(p.b + p.a * xi[j]) * phase;
    const Complex left = signal(p.b - p.a * xi[j]) * std::conj(phase);
    if (j < paired) {
      sum += w[j] * ((right - left) / xi[j]);
    } else {
      sum += w[j] * right / xi[j];
      sum -= w[j] * left / xi[j];
    }
  }
  return -I / (2.0 * pi * pi) * sum;
}

Complex cwt_component_pv(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                         const QuadratureSpec& q) {
  return cwt_component_pv(c, signal, p, QuadratureRule(q));
}

Complex partial_a_component(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                            const QuadratureRule& rule) {
  check_support(signal, p, rule.spec());
  const auto& xi = rule.nodes();
  const auto& w = rule.weights();
  Complex sum(0.0, 0.0);
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const Complex phase = std::polar(1.0, c.modulation * xi[j]);
    sum += w[j] * (signal(p.b + p.a * xi[j]) * phase + signal(p.b - p.a * xi[j]) * std::conj(phase));
  }
  return -c.multiplier() / (2.0 * pi * p.a) * sum;
}

Complex partial_a_component(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                            const QuadratureSpec& q) {
  return partial_a_component(c, signal, p, QuadratureRule(q));
}

Complex partial_b_component(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                            const QuadratureRule& rule, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorKind::InvalidArgument, "difference step must be positive");
  validate(p);
  const Complex up = cwt_component_pv(c, signal, {p.a, p.b + h}, rule);
  const Complex down = cwt_component_pv(c, signal, {p.a, p.b - h}, rule);
  return (up - down) / (2.0 * h);
}

Complex partial_b_component(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                            const QuadratureSpec& q, double h) {
  return partial_b_component(c, signal, p, QuadratureRule(q), h);
}

TransformField cwt_fourier_grid(const Signal& signal, const Eigen::VectorXd& a_values,
                                const Eigen::VectorXd& b_values) {
  if (!signal.is_sampled()) throw Error(ErrorKind::UnsupportedInput, "the Fourier path needs sampled data");
  validate_axes(a_values, b_values);
  const Sampled& s = signal.as_sampled();
  const auto n = static_cast<std::size_t>(s.values.size());

  std::vector<Eigen::Index> columns(static_cast<std::size_t>(b_values.size()));
  for (Eigen::Index j = 0; j < b_values.size(); ++j) {
    const double x = (b_values[j] - s.t0) / s.dt;
    const double k = std::round(x);
    if (std::abs(x - k) > 1e-9 * std::max(1.0, std::abs(x)) || k < 0.0 || k > static_cast<double>(n - 1))
      throw Error(ErrorKind::InvalidArgument, "shift " + std::to_string(b_values[j]) + " is not on the sample lattice");
    columns[static_cast<std::size_t>(j)] = static_cast<Eigen::Index>(k);
  }

  std::vector<Complex> samples(s.values.data(), s.values.data() + s.values.size());
  std::vector<Complex> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, samples);

  std::vector<double> omega(n);
  const double span = static_cast<double>(n) * s.dt;
  for (std::size_t k = 0; k < n; ++k) {
    const double bin = 2 * k < n ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
    omega[k] = 2.0 * pi * bin / span;
  }

  TransformField field = TransformField::empty_like(a_values, b_values);
  std::vector<Complex> filtered(n);
  std::vector<Complex> back;
  for (Eigen::Index i = 0; i < a_values.size(); ++i) {
    const auto band = spectrum_band(a_values[i]);
    const double tol = 1e-12 * std::abs(band.lo);
    for (std::size_t k = 0; k < n; ++k) {
      double gain = 0.0;
      if (band.contains(omega[k])) gain = 1.0;
      if (std::abs(omega[k] - band.lo) <= tol || std::abs(omega[k] - band.hi) <= tol) gain = 0.5;
      filtered[k] = spectrum[k] * (gain / pi);
    }
    fft.inv(back, filtered);
    for (Eigen::Index j = 0; j < b_values.size(); ++j) {
      field.w(i, j) = back[static_cast<std::size_t>(columns[static_cast<std::size_t>(j)])];
      field.evaluated(i, j) = true;
    }
  }
  return field;
}

TransformField evaluate_grid(Method method, const Signal& signal, const Eigen::VectorXd& a_values,
                             const Eigen::VectorXd& b_values, const QuadratureSpec& q) {
  if (method == Method::Fourier) return cwt_fourier_grid(signal, a_values, b_values);
  validate_axes(a_values, b_values);
  const QuadratureRule rule(q);
  TransformField field = TransformField::empty_like(a_values, b_values);
  field.has_w1 = field.has_w2 = method == Method::PvSplit;
  const auto c1 = WaveletComponentd::first();
  const auto c2 = WaveletComponentd::second();

  std::vector<std::vector<NodeError>> row_errors(static_cast<std::size_t>(a_values.size()));
  detail::parallel_for(a_values.size(), [&](Eigen::Index i) {
    for (Eigen::Index j = 0; j < b_values.size(); ++j) {
      const ScaleShiftPoint p{a_values[i], b_values[j]};
      try {
        if (method == Method::DirectTime) {
          field.w(i, j) = cwt_direct(signal, p, rule);
        } else {
          field.w1(i, j) = cwt_component_pv(c1, signal, p, rule);
          field.w2(i, j) = cwt_component_pv(c2, signal, p, rule);
          field.w(i, j) = field.w1(i, j) - field.w2(i, j);
        }
        field.evaluated(i, j) = true;
        if (signal.is_harmonic()) {
          const double omega = signal.as_harmonic().omega;
          field.near_edge(i, j) = near_band_edge(c1, omega, p.a) || near_band_edge(c2, omega, p.a);
        }
      } catch (const Error& e) {
        row_errors[static_cast<std::size_t>(i)].push_back({i, j, e.what()});
      }
    }
  });
  for (auto& errors : row_errors)
    for (auto& e : errors) field.mark_failed(e.i, e.j, std::move(e.message));
  return field;
}

bool near_band_edge(const WaveletComponentd& c, double omega, double a, double margin) {
  return std::abs(omega * a + c.modulation) < margin;
}

}  // namespace scwt
