#include "scwt/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace scwt {

namespace {
constexpr double pi = std::numbers::pi;
const Complex I(0.0, 1.0);
}  // namespace

int harmonic_branch(const HarmonicCase& hc, double a) {
  require_positive_scale(a);
  const double shifted = hc.omega * a + hc.component.modulation;
  if (std::abs(shifted) <= 1e-12 * hc.component.modulation)
    throw Error(ErrorKind::OnThreshold, "omega = " + std::to_string(hc.omega) + " sits on the threshold of component " +
                                            std::to_string(hc.component.index()) + " at a = " + std::to_string(a));
  return shifted > 0.0 ? 1 : -1;
}

Complex harmonic_component(const HarmonicCase& hc, ScaleShiftPoint p) {
  validate(p);
  return static_cast<double>(harmonic_branch(hc, p.a)) * std::polar(1.0, hc.omega * p.b) / (2.0 * pi);
}

Complex harmonic_partial_b(const HarmonicCase& hc, ScaleShiftPoint p) {
  return I * hc.omega * harmonic_component(hc, p);
}

Complex harmonic_partial_a(const HarmonicCase& hc, ScaleShiftPoint p) {
  validate(p);
  harmonic_branch(hc, p.a);
  return {0.0, 0.0};
}

Complex harmonic_full(double omega, ScaleShiftPoint p) {
  return harmonic_component({omega, WaveletComponentd::first()}, p) -
         harmonic_component({omega, WaveletComponentd::second()}, p);
}

LineData harmonic_line_data(double omega, const LineSegmentSpec& spec, const WaveletComponentd& c) {
  spec.validate();
  const HarmonicCase hc{omega, c};
  // Threshold scale a* = -m / w exists only for w < 0.
  if (omega < 0.0) {
    const double threshold = -c.modulation / omega;
    if (threshold >= spec.a_min && threshold <= spec.a_max)
      throw Error(ErrorKind::BranchCrossing, "component " + std::to_string(c.index()) + " threshold a = " +
                                                 std::to_string(threshold) + " lies on the segment [" +
                                                 std::to_string(spec.a_min) + ", " + std::to_string(spec.a_max) + "]");
  }
  return build_line_data(spec, c, [&](double a, double b) {
    const int branch = a == 0.0 ? 1 : harmonic_branch(hc, a);
    const Complex u = static_cast<double>(branch) * std::polar(1.0, omega * b) / (2.0 * pi);
    return LineSample{u, Complex(0.0, 0.0), I * omega * u};
  });
}

LineSample impulse_component(const WaveletComponentd& c, double t0, ScaleShiftPoint p) {
  validate(p);
  const double d = t0 - p.b;
  if (d == 0.0) throw Error(ErrorKind::SingularArgument, "impulse transform is singular at b = t0");
  const Complex amplitude = -I / (2.0 * pi * pi);
  const Complex e = std::polar(1.0, c.modulation * d / p.a);
  const Complex u = amplitude * e / d;
  const Complex u_a = amplitude * (-I * c.modulation / (p.a * p.a)) * e;
  const Complex u_b = amplitude * e * (-I * c.modulation / (p.a * d) + 1.0 / (d * d));
  return {u, u_a, u_b};
}

}  // namespace scwt
