#pragma once

// Closed-form transforms of f(t) = exp(i w t).  Each split component is
// +-exp(i w b) / (2 pi), the sign flipping where w crosses -m/a (m = 3 pi or
// pi); the full transform is exp(i w b) / pi inside spectrum_band(a) and 0
// outside.  The a-derivative vanishes away from the thresholds.

#include "scwt/riemann.hpp"
#include "scwt/types.hpp"
#include "scwt/wavelet.hpp"

namespace scwt {

struct HarmonicCase {
  double omega;
  WaveletComponentd component;
};

/// +1 or -1 on either side of the threshold w = -m/a; throws OnThreshold at it.
int harmonic_branch(const HarmonicCase& hc, double a);

Complex harmonic_component(const HarmonicCase& hc, ScaleShiftPoint p);
Complex harmonic_partial_b(const HarmonicCase& hc, ScaleShiftPoint p);
Complex harmonic_partial_a(const HarmonicCase& hc, ScaleShiftPoint p);
Complex harmonic_full(double omega, ScaleShiftPoint p);

/// Line data from the closed forms.  A node at a = 0 takes the a -> 0+ limit
/// (first branch).  Throws BranchCrossing when a threshold falls on the
/// segment.
LineData harmonic_line_data(double omega, const LineSegmentSpec& spec, const WaveletComponentd& c);

/// Transform of the impulse f(t) = delta(t - t0) for one component,
/// -(i / 2 pi^2) exp(i m (t0 - b)/a) / (t0 - b), with its two partials.  It
/// solves the component equation with genuine (a, b) dependence and is used
/// as a manufactured solution in residual and propagation checks.
LineSample impulse_component(const WaveletComponentd& c, double t0, ScaleShiftPoint p);

}  // namespace scwt
