#pragma once

// Direct evaluation of the transform W(a,b) = C(a) Int f(t) conj(psi((t-b)/a)) dt,
// of its split components W1, W2 (principal-value integrals) and of the
// a-derivative integrals, plus a frequency-domain path for sampled data.

#include <vector>

#include "scwt/types.hpp"
#include "scwt/wavelet.hpp"

namespace scwt {

enum class Method { DirectTime, PvSplit, Fourier };

/// Positive half of the symmetric node set with taper-weighted trapezoid
/// weights; built once per QuadratureSpec and shared across grid nodes.
class QuadratureRule {
 public:
  explicit QuadratureRule(const QuadratureSpec& spec);

  const QuadratureSpec& spec() const { return spec_; }
  const std::vector<double>& nodes() const { return xi_; }
  const std::vector<double>& weights() const { return weight_; }

 private:
  QuadratureSpec spec_;
  std::vector<double> xi_;
  std::vector<double> weight_;
};

Complex cwt_direct(const Signal& signal, ScaleShiftPoint p, const QuadratureRule& rule);
Complex cwt_direct(const Signal& signal, ScaleShiftPoint p, const QuadratureSpec& q = {});

/// W1 or W2 = -(i / 2 pi^2) PV Int f(t) exp(i m (t-b)/a) / (t-b) dt with
/// m the component modulation.  Nodes are paired symmetrically about the pole.
Complex cwt_component_pv(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                         const QuadratureRule& rule);
Complex cwt_component_pv(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                         const QuadratureSpec& q = {});

/// dW_c/da = -(K / 2 pi a^2) Int f(t) exp(i m (t-b)/a) dt, K = m / pi.
Complex partial_a_component(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                            const QuadratureRule& rule);
Complex partial_a_component(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                            const QuadratureSpec& q = {});

/// Central difference of cwt_component_pv in b with step h.
Complex partial_b_component(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                            const QuadratureRule& rule, double h);
Complex partial_b_component(const WaveletComponentd& c, const Signal& signal, ScaleShiftPoint p,
                            const QuadratureSpec& q, double h);

/// Frequency-domain evaluation for sampled signals: per scale, the DFT of the
/// samples is multiplied by (1/pi) times the indicator of spectrum_band(a)
/// and transformed back.  Forward transform uses exp(-2 pi i nu t), w = 2 pi nu,
/// and the data are treated as one period.  b_values must lie on the sample
/// lattice.
TransformField cwt_fourier_grid(const Signal& signal, const Eigen::VectorXd& a_values,
                                const Eigen::VectorXd& b_values);

/// Fills a field with the chosen method.  Per-node failures become NaN
/// entries plus an entry in TransformField::errors.
TransformField evaluate_grid(Method method, const Signal& signal, const Eigen::VectorXd& a_values,
                             const Eigen::VectorXd& b_values, const QuadratureSpec& q = {});

/// True when |omega a + modulation| < margin, i.e. the harmonic frequency
/// sits at a band threshold of this component where closed forms jump.
bool near_band_edge(const WaveletComponentd& c, double omega, double a, double margin = 0.05);

}  // namespace scwt
