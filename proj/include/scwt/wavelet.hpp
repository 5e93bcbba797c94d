#pragma once

// Complex Shannon wavelet psi(xi) = sinc(xi) exp(-2 pi i xi) with the
// normalized sinc, its split into two singular exponential kernels, the
// amplitude norm factor and the scale-dependent frequency band.

#include <cmath>
#include <complex>
#include <numbers>

#include "scwt/error.hpp"

namespace scwt {

enum class Component { First, Second };

/// One of the two singular kernels psi = psi1 - psi2.  `modulation` is the
/// exponent coefficient (3 pi or pi) and R = i * modulation is the matching
/// coefficient of the hyperbolic equation u_ab + (R/a) u_a = 0.
template <typename Scalar>
struct WaveletComponent {
  Component tag;
  Scalar modulation;

  static constexpr WaveletComponent first() { return {Component::First, 3 * std::numbers::pi_v<Scalar>}; }
  static constexpr WaveletComponent second() { return {Component::Second, std::numbers::pi_v<Scalar>}; }
  static constexpr WaveletComponent of(Component c) { return c == Component::First ? first() : second(); }

  std::complex<Scalar> R() const { return {Scalar(0), modulation}; }
  /// Ratio modulation / pi, i.e. 3 or 1.
  Scalar multiplier() const { return tag == Component::First ? Scalar(3) : Scalar(1); }
  int index() const { return tag == Component::First ? 1 : 2; }
};

using WaveletComponentd = WaveletComponent<double>;

template <typename Scalar>
inline Scalar sinc(Scalar xi) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  if (std::abs(xi) < Scalar(1e-10)) {
    const Scalar x = pi * xi;
    return Scalar(1) - x * x / Scalar(6);
  }
  return std::sin(pi * xi) / (pi * xi);
}

template <typename Scalar>
inline std::complex<Scalar> psi(Scalar xi) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  if (xi == Scalar(0)) return {Scalar(1), Scalar(0)};
  return sinc(xi) * std::polar(Scalar(1), -2 * pi * xi);
}

/// i exp(-i modulation xi) / (2 pi xi).  The pole at xi = 0 is not removable.
template <typename Scalar>
inline std::complex<Scalar> component_value(const WaveletComponent<Scalar>& c, Scalar xi) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  if (xi == Scalar(0)) throw Error(ErrorKind::SingularArgument, "split wavelet component has a pole at xi = 0");
  const std::complex<Scalar> i(0, 1);
  return i * std::polar(Scalar(1), -c.modulation * xi) / (2 * pi * xi);
}

template <typename Scalar>
inline void require_positive_scale(Scalar a) {
  if (!(a > Scalar(0)) || !std::isfinite(a)) throw Error(ErrorKind::InvalidScale, "scale must be positive and finite");
}

/// C(a) = 1 / (pi a).
template <typename Scalar>
inline Scalar amplitude_norm(Scalar a) {
  require_positive_scale(a);
  return Scalar(1) / (std::numbers::pi_v<Scalar> * a);
}

/// Open angular-frequency interval on which a pure exponential exp(i w t)
/// has a non-zero transform at scale a.
template <typename Scalar>
struct Band {
  Scalar lo;
  Scalar hi;

  bool contains(Scalar omega) const { return omega > lo && omega < hi; }
};

template <typename Scalar>
inline Band<Scalar> spectrum_band(Scalar a) {
  require_positive_scale(a);
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  return {-3 * pi / a, -pi / a};
}

}  // namespace scwt
