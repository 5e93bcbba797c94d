#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "scwt/error.hpp"

namespace scwt {

using Complex = std::complex<double>;

struct ScaleShiftPoint {
  double a;
  double b;
};

/// Throws InvalidScale unless a > 0 and both coordinates are finite.
void validate(const ScaleShiftPoint& p);

/// Node layout for the time-domain integrals.  Nodes sit at
/// xi = +-(j + 1/2) / nodes_per_unit_xi for |xi| < halfwidth_xi, so no node
/// ever lands on the pole at xi = 0.
struct QuadratureSpec {
  double halfwidth_xi = 400.0;
  int nodes_per_unit_xi = 64;
  int pv_exclusion_pairs = 8;
  /// Fraction of the half-window rolled off by a raised-cosine taper; 0 is a
  /// hard truncation.
  double taper_fraction = 0.1;

  void validate() const;
  /// Number of nodes on one side of the pole.
  long half_nodes() const;
  long total_nodes() const { return 2 * half_nodes(); }
};

struct Harmonic {
  double omega;
};

/// Uniformly sampled complex data; evaluated off-lattice by linear
/// interpolation and taken as zero outside [t0, t_end()].
struct Sampled {
  double t0;
  double dt;
  Eigen::VectorXcd values;

  double t_end() const { return t0 + dt * static_cast<double>(values.size() - 1); }
  Complex at(double t) const;
};

class Signal {
 public:
  static Signal harmonic(double omega);
  static Signal sampled(double t0, double dt, Eigen::VectorXcd values);

  bool is_harmonic() const { return std::holds_alternative<Harmonic>(kind_); }
  bool is_sampled() const { return std::holds_alternative<Sampled>(kind_); }
  const Harmonic& as_harmonic() const { return std::get<Harmonic>(kind_); }
  const Sampled& as_sampled() const { return std::get<Sampled>(kind_); }

  Complex operator()(double t) const;

  /// True when [lo, hi] intersects the support (always for harmonic).
  bool overlaps(double lo, double hi) const;

 private:
  explicit Signal(std::variant<Harmonic, Sampled> kind) : kind_(std::move(kind)) {}
  std::variant<Harmonic, Sampled> kind_;
};

struct NodeError {
  Eigen::Index i;
  Eigen::Index j;
  std::string message;
};

/// Complex values over an (a, b) lattice; rows follow a_values, columns
/// b_values.  Nodes that were not evaluated hold NaN and `evaluated` false.
struct TransformField {
  Eigen::VectorXd a_values;
  Eigen::VectorXd b_values;
  Eigen::MatrixXcd w;
  Eigen::MatrixXcd w1;
  Eigen::MatrixXcd w2;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> evaluated;
  /// Set for harmonic inputs whose frequency sits within the band-edge
  /// margin at that scale; closed forms are discontinuous there.
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> near_edge;
  bool has_w = true;
  bool has_w1 = false;
  bool has_w2 = false;
  std::vector<NodeError> errors;

  static TransformField empty_like(const Eigen::VectorXd& a_values, const Eigen::VectorXd& b_values);

  Eigen::Index rows() const { return a_values.size(); }
  Eigen::Index cols() const { return b_values.size(); }
  void mark_failed(Eigen::Index i, Eigen::Index j, std::string message);
};

/// Throws Shape unless a_values is strictly ascending and positive and
/// b_values strictly ascending, both non-empty.
void validate_axes(const Eigen::VectorXd& a_values, const Eigen::VectorXd& b_values);

/// Inclusive, evenly spaced axis.
Eigen::VectorXd linspace(double lo, double hi, Eigen::Index count);

}  // namespace scwt
