#pragma once

// Command implementations behind the `scwt` executable.  Each command takes a
// filled config, writes its files and returns the process exit status:
// 0 ok, 1 input or configuration error, 2 verification failure.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <scwt/scwt.hpp>

namespace scwt::cli {

/// Inclusive axis written `min:max:count`.
struct Axis {
  double min = 0.0;
  double max = 0.0;
  Eigen::Index count = 0;

  Eigen::VectorXd values() const { return linspace(min, max, count); }
};

/// Throws InvalidArgument ("empty axis") unless max > min and count >= 2.
Axis parse_axis(const std::string& text);

/// Either a synthetic harmonic (`harmonic:<omega>`) or a signal CSV path.
struct SignalSource {
  std::optional<double> omega;
  std::string input_path;

  bool empty() const { return !omega && input_path.empty(); }
};

SignalSource parse_signal_spec(const std::string& text);
Signal load_signal(const SignalSource& source);

struct TransformConfig {
  SignalSource source;
  Method method = Method::PvSplit;
  Axis a;
  Axis b;
  QuadratureSpec quad;
  std::string out = "transform.csv";
  std::string heatmap;
};

struct PropagateConfig {
  SignalSource source;
  std::string line_in1;
  std::string line_in2;
  std::string line_out1;
  std::string line_out2;
  LineSegmentSpec line{2.0, 0.0, 1.0, 2.0, 201};
  Eigen::Index na = 32;
  Eigen::Index nb = 32;
  std::string component = "both";
  bool simplified = false;
  PathRule rule = PathRule::Simpson;
  bool check = false;
  std::string check_out;
  QuadratureSpec quad;
  double h_b = 1e-3;
  std::string out = "propagate.csv";
  std::string heatmap;
};

struct VerifyConfig {
  std::string out = "verify.json";
  double omega = 1.0;
  double h = 1e-3;
  int probes = 20;
  std::uint64_t seed = 1;
  double probe_a_min = 1.0;
  double probe_a_max = 4.0;
  double probe_b_min = -2.0;
  double probe_b_max = 2.0;
  double impulse_t0 = 12.0;
  double tol_kernel = 1e-2;
  double tol_field = 1e-3;
  double min_order_ratio = 3.0;
  double quad_factor = 10.0;
  double inject_error = 0.0;
  Eigen::Index targets_a = 64;
  Eigen::Index targets_b = 64;
  int ld_nodes = 201;
  bool timing = false;
  QuadratureSpec quad;
};

int cmd_transform(const TransformConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_propagate(const PropagateConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand first) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scwt::cli
