#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

namespace scwt::cli {

namespace {

using nlohmann::json;

constexpr double pi = std::numbers::pi;

/// Files written so far by one command; removed again if the command fails.
class OutputGuard {
 public:
  ~OutputGuard() {
    if (committed_) return;
    for (const auto& path : paths_) {
      std::error_code ec;
      std::filesystem::remove(path, ec);
    }
  }
  void add(const std::string& path) { paths_.push_back(path); }
  void commit() { committed_ = true; }

 private:
  std::vector<std::string> paths_;
  bool committed_ = false;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::Io, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write failed for " + path);
}

std::string node_label(double a, double b) {
  return "node (a=" + format_double(a) + ", b=" + format_double(b) + ")";
}

void fail_on_node_errors(const TransformField& field) {
  if (field.errors.empty()) return;
  const NodeError& e = field.errors.front();
  std::string msg = node_label(field.a_values[e.i], field.b_values[e.j]) + ": " + e.message;
  if (field.errors.size() > 1) msg += " (" + std::to_string(field.errors.size() - 1) + " more failing nodes)";
  throw Error(ErrorKind::InvalidArgument, msg);
}

json quad_json(const QuadratureSpec& q) {
  return {{"halfwidth_xi", q.halfwidth_xi},
          {"nodes_per_unit_xi", q.nodes_per_unit_xi},
          {"pv_exclusion_pairs", q.pv_exclusion_pairs},
          {"taper_fraction", q.taper_fraction}};
}

json residual_json(const ResidualReport& r, double tolerance, bool pass) {
  return {{"max_abs", r.max_abs}, {"mean_abs", r.mean_abs}, {"h", r.h},
          {"n_points", r.n_points}, {"tolerance", tolerance}, {"pass", pass}};
}

std::vector<WaveletComponentd> components_of(const std::string& which) {
  if (which == "both") return {WaveletComponentd::first(), WaveletComponentd::second()};
  if (which == "1") return {WaveletComponentd::first()};
  if (which == "2") return {WaveletComponentd::second()};
  throw Error(ErrorKind::InvalidArgument, "component must be both, 1 or 2");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

Axis parse_axis(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
    throw Error(ErrorKind::InvalidArgument, "axis '" + text + "' must be written min:max:count");
  Axis axis;
  axis.min = parse_double(text.substr(0, first));
  axis.max = parse_double(text.substr(first + 1, second - first - 1));
  const double count = parse_double(text.substr(second + 1));
  if (count != std::floor(count)) throw Error(ErrorKind::InvalidArgument, "axis count must be an integer");
  axis.count = static_cast<Eigen::Index>(count);
  if (!(axis.max > axis.min) || axis.count < 2)
    throw Error(ErrorKind::InvalidArgument, "empty axis '" + text + "': need max > min and count >= 2");
  return axis;
}

SignalSource parse_signal_spec(const std::string& text) {
  constexpr std::string_view prefix = "harmonic:";
  if (text.rfind(prefix, 0) != 0)
    throw Error(ErrorKind::InvalidArgument, "signal '" + text + "' must be harmonic:<omega>");
  SignalSource s;
  s.omega = parse_double(text.substr(prefix.size()));
  return s;
}

Signal load_signal(const SignalSource& source) {
  if (source.omega) return Signal::harmonic(*source.omega);
  if (source.input_path.empty()) throw Error(ErrorKind::InvalidArgument, "no signal given (--signal or --input)");
  return read_signal_csv(source.input_path);
}

int cmd_transform(const TransformConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    OutputGuard guard;
    const Signal signal = load_signal(cfg.source);
    const TransformField field = evaluate_grid(cfg.method, signal, cfg.a.values(), cfg.b.values(), cfg.quad);
    fail_on_node_errors(field);

    guard.add(cfg.out);
    write_field_csv(cfg.out, field);
    if (!cfg.heatmap.empty()) {
      guard.add(cfg.heatmap);
      write_heatmap_ppm(cfg.heatmap, field);
    }
    guard.commit();

    const auto flagged = field.near_edge.count();
    out << "wrote " << field.rows() * field.cols() << " rows to " << cfg.out << '\n';
    if (flagged > 0) out << flagged << " nodes lie within the band-edge margin; closed forms jump there\n";
    return 0;
  });
}

int cmd_propagate(const PropagateConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    OutputGuard guard;
    const auto comps = components_of(cfg.component);
    std::optional<Signal> signal;
    if (!cfg.source.empty()) signal = load_signal(cfg.source);

    std::vector<LineData> lines;
    for (const auto& c : comps) {
      const std::string& in = c.index() == 1 ? cfg.line_in1 : cfg.line_in2;
      if (!in.empty()) {
        LineData ld = read_line_data_csv(in);
        if (ld.component.index() != c.index())
          throw Error(ErrorKind::InconsistentLineData, in + " holds component " + std::to_string(ld.component.index()));
        lines.push_back(std::move(ld));
      } else if (cfg.source.omega) {
        lines.push_back(harmonic_line_data(*cfg.source.omega, cfg.line, c));
      } else if (signal) {
        lines.push_back(build_line_data(cfg.line, c, direct_line_source(c, *signal, cfg.quad, cfg.h_b)));
      } else {
        throw Error(ErrorKind::InvalidArgument, "component " + std::to_string(c.index()) +
                                                    " needs --signal, --input or --line-data-in" +
                                                    std::to_string(c.index()));
      }
    }
    const LineSegmentSpec& spec = lines.front().spec;

    TransformField field;
    if (cfg.simplified) {
      Eigen::VectorXd b(1);
      b << spec.intercept;
      field = TransformField::empty_like(linspace(spec.a_min, spec.a_max, cfg.na), b);
      field.has_w1 = field.has_w2 = false;
      for (const auto& ld : lines) (ld.component.index() == 1 ? field.has_w1 : field.has_w2) = true;
      field.has_w = field.has_w1 && field.has_w2;
      for (Eigen::Index i = 0; i < field.rows(); ++i) {
        const ScaleShiftPoint m{field.a_values[i], spec.intercept};
        if (!(m.a > 0.0)) continue;
        for (const auto& ld : lines) {
          const Complex u = propagate_simplified(ld, m, cfg.rule);
          (ld.component.index() == 1 ? field.w1 : field.w2)(i, 0) = u;
        }
        if (field.has_w) field.w(i, 0) = field.w1(i, 0) - field.w2(i, 0);
        field.evaluated(i, 0) = true;
      }
    } else if (lines.size() == 2) {
      field = fill_triangle(lines[0], lines[1], cfg.na, cfg.nb, cfg.rule);
    } else {
      field = fill_triangle(lines[0], cfg.na, cfg.nb, cfg.rule);
    }
    fail_on_node_errors(field);

    json check;
    if (cfg.check) {
      if (!signal) throw Error(ErrorKind::InvalidArgument, "--check needs --signal or --input");
      const QuadratureRule rule(cfg.quad);
      TransformField direct = TransformField::empty_like(field.a_values, field.b_values);
      TransformField propagated = direct;
      for (Eigen::Index i = 0; i < field.rows(); ++i)
        for (Eigen::Index j = 0; j < field.cols(); ++j) {
          if (!field.evaluated(i, j)) continue;
          const ScaleShiftPoint p{field.a_values[i], field.b_values[j]};
          Complex value(0.0, 0.0);
          Complex reference(0.0, 0.0);
          for (const auto& ld : lines) {
            const double sign = ld.component.index() == 1 ? 1.0 : -1.0;
            value += sign * (ld.component.index() == 1 ? field.w1 : field.w2)(i, j);
            reference += sign * cwt_component_pv(ld.component, *signal, p, rule);
          }
          propagated.w(i, j) = value;
          direct.w(i, j) = reference;
          propagated.evaluated(i, j) = direct.evaluated(i, j) = true;
        }
      const FieldDiff d = compare_fields(propagated, direct);
      check = {{"max_abs_diff", d.max_abs_diff}, {"rms_diff", d.rms_diff}, {"n_compared", d.n_compared},
               {"compared", field.has_w ? "w" : (field.has_w1 ? "w1" : "w2")}};
      out << "check against direct evaluation: max_abs_diff=" << format_double(d.max_abs_diff)
          << " rms_diff=" << format_double(d.rms_diff) << " nodes=" << d.n_compared << '\n';
    }

    guard.add(cfg.out);
    write_field_csv(cfg.out, field, true);
    if (!cfg.heatmap.empty()) {
      guard.add(cfg.heatmap);
      write_heatmap_ppm(cfg.heatmap, field);
    }
    for (const auto& ld : lines) {
      const std::string& path = ld.component.index() == 1 ? cfg.line_out1 : cfg.line_out2;
      if (path.empty()) continue;
      guard.add(path);
      write_line_data_csv(path, ld);
    }
    if (cfg.check && !cfg.check_out.empty()) {
      guard.add(cfg.check_out);
      write_text(cfg.check_out, check.dump(2) + "\n");
    }
    guard.commit();
    out << "wrote " << field.evaluated.count() << " propagated nodes (" << field.rows() * field.cols()
        << " rows) to " << cfg.out << '\n';
    return 0;
  });
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    OutputGuard guard;
    if (cfg.probes < 1) throw Error(ErrorKind::InvalidArgument, "need at least one probe");
    if (!(cfg.probe_a_min > 2 * cfg.h) || !(cfg.probe_a_max > cfg.probe_a_min) ||
        !(cfg.probe_b_max > cfg.probe_b_min))
      throw Error(ErrorKind::InvalidArgument, "probe box must have a_max > a_min > 2h and b_max > b_min");
    if (!(cfg.impulse_t0 > cfg.probe_b_max + 2 * cfg.h) && !(cfg.impulse_t0 < cfg.probe_b_min - 2 * cfg.h))
      throw Error(ErrorKind::InvalidArgument, "impulse position must lie outside the probe b range");
    cfg.quad.validate();

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> ua(cfg.probe_a_min, cfg.probe_a_max);
    std::uniform_real_distribution<double> ub(cfg.probe_b_min, cfg.probe_b_max);
    std::vector<ScaleShiftPoint> probes;
    for (int i = 0; i < cfg.probes; ++i) probes.push_back({ua(rng), ub(rng)});

    const double inject = cfg.inject_error;
    auto corrupt = [inject](const FieldEval& f) -> FieldEval {
      if (inject == 0.0) return f;
      return [f, inject](double a, double b) { return f(a, b) + inject * a * b; };
    };

    json residuals = json::object();
    json boundary = json::object();
    std::vector<std::string> failed;
    const ScaleShiftPoint target{0.5 * (cfg.probe_a_min + cfg.probe_a_max), 0.5 * (cfg.probe_b_min + cfg.probe_b_max)};

    for (const auto& c : {WaveletComponentd::first(), WaveletComponentd::second()}) {
      const std::string tag = "component" + std::to_string(c.index());
      const Complex R = c.R();

      // Riemann function against its adjoint equation, plus the h-halving ratio.
      const RiemannKernel<double> kr = kernel_for(c, target);
      const FieldEval v = corrupt([kr](double a, double b) { return kernel_value(kr, a, b); });
      const ResidualReport kr_h = residual_conjugate(v, R, probes, cfg.h);
      const ResidualReport kr_h2 = residual_conjugate(v, R, probes, cfg.h / 2);
      const double ratio = kr_h2.max_abs > 0.0 ? kr_h.max_abs / kr_h2.max_abs : INFINITY;
      const bool kernel_ok = kr_h.max_abs < cfg.tol_kernel;
      const bool order_ok = ratio >= cfg.min_order_ratio;
      residuals["kernel_adjoint_" + tag] = residual_json(kr_h, cfg.tol_kernel, kernel_ok);
      residuals["kernel_adjoint_" + tag]["half_step_max_abs"] = kr_h2.max_abs;
      residuals["kernel_adjoint_" + tag]["order_ratio"] = std::isfinite(ratio) ? json(ratio) : json(nullptr);
      residuals["kernel_adjoint_" + tag]["order_ratio_min"] = cfg.min_order_ratio;
      residuals["kernel_adjoint_" + tag]["order_pass"] = order_ok;
      if (!kernel_ok) failed.push_back("kernel_adjoint_" + tag);
      if (!order_ok) failed.push_back("kernel_adjoint_order_" + tag);

      // Manufactured solution: transform of an impulse.
      const double t0 = cfg.impulse_t0;
      const FieldEval u = corrupt([c, t0](double a, double b) { return impulse_component(c, t0, {a, b}).u; });
      const ResidualReport imp = residual_hyperbolic(u, R, probes, cfg.h);
      const ResidualReport imp2 = residual_hyperbolic(u, R, probes, cfg.h / 2);
      const double imp_ratio = imp2.max_abs > 0.0 ? imp.max_abs / imp2.max_abs : INFINITY;
      const bool imp_ok = imp.max_abs < cfg.tol_field && imp_ratio >= cfg.min_order_ratio;
      residuals["impulse_field_" + tag] = residual_json(imp, cfg.tol_field, imp_ok);
      residuals["impulse_field_" + tag]["half_step_max_abs"] = imp2.max_abs;
      residuals["impulse_field_" + tag]["order_ratio"] = std::isfinite(imp_ratio) ? json(imp_ratio) : json(nullptr);
      if (!imp_ok) failed.push_back("impulse_field_" + tag);

      // Boundary values of the Riemann function: 1 on b = b0, exponential on a = a0.
      double on_mq = 0.0;
      double on_mp = 0.0;
      for (const auto& p : probes) {
        on_mq = std::max(on_mq, std::abs(v(p.a, target.b) - 1.0));
        const Complex vp = v(target.a, p.b);
        const Complex expected = std::exp(R * (p.b - target.b) / target.a);
        on_mp = std::max(on_mp, std::abs(vp - expected));
      }
      const double at_m = std::abs(v(target.a, target.b) - 1.0);
      const double mp_tol = 1e-12;
      boundary["kernel_on_b_eq_b0_" + tag] = {{"max_abs", on_mq}, {"tolerance", 0.0}, {"pass", on_mq == 0.0}};
      boundary["kernel_at_target_" + tag] = {{"abs", at_m}, {"tolerance", 0.0}, {"pass", at_m == 0.0}};
      boundary["kernel_on_a_eq_a0_" + tag] = {{"max_abs", on_mp}, {"tolerance", mp_tol}, {"pass", on_mp <= mp_tol}};
      if (on_mq != 0.0) failed.push_back("kernel_on_b_eq_b0_" + tag);
      if (at_m != 0.0) failed.push_back("kernel_at_target_" + tag);
      if (on_mp > mp_tol) failed.push_back("kernel_on_a_eq_a0_" + tag);
    }

    // Quadrature-computed first component of exp(i omega t): its residual may
    // not exceed what the observed quadrature error can produce through the
    // stencil, times a safety factor.
    {
      const auto c1 = WaveletComponentd::first();
      const Signal signal = Signal::harmonic(cfg.omega);
      const QuadratureRule rule(cfg.quad);
      const HarmonicCase hc{cfg.omega, c1};
      const FieldEval w1 = corrupt([&](double a, double b) { return cwt_component_pv(c1, signal, {a, b}, rule); });
      std::vector<ScaleShiftPoint> usable;
      for (const auto& p : probes)
        if (!near_band_edge(c1, cfg.omega, p.a - cfg.h) && !near_band_edge(c1, cfg.omega, p.a + cfg.h) &&
            !near_band_edge(c1, cfg.omega, p.a))
          usable.push_back(p);
      if (usable.empty()) throw Error(ErrorKind::InvalidArgument, "every probe sits at a band edge of omega");
      const ResidualReport r = residual_hyperbolic(w1, c1.R(), usable, cfg.h);
      double bound = 0.0;
      double quad_err = 0.0;
      for (const auto& p : usable) {
        double local = 0.0;
        for (double da : {-cfg.h, 0.0, cfg.h})
          for (double db : {-cfg.h, 0.0, cfg.h}) {
            const ScaleShiftPoint s{p.a + da, p.b + db};
            local = std::max(local, std::abs(cwt_component_pv(c1, signal, s, rule) - harmonic_component(hc, s)));
          }
        quad_err = std::max(quad_err, local);
        bound = std::max(bound, cfg.quad_factor * local * residual_amplification(c1.R(), p.a, cfg.h));
      }
      const bool ok = r.max_abs <= bound;
      residuals["quadrature_w1"] = residual_json(r, bound, ok);
      residuals["quadrature_w1"]["observed_quadrature_error"] = quad_err;
      residuals["quadrature_w1"]["omega"] = cfg.omega;
      if (!ok) failed.push_back("quadrature_w1");
    }

    const auto targets = static_cast<std::uint64_t>(cfg.targets_a * cfg.targets_b);
    const OpCountReport ops = op_count_compare(targets, cfg.quad, static_cast<std::uint64_t>(cfg.ld_nodes));
    const bool cheaper = ops.propagation_ops < ops.direct_ops;
    json op_counts = {{"targets", ops.targets},
                      {"nodes_per_point", ops.nodes_per_point},
                      {"path_nodes", ops.path_nodes},
                      {"direct_ops", ops.direct_ops},
                      {"propagation_ops", ops.propagation_ops},
                      {"propagation_cheaper", cheaper}};
    if (!cheaper) failed.push_back("op_counts");

    json report;
    report["config"] = {{"omega", cfg.omega},
                        {"h", cfg.h},
                        {"probes", cfg.probes},
                        {"seed", cfg.seed},
                        {"probe_a", {cfg.probe_a_min, cfg.probe_a_max}},
                        {"probe_b", {cfg.probe_b_min, cfg.probe_b_max}},
                        {"kernel_target", {target.a, target.b}},
                        {"impulse_t0", cfg.impulse_t0},
                        {"tol_kernel", cfg.tol_kernel},
                        {"tol_field", cfg.tol_field},
                        {"min_order_ratio", cfg.min_order_ratio},
                        {"quad_factor", cfg.quad_factor},
                        {"inject_error", cfg.inject_error},
                        {"targets", {cfg.targets_a, cfg.targets_b}},
                        {"ld_nodes", cfg.ld_nodes},
                        {"quadrature", quad_json(cfg.quad)}};
    report["residuals"] = residuals;
    report["boundary_checks"] = boundary;
    report["op_counts"] = op_counts;

    if (cfg.timing) {
      // Wall-clock on a small triangle; supplementary to the node counts.
      using clock = std::chrono::steady_clock;
      const LineSegmentSpec spec{2.0, 0.0, 1.0, 2.0, cfg.ld_nodes};
      const Signal signal = Signal::harmonic(cfg.omega);
      const auto t_direct = clock::now();
      const auto grid = evaluate_grid(Method::PvSplit, signal, linspace(1.0, 2.0, 16), linspace(-4.0, -2.0, 16), cfg.quad);
      const auto t_prop = clock::now();
      const auto c1 = WaveletComponentd::first();
      const auto c2 = WaveletComponentd::second();
      const auto ld1 = build_line_data(spec, c1, direct_line_source(c1, signal, cfg.quad));
      const auto ld2 = build_line_data(spec, c2, direct_line_source(c2, signal, cfg.quad));
      const auto filled = fill_triangle(ld1, ld2, 16, 16);
      const auto t_end = clock::now();
      const std::chrono::duration<double> direct_s = t_prop - t_direct;
      const std::chrono::duration<double> prop_s = t_end - t_prop;
      report["timing"] = {{"grid", {16, 16}},
                          {"direct_seconds", direct_s.count()},
                          {"propagation_seconds", prop_s.count()},
                          {"propagated_nodes", filled.evaluated.count()},
                          {"direct_nodes", grid.evaluated.count()}};
    }

    report["pass"] = failed.empty();
    report["failed"] = failed;
    guard.add(cfg.out);
    write_text(cfg.out, report.dump(2) + "\n");
    guard.commit();

    if (!failed.empty()) {
      for (const auto& name : failed) err << "check failed: " << name << '\n';
      return 2;
    }
    out << "all checks passed; report in " << cfg.out << '\n';
    return 0;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous wavelet transform with the complex Shannon wavelet: direct evaluation, "
               "Riemann propagation and residual checks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto add_quad = [](CLI::App* sub, QuadratureSpec& q) {
    sub->add_option("--halfwidth", q.halfwidth_xi, "Quadrature half-window in xi")->capture_default_str();
    sub->add_option("--density", q.nodes_per_unit_xi, "Quadrature nodes per unit xi")->capture_default_str();
    sub->add_option("--pv-pairs", q.pv_exclusion_pairs, "Node pairs around the pole combined symmetrically")
        ->capture_default_str();
    sub->add_option("--taper", q.taper_fraction, "Fraction of the window under the cosine roll-off")
        ->capture_default_str();
  };

  // transform
  TransformConfig tcfg;
  std::string t_signal, t_method = "pv-split", t_a, t_b;
  auto* transform = app.add_subcommand("transform", "Evaluate W(a,b) on a grid");
  transform->add_option("--signal", t_signal, "harmonic:<omega>");
  transform->add_option("--input", tcfg.source.input_path, "Signal CSV with header t,re,im");
  transform->add_option("--method", t_method, "direct | pv-split | fourier")->capture_default_str();
  transform->add_option("--a", t_a, "Scale axis min:max:count (inclusive)")->required();
  transform->add_option("--b", t_b, "Shift axis min:max:count (inclusive)")->required();
  transform->add_option("--out", tcfg.out, "Field CSV")->capture_default_str();
  transform->add_option("--heatmap", tcfg.heatmap, "PPM image of |w|");
  add_quad(transform, tcfg.quad);

  // propagate
  PropagateConfig pcfg;
  std::string p_signal, p_rule = "simpson";
  auto* propagate = app.add_subcommand("propagate", "Fill the determinacy triangle from line data");
  propagate->add_option("--signal", p_signal, "harmonic:<omega> (closed-form line data)");
  propagate->add_option("--input", pcfg.source.input_path, "Signal CSV; line data by direct evaluation");
  propagate->add_option("--line-data-in1", pcfg.line_in1, "Line data CSV for the first component");
  propagate->add_option("--line-data-in2", pcfg.line_in2, "Line data CSV for the second component");
  propagate->add_option("--line-data-out1", pcfg.line_out1, "Write first-component line data");
  propagate->add_option("--line-data-out2", pcfg.line_out2, "Write second-component line data");
  propagate->add_option("--k", pcfg.line.k, "Segment slope: b = c - k a")->capture_default_str();
  propagate->add_option("--c", pcfg.line.intercept, "Segment intercept")->capture_default_str();
  propagate->add_option("--a-min", pcfg.line.a_min, "Segment start")->capture_default_str();
  propagate->add_option("--a-max", pcfg.line.a_max, "Segment end")->capture_default_str();
  propagate->add_option("--nodes", pcfg.line.n_nodes, "Line data nodes")->capture_default_str();
  propagate->add_option("--na", pcfg.na, "Output scale nodes")->capture_default_str();
  propagate->add_option("--nb", pcfg.nb, "Output shift nodes")->capture_default_str();
  propagate->add_option("--component", pcfg.component, "both | 1 | 2")->capture_default_str();
  propagate->add_flag("--simplified", pcfg.simplified, "Use the k = 2n formula on the row b = c");
  propagate->add_option("--rule", p_rule, "simpson | trapezoid")->capture_default_str();
  propagate->add_flag("--check", pcfg.check, "Compare against direct evaluation at the propagated nodes");
  propagate->add_option("--check-out", pcfg.check_out, "JSON file for the --check statistics");
  propagate->add_option("--h-b", pcfg.h_b, "Difference step for u_b from sampled input")->capture_default_str();
  propagate->add_option("--out", pcfg.out, "Field CSV with an inside column")->capture_default_str();
  propagate->add_option("--heatmap", pcfg.heatmap, "PPM image of |w|");
  add_quad(propagate, pcfg.quad);

  // verify
  VerifyConfig vcfg;
  auto* verify = app.add_subcommand("verify", "Residual, boundary and cost checks; JSON report");
  verify->add_option("--out", vcfg.out, "JSON report")->capture_default_str();
  verify->add_option("--omega", vcfg.omega, "Harmonic frequency for the quadrature check")->capture_default_str();
  verify->add_option("--step", vcfg.h, "Difference step h")->capture_default_str();
  verify->add_option("--probes", vcfg.probes, "Number of random probes")->capture_default_str();
  verify->add_option("--seed", vcfg.seed, "Probe seed")->capture_default_str();
  verify->add_option("--probe-a-min", vcfg.probe_a_min)->capture_default_str();
  verify->add_option("--probe-a-max", vcfg.probe_a_max)->capture_default_str();
  verify->add_option("--probe-b-min", vcfg.probe_b_min)->capture_default_str();
  verify->add_option("--probe-b-max", vcfg.probe_b_max)->capture_default_str();
  verify->add_option("--impulse-t0", vcfg.impulse_t0, "Impulse position for the manufactured field")
      ->capture_default_str();
  verify->add_option("--tol-kernel", vcfg.tol_kernel, "Riemann-function adjoint residual limit")
      ->capture_default_str();
  verify->add_option("--tol-field", vcfg.tol_field, "Manufactured-field residual limit")->capture_default_str();
  verify->add_option("--min-order-ratio", vcfg.min_order_ratio, "Required residual(h)/residual(h/2)")
      ->capture_default_str();
  verify->add_option("--quad-factor", vcfg.quad_factor, "Safety factor on the quadrature-error bound")
      ->capture_default_str();
  verify->add_option("--inject-error", vcfg.inject_error, "Add this multiple of a*b to every checked field")
      ->capture_default_str();
  verify->add_option("--targets-a", vcfg.targets_a, "Cost model grid rows")->capture_default_str();
  verify->add_option("--targets-b", vcfg.targets_b, "Cost model grid columns")->capture_default_str();
  verify->add_option("--ld-nodes", vcfg.ld_nodes, "Cost model line nodes")->capture_default_str();
  verify->add_flag("--timing", vcfg.timing, "Add wall-clock timings to the report");
  add_quad(verify, vcfg.quad);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (transform->parsed()) {
    return guarded(err, [&] {
      if (!t_signal.empty()) tcfg.source.omega = parse_signal_spec(t_signal).omega;
      if (tcfg.source.empty()) throw Error(ErrorKind::InvalidArgument, "give --signal or --input");
      if (tcfg.source.omega && !tcfg.source.input_path.empty())
        throw Error(ErrorKind::InvalidArgument, "--signal and --input are exclusive");
      if (t_method == "direct") tcfg.method = Method::DirectTime;
      else if (t_method == "pv-split") tcfg.method = Method::PvSplit;
      else if (t_method == "fourier") tcfg.method = Method::Fourier;
      else throw Error(ErrorKind::InvalidArgument, "unknown method '" + t_method + "'");
      tcfg.a = parse_axis(t_a);
      tcfg.b = parse_axis(t_b);
      return cmd_transform(tcfg, out, err);
    });
  }
  if (propagate->parsed()) {
    return guarded(err, [&] {
      if (!p_signal.empty()) pcfg.source.omega = parse_signal_spec(p_signal).omega;
      if (pcfg.source.omega && !pcfg.source.input_path.empty())
        throw Error(ErrorKind::InvalidArgument, "--signal and --input are exclusive");
      if (p_rule == "simpson") pcfg.rule = PathRule::Simpson;
      else if (p_rule == "trapezoid") pcfg.rule = PathRule::Trapezoid;
      else throw Error(ErrorKind::InvalidArgument, "unknown rule '" + p_rule + "'");
      return cmd_propagate(pcfg, out, err);
    });
  }
  return cmd_verify(vcfg, out, err);
}

}  // namespace scwt::cli
