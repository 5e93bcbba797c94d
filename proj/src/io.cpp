#include "scwt/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace scwt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('\n', start);
    const auto end = pos == std::string_view::npos ? text.size() : pos;
    ++number;
    const auto line = trim(text.substr(start, end - start));
    if (!line.empty()) out.push_back({number, line});
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_at(std::string_view cell, std::size_t line) {
  try {
    return parse_double(cell);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void dump(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

/// Step that reproduces every t_i = t0 + i * dt bitwise, if one exists within
/// a few ulps of the end-to-end estimate; otherwise the estimate itself.
double recover_step(const std::vector<double>& t) {
  const auto n = t.size();
  const double estimate = (t.back() - t.front()) / static_cast<double>(n - 1);
  auto reproduces = [&](double dt) {
    for (std::size_t i = 0; i < n; ++i)
      if (t.front() + dt * static_cast<double>(i) != t[i]) return false;
    return true;
  };
  double down = estimate;
  double up = estimate;
  for (int ulp = 0; ulp <= 8; ++ulp) {
    if (reproduces(down)) return down;
    if (reproduces(up)) return up;
    down = std::nextafter(down, 0.0);
    up = std::nextafter(up, std::numeric_limits<double>::infinity());
  }
  return estimate;
}

void append_complex(std::string& out, Complex z, bool present) {
  out += ',';
  if (present) out += format_double(z.real());
  out += ',';
  if (present) out += format_double(z.imag());
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw Error(ErrorKind::Io, "cannot format number");
  return std::string(buf.data(), ptr);
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::Parse, "malformed number '" + std::string(text) + "'");
  return value;
}

Signal parse_signal_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty signal file");
  const auto header = split(lines.front().text, ',');
  if (header.size() != 3 || header[0] != "t" || header[1] != "re" || header[2] != "im")
    throw Error(ErrorKind::Parse, "line " + std::to_string(lines.front().number) + ": expected header t,re,im");
  std::vector<double> t;
  std::vector<Complex> values;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split(lines[r].text, ',');
    if (cells.size() != 3)
      throw Error(ErrorKind::Parse, "line " + std::to_string(lines[r].number) + ": expected 3 columns, got " +
                                        std::to_string(cells.size()));
    t.push_back(parse_at(cells[0], lines[r].number));
    values.emplace_back(parse_at(cells[1], lines[r].number), parse_at(cells[2], lines[r].number));
  }
  if (t.size() < 2) throw Error(ErrorKind::Parse, "a sampled signal needs at least 2 rows");
  const double first = t[1] - t[0];
  if (!(first > 0.0)) throw Error(ErrorKind::Spacing, "time stamps must increase");
  for (std::size_t i = 2; i < t.size(); ++i) {
    const double step = t[i] - t[i - 1];
    if (std::abs(step - first) > 1e-9 * first)
      throw Error(ErrorKind::Spacing, "non-uniform spacing at line " + std::to_string(lines[i + 1].number) +
                                          ": step " + format_double(step) + " vs " + format_double(first));
  }
  const double dt = recover_step(t);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Eigen::Index>(i)] = values[i];
  return Signal::sampled(t.front(), dt, std::move(v));
}

Signal read_signal_csv(const std::string& path) {
  try {
    return parse_signal_csv(slurp(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Io) throw;
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string signal_csv(const Sampled& s) {
  std::string out = "t,re,im\n";
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    out += format_double(s.t0 + s.dt * static_cast<double>(i));
    append_complex(out, s.values[i], true);
    out += '\n';
  }
  return out;
}

void write_signal_csv(const std::string& path, const Sampled& s) { dump(path, signal_csv(s)); }

std::string field_csv(const TransformField& field, bool inside_column) {
  std::string out = "a,b,w_re,w_im,w1_re,w1_im,w2_re,w2_im";
  if (inside_column) out += ",inside";
  out += '\n';
  for (Eigen::Index i = 0; i < field.rows(); ++i) {
    for (Eigen::Index j = 0; j < field.cols(); ++j) {
      const bool ok = field.evaluated(i, j);
      out += format_double(field.a_values[i]);
      out += ',';
      out += format_double(field.b_values[j]);
      append_complex(out, field.w(i, j), ok && field.has_w);
      append_complex(out, field.w1(i, j), ok && field.has_w1);
      append_complex(out, field.w2(i, j), ok && field.has_w2);
      if (inside_column) out += ok ? ",1" : ",0";
      out += '\n';
    }
  }
  return out;
}

void write_field_csv(const std::string& path, const TransformField& field, bool inside_column) {
  dump(path, field_csv(field, inside_column));
}

std::string line_data_csv(const LineData& ld) {
  ld.validate();
  const auto& s = ld.spec;
  std::string out = "# k=" + format_double(s.k) + ",intercept=" + format_double(s.intercept) +
                    ",a_min=" + format_double(s.a_min) + ",a_max=" + format_double(s.a_max) +
                    ",n_nodes=" + std::to_string(s.n_nodes) + ",component=" + std::to_string(ld.component.index()) +
                    "\n";
  out += "a,b,u_re,u_im,ua_re,ua_im,ub_re,ub_im\n";
  for (int i = 0; i < s.n_nodes; ++i) {
    const double a = s.node(i);
    out += format_double(a);
    out += ',';
    out += format_double(s.b_on_line(a));
    append_complex(out, ld.u[i], true);
    append_complex(out, ld.u_a[i], true);
    append_complex(out, ld.u_b[i], true);
    out += '\n';
  }
  return out;
}

void write_line_data_csv(const std::string& path, const LineData& ld) { dump(path, line_data_csv(ld)); }

LineData parse_line_data_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.size() < 2 || lines[0].text.substr(0, 1) != "#")
    throw Error(ErrorKind::Parse, "line data file must start with a '# k=...' metadata line");
  LineSegmentSpec spec{};
  int component = 0;
  int seen = 0;
  for (auto item : split(lines[0].text.substr(1), ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::Parse, "line 1: malformed metadata '" + std::string(item) + "'");
    const auto key = trim(item.substr(0, eq));
    const auto value = item.substr(eq + 1);
    if (key == "k") spec.k = parse_at(value, lines[0].number);
    else if (key == "intercept") spec.intercept = parse_at(value, lines[0].number);
    else if (key == "a_min") spec.a_min = parse_at(value, lines[0].number);
    else if (key == "a_max") spec.a_max = parse_at(value, lines[0].number);
    else if (key == "n_nodes") spec.n_nodes = static_cast<int>(parse_at(value, lines[0].number));
    else if (key == "component") component = static_cast<int>(parse_at(value, lines[0].number));
    else throw Error(ErrorKind::Parse, "line 1: unknown metadata key '" + std::string(key) + "'");
    ++seen;
  }
  if (seen != 6 || (component != 1 && component != 2))
    throw Error(ErrorKind::Parse, "line 1: metadata needs k, intercept, a_min, a_max, n_nodes and component 1 or 2");
  spec.validate();
  const auto header = split(lines[1].text, ',');
  const std::vector<std::string_view> expected{"a", "b", "u_re", "u_im", "ua_re", "ua_im", "ub_re", "ub_im"};
  if (header != expected)
    throw Error(ErrorKind::Parse, "line " + std::to_string(lines[1].number) + ": unexpected line data header");
  if (lines.size() - 2 != static_cast<std::size_t>(spec.n_nodes))
    throw Error(ErrorKind::InconsistentLineData, "expected " + std::to_string(spec.n_nodes) + " rows, found " +
                                                     std::to_string(lines.size() - 2));
  LineData ld{spec, WaveletComponentd::of(component == 1 ? Component::First : Component::Second),
              Eigen::VectorXcd(spec.n_nodes), Eigen::VectorXcd(spec.n_nodes), Eigen::VectorXcd(spec.n_nodes)};
  for (int i = 0; i < spec.n_nodes; ++i) {
    const auto& line = lines[static_cast<std::size_t>(i) + 2];
    const auto cells = split(line.text, ',');
    if (cells.size() != 8)
      throw Error(ErrorKind::Parse, "line " + std::to_string(line.number) + ": expected 8 columns");
    const double a = parse_at(cells[0], line.number);
    if (std::abs(a - spec.node(i)) > 1e-9 * std::max(1.0, spec.a_max))
      throw Error(ErrorKind::InconsistentLineData, "line " + std::to_string(line.number) + ": node a = " +
                                                       format_double(a) + " is off the segment lattice");
    ld.u[i] = {parse_at(cells[2], line.number), parse_at(cells[3], line.number)};
    ld.u_a[i] = {parse_at(cells[4], line.number), parse_at(cells[5], line.number)};
    ld.u_b[i] = {parse_at(cells[6], line.number), parse_at(cells[7], line.number)};
  }
  ld.validate();
  return ld;
}

LineData read_line_data_csv(const std::string& path) {
  try {
    return parse_line_data_csv(slurp(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Io) throw;
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::array<std::uint8_t, 3> heatmap_color(double t) {
  static constexpr std::array<std::array<double, 3>, 5> stops{{
      {0, 0, 0}, {0, 0, 255}, {0, 255, 255}, {255, 255, 0}, {255, 255, 255}}};
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
  const double x = t * 4.0;
  const auto seg = std::min<std::size_t>(3, static_cast<std::size_t>(x));
  const double frac = x - static_cast<double>(seg);
  std::array<std::uint8_t, 3> rgb{};
  for (std::size_t c = 0; c < 3; ++c)
    rgb[c] = static_cast<std::uint8_t>(std::lround(stops[seg][c] + frac * (stops[seg + 1][c] - stops[seg][c])));
  return rgb;
}

std::string heatmap_ppm(const TransformField& field) {
  const Eigen::MatrixXcd& values = field.has_w ? field.w : (field.has_w1 ? field.w1 : field.w2);
  const Eigen::Index rows = field.rows();
  const Eigen::Index cols = field.cols();
  double peak = 0.0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (field.evaluated(i, j) && std::isfinite(std::abs(values(i, j)))) peak = std::max(peak, std::abs(values(i, j)));

  std::string out = "P6\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(rows * cols * 3));
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::Index i = rows - 1 - r;
    for (Eigen::Index j = 0; j < cols; ++j) {
      std::array<std::uint8_t, 3> rgb{96, 96, 96};
      const double mag = std::abs(values(i, j));
      if (field.evaluated(i, j) && std::isfinite(mag)) rgb = heatmap_color(peak > 0.0 ? mag / peak : 0.0);
      out.append(reinterpret_cast<const char*>(rgb.data()), 3);
    }
  }
  return out;
}

void write_heatmap_ppm(const std::string& path, const TransformField& field) { dump(path, heatmap_ppm(field)); }

}  // namespace scwt
