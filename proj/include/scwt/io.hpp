#pragma once

// File formats.
//
//   signal CSV     header `t,re,im`, uniform t spacing (1e-9 relative).
//   field CSV      header `a,b,w_re,w_im,w1_re,w1_im,w2_re,w2_im` with an
//                  optional trailing `inside` column; unpopulated values are
//                  empty cells.
//   line-data CSV  one `# k=...,intercept=...,a_min=...,a_max=...,n_nodes=...,component=...`
//                  line, then header `a,b,u_re,u_im,ua_re,ua_im,ub_re,ub_im`.
//   heatmap        binary PPM (P6) of |w|; see heatmap_color.
//
// Numbers are written in the shortest decimal form that reads back to the
// same double.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "scwt/riemann.hpp"
#include "scwt/types.hpp"

namespace scwt {

std::string format_double(double x);
double parse_double(std::string_view text);

Signal read_signal_csv(const std::string& path);
Signal parse_signal_csv(std::string_view text);
std::string signal_csv(const Sampled& s);
void write_signal_csv(const std::string& path, const Sampled& s);

std::string field_csv(const TransformField& field, bool inside_column = false);
void write_field_csv(const std::string& path, const TransformField& field, bool inside_column = false);

std::string line_data_csv(const LineData& ld);
void write_line_data_csv(const std::string& path, const LineData& ld);
LineData parse_line_data_csv(std::string_view text);
LineData read_line_data_csv(const std::string& path);

/// Colour ramp for t in [0, 1]: black, blue, cyan, yellow, white at
/// t = 0, 1/4, 1/2, 3/4, 1, linear in between.
std::array<std::uint8_t, 3> heatmap_color(double t);

/// P6 image with one pixel per node; rows run from the largest scale (top) to
/// the smallest, columns follow b.  |w| is scaled by the largest evaluated
/// magnitude; nodes that were not evaluated are drawn grey (96, 96, 96).
std::string heatmap_ppm(const TransformField& field);
void write_heatmap_ppm(const std::string& path, const TransformField& field);

}  // namespace scwt
