#ifndef BNZERO_REPORT_FORMAT_HPP
#define BNZERO_REPORT_FORMAT_HPP

#include <string>
#include <vector>

#include "bnzero/types.hpp"

namespace bnzero {

// Command-line complex literal: "a+bi" / "a-bi" with no spaces; a plain real
// is accepted too. Throws std::invalid_argument on malformed input.
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

// %.17g, the fixed float formatting used in CSV output.
std::string format_double(double x);

// Minimal self-contained SVG line plot: x linear, y = log10(radius), with
// vertical gridlines at the detected radius minima.
struct SvgSeries {
  std::vector<double> x;
  std::vector<double> y;  // raw radii; log-scaled by the writer
};
std::string render_radius_svg(const SvgSeries& series, const std::string& x_label,
                              const std::string& y_label);

// Local minima of y strictly below 0.2x the median (the dips of a scan).
std::vector<size_t> radius_minima(const std::vector<double>& y);

}  // namespace bnzero

#endif
