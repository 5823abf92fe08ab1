#include "bnzero/report_format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bnzero {

Complex parse_complex(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty complex literal");
  const bool has_i = text.back() == 'i' || text.back() == 'I';
  std::string body = has_i ? text.substr(0, text.size() - 1) : text;
  if (body.empty()) throw std::invalid_argument("malformed complex literal: " + text);

  // split at the last top-level sign that is not an exponent sign
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }

  auto to_double = [&](const std::string& s) {
    if (s.empty() || s == "+" ) return 1.0;
    if (s == "-") return -1.0;
    size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed complex literal: " + text);
    }
    if (pos != s.size()) throw std::invalid_argument("malformed complex literal: " + text);
    return v;
  };

  if (!has_i) {
    return Complex(to_double(body), 0.0);
  }
  if (split == std::string::npos) {
    return Complex(0.0, to_double(body));  // pure imaginary, e.g. "50i"
  }
  return Complex(to_double(body.substr(0, split)), to_double(body.substr(split)));
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag())) out += "+";
  out += format_double(z.imag());
  out += "i";
  return out;
}

std::vector<size_t> radius_minima(const std::vector<double>& y) {
  std::vector<size_t> out;
  if (y.size() < 3) return out;
  std::vector<double> sorted(y);
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  const double level = 0.2 * median;
  for (size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] <= y[i - 1] && y[i] < y[i + 1] && y[i] < level) out.push_back(i);
  }
  return out;
}

std::string render_radius_svg(const SvgSeries& series, const std::string& x_label,
                              const std::string& y_label) {
  const int W = 900, H = 480, ML = 70, MR = 20, MT = 20, MB = 50;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  svg << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

  if (!series.x.empty()) {
    double xmin = series.x.front(), xmax = series.x.back();
    if (xmax <= xmin) xmax = xmin + 1.0;
    double ymin = 0.0, ymax = 1.0;
    bool first = true;
    std::vector<double> logy(series.y.size());
    for (size_t i = 0; i < series.y.size(); ++i) {
      logy[i] = std::log10(std::max(series.y[i], 1e-300));
      if (first) {
        ymin = ymax = logy[i];
        first = false;
      } else {
        ymin = std::min(ymin, logy[i]);
        ymax = std::max(ymax, logy[i]);
      }
    }
    if (ymax <= ymin) ymax = ymin + 1.0;
    auto px = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto py = [&](double ly) { return H - MB - (ly - ymin) / (ymax - ymin) * (H - MT - MB); };

    // gridlines at the radius dips
    for (size_t idx : radius_minima(series.y)) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%d\" stroke=\"#cc3333\" "
                    "stroke-dasharray=\"4,3\"/>\n",
                    px(series.x[idx]), MT, px(series.x[idx]), H - MB);
      svg << buf;
      std::snprintf(buf, sizeof(buf),
                    "<text x=\"%.2f\" y=\"%d\" font-size=\"11\" fill=\"#cc3333\" "
                    "text-anchor=\"middle\">t=%.3f</text>\n",
                    px(series.x[idx]), MT + 12, series.x[idx]);
      svg << buf;
    }

    svg << "<polyline fill=\"none\" stroke=\"#2255aa\" stroke-width=\"1.2\" points=\"";
    for (size_t i = 0; i < series.x.size(); ++i) {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(series.x[i]), py(logy[i]));
      svg << buf;
    }
    svg << "\"/>\n";

    // axes
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n"
                  "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n",
                  ML, H - MB, W - MR, H - MB, ML, MT, ML, H - MB);
    svg << buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-size=\"13\">%s</text>\n"
                  "<text x=\"%d\" y=\"%d\" font-size=\"13\" transform=\"rotate(-90 15 %d)\">%s</text>\n",
                  (W - ML) / 2, H - 12, x_label.c_str(), 15, (H + MT) / 2, (H + MT) / 2,
                  y_label.c_str());
    svg << buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-size=\"11\">%.3g</text>"
                  "<text x=\"%d\" y=\"%d\" font-size=\"11\" text-anchor=\"end\">%.3g</text>\n",
                  ML, H - MB + 16, xmin, W - MR, H - MB + 16, xmax);
    svg << buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-size=\"11\" text-anchor=\"end\">1e%.1f</text>"
                  "<text x=\"%d\" y=\"%d\" font-size=\"11\" text-anchor=\"end\">1e%.1f</text>\n",
                  ML - 4, H - MB, ymin, ML - 4, MT + 10, ymax);
    svg << buf;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bnzero
