#include "hoopsnet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hoopsnet/csv.hpp"
#include "hoopsnet/error.hpp"

namespace hoopsnet {

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) { return csv::format_double(v, 6); }

}  // namespace

void write_bar_chart_svg(std::ostream& os, std::string_view title,
                         std::span<const std::string> categories, std::span<const double> values,
                         std::string_view y_label, std::string_view meta) {
  if (categories.size() != values.size() || values.empty()) {
    throw ValidationError("write_bar_chart_svg: categories and values must match and be nonempty");
  }
  const double width = 900.0, height = 480.0;
  const double left = 70.0, right = 20.0, top = 50.0, bottom = 60.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double lo = 0.0, hi = 0.0;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == lo) hi = lo + 1.0;
  const double span = hi - lo;
  auto y_of = [&](double v) { return top + (hi - v) / span * plot_h; };

  const double slot = plot_w / static_cast<double>(values.size());
  const double bar_w = slot * 0.8;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (!meta.empty()) os << "<!-- " << xml_escape(meta) << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  os << "  <rect width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" fill=\"white\"/>\n";
  os << "  <text x=\"" << num(width / 2) << "\" y=\"28\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"16\">"
     << xml_escape(title) << "</text>\n";
  os << "  <text x=\"16\" y=\"" << num(top + plot_h / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        "transform=\"rotate(-90 16 "
     << num(top + plot_h / 2) << ")\">" << xml_escape(y_label) << "</text>\n";

  // Axis frame and zero line.
  os << "  <line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
     << "\" y2=\"" << num(top + plot_h) << "\" stroke=\"black\"/>\n";
  const double zero_y = y_of(0.0);
  os << "  <line x1=\"" << num(left) << "\" y1=\"" << num(zero_y) << "\" x2=\""
     << num(left + plot_w) << "\" y2=\"" << num(zero_y) << "\" stroke=\"black\"/>\n";
  os << "  <text x=\"" << num(left - 6) << "\" y=\"" << num(top + 4)
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(hi)
     << "</text>\n";
  os << "  <text x=\"" << num(left - 6) << "\" y=\"" << num(top + plot_h + 4)
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(lo)
     << "</text>\n";

  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    const double x = left + slot * static_cast<double>(i) + (slot - bar_w) / 2.0;
    const double y = v >= 0.0 ? y_of(v) : zero_y;
    const double h = std::abs(y_of(0.0) - y_of(v));
    os << "  <rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(bar_w)
       << "\" height=\"" << num(h) << "\" fill=\"" << (v >= 0.0 ? "#2c7fb8" : "#d95f0e")
       << "\"/>\n";
    // Category labels; thin out when crowded.
    if (values.size() <= 40 || i % (values.size() / 40 + 1) == 0) {
      os << "  <text x=\"" << num(x + bar_w / 2) << "\" y=\"" << num(top + plot_h + 16)
         << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
         << xml_escape(categories[i]) << "</text>\n";
    }
  }
  os << "</svg>\n";
}

}  // namespace hoopsnet
