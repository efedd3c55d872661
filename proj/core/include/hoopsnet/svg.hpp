#pragma once

// Byte-deterministic bar chart SVG for quantile and similarity reports.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hoopsnet {

// One bar per category; negative values hang below the zero line. `meta`
// lines become an SVG comment.
void write_bar_chart_svg(std::ostream& os, std::string_view title,
                         std::span<const std::string> categories, std::span<const double> values,
                         std::string_view y_label, std::string_view meta = {});

}  // namespace hoopsnet
