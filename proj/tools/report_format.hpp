#pragma once

#include <iosfwd>
#include <string>

#include "bsppcc/gof_test.hpp"
#include "bsppcc/plot_corr.hpp"

namespace bsppcc::cli {

/// "<0.005" or ">0.5" for bounds, "0.4418" (four decimals) for points.
std::string p_value_text(const PValue& p);

/// GofReport as a JSON object: r (six decimals), n, p_value (number or
/// bound string, plus numeric p_value_bound for bounds), decisions[],
/// table_meta.
std::string report_json(const GofReport& report);

/// GofReport as aligned text.
std::string report_text(const GofReport& report);

/// Plot points as CSV: header `i,p,u,v`, p at six decimals, u and v at
/// shortest round-trip precision. Deterministic byte-for-byte.
void write_plot_csv(std::ostream& out, std::span<const PlotPoint> points);

/// Minimal SVG scatter of (u, v) with the least-squares line.
void write_plot_svg(std::ostream& out, std::span<const PlotPoint> points);

}  // namespace bsppcc::cli
