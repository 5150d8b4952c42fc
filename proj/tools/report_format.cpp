#include "report_format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace bsppcc::cli {
namespace {

using json = nlohmann::ordered_json;

std::string shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

double rounded(double v, double scale) { return std::round(v * scale) / scale; }

json meta_json(const TableMeta& meta) {
  json j;
  j["source"] = meta.source;
  j["iterations"] = meta.iterations;
  j["seed"] = meta.seed;
  j["alpha_gen"] = meta.alpha_gen;
  j["generator"] = meta.generator;
  return j;
}

}  // namespace

std::string p_value_text(const PValue& p) {
  switch (p.kind) {
    case PValue::Kind::below_min:
      return "<" + shortest(p.value);
    case PValue::Kind::above_max:
      return ">" + shortest(p.value);
    case PValue::Kind::point:
      break;
  }
  return fixed(p.value, 4);
}

std::string report_json(const GofReport& report) {
  json j;
  j["r"] = rounded(report.r, 1e6);
  j["n"] = report.n;
  if (report.p_value.kind == PValue::Kind::point) {
    j["p_value"] = rounded(report.p_value.value, 1e4);
  } else {
    j["p_value"] = p_value_text(report.p_value);
    j["p_value_bound"] = report.p_value.value;
  }
  j["decisions"] = json::array();
  for (const LevelDecision& d : report.decisions) {
    json entry;
    entry["gamma"] = d.gamma;
    entry["critical"] = rounded(d.critical, 1e6);
    entry["reject"] = d.reject;
    j["decisions"].push_back(std::move(entry));
  }
  j["table_meta"] = meta_json(report.table_meta);
  return j.dump(2) + "\n";
}

std::string report_text(const GofReport& report) {
  std::string out;
  out += "n        " + std::to_string(report.n) + "\n";
  out += "R        " + fixed(report.r, 6) + "\n";
  out += "p-value  " + p_value_text(report.p_value) + "\n";
  out += "table    " + report.table_meta.source +
         " (I=" + std::to_string(report.table_meta.iterations) + ")\n";
  out += "\n";
  out += "  gamma   critical  decision\n";
  for (const LevelDecision& d : report.decisions) {
    std::string gamma = shortest(d.gamma);
    gamma.resize(std::max<std::size_t>(gamma.size(), 7), ' ');
    out += "  " + gamma + " " + fixed(d.critical, 6) + "  " +
           (d.reject ? "reject" : "accept") + "\n";
  }
  return out;
}

void write_plot_csv(std::ostream& out, std::span<const PlotPoint> points) {
  out << "i,p,u,v\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << (i + 1) << "," << fixed(points[i].p, 6) << ","
        << shortest(points[i].u) << "," << shortest(points[i].v) << "\n";
  }
}

void write_plot_svg(std::ostream& out, std::span<const PlotPoint> points) {
  constexpr double kW = 640, kH = 480, kMargin = 48;
  double u_min = points.front().u, u_max = points.front().u;
  double v_min = points.front().v, v_max = points.front().v;
  for (const PlotPoint& pt : points) {
    u_min = std::min(u_min, pt.u);
    u_max = std::max(u_max, pt.u);
    v_min = std::min(v_min, pt.v);
    v_max = std::max(v_max, pt.v);
  }
  const double u_pad = (u_max - u_min) * 0.05 + 1e-12;
  const double v_pad = (v_max - v_min) * 0.05 + 1e-12;
  u_min -= u_pad, u_max += u_pad;
  v_min -= v_pad, v_max += v_pad;
  const auto x = [&](double u) {
    return kMargin + (u - u_min) / (u_max - u_min) * (kW - 2 * kMargin);
  };
  const auto y = [&](double v) {
    return kH - kMargin - (v - v_min) / (v_max - v_min) * (kH - 2 * kMargin);
  };

  double su = 0, sv = 0, suu = 0, suv = 0;
  for (const PlotPoint& pt : points) {
    su += pt.u, sv += pt.v, suu += pt.u * pt.u, suv += pt.u * pt.v;
  }
  const double n = static_cast<double>(points.size());
  const double slope = (n * suv - su * sv) / (n * suu - su * su);
  const double intercept = (sv - slope * su) / n;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
      << "\" height=\"" << kH << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kH - kMargin << "\" x2=\""
      << kW - kMargin << "\" y2=\"" << kH - kMargin
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
      << kMargin << "\" y2=\"" << kH - kMargin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << x(u_min) << "\" y1=\"" << y(intercept + slope * u_min)
      << "\" x2=\"" << x(u_max) << "\" y2=\"" << y(intercept + slope * u_max)
      << "\" stroke=\"#c33\"/>\n";
  for (const PlotPoint& pt : points) {
    out << "<circle cx=\"" << x(pt.u) << "\" cy=\"" << y(pt.v)
        << "\" r=\"3\" fill=\"#36c\" fill-opacity=\"0.7\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace bsppcc::cli
