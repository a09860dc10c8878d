#include <algorithm>
#include <cmath>
#include <sstream>

#include "gplab/errors.hpp"
#include "gplab/io.hpp"
#include "gplab/report.hpp"

namespace gplab {

namespace {

constexpr double kWidth = 640, kHeight = 440;
constexpr double kLeft = 80, kRight = 20, kTop = 40, kBottom = 60;
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

struct Axis {
  bool log = false;
  double lo = 0, hi = 1;

  double map(double v) const {
    const double a = log ? std::log10(v) : v;
    return (a - lo) / (hi - lo);
  }
  bool usable(double v) const { return std::isfinite(v) && (!log || v > 0); }
};

Axis make_axis(const std::vector<const std::vector<double>*>& data, bool log) {
  Axis ax;
  ax.log = log;
  double lo = INFINITY, hi = -INFINITY;
  for (const auto* d : data) {
    for (double v : *d) {
      if (!ax.usable(v)) continue;
      const double a = log ? std::log10(v) : v;
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
  }
  if (!std::isfinite(lo)) lo = 0, hi = 1;
  if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
  const double pad = 0.05 * (hi - lo);
  ax.lo = lo - pad;
  ax.hi = hi + pad;
  return ax;
}

std::vector<double> ticks(const Axis& ax) {
  std::vector<double> t;
  if (ax.log) {
    for (double e = std::ceil(ax.lo); e <= ax.hi; e += 1) t.push_back(std::pow(10.0, e));
    if (t.size() < 2) t = {std::pow(10.0, ax.lo), std::pow(10.0, ax.hi)};
    return t;
  }
  const double span = ax.hi - ax.lo;
  const double raw = span / 6;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  for (double v = std::ceil(ax.lo / step) * step; v <= ax.hi; v += step) t.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
  return t;
}

std::string tick_label(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const Series& s) {
  std::vector<const std::vector<double>*> xs, ys;
  for (const Curve& c : s.curves) {
    xs.push_back(&c.x);
    ys.push_back(&c.y);
    xs.push_back(&c.fit_x);
    ys.push_back(&c.fit_y);
  }
  const Axis ax = make_axis(xs, s.log_x), ay = make_axis(ys, s.log_y);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  const auto px = [&](double v) { return kLeft + pw * ax.map(v); };
  const auto py = [&](double v) { return kTop + ph * (1.0 - ay.map(v)); };

  std::ostringstream o;
  o.precision(6);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(s.name)
    << "</text>\n";
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : ticks(ax)) {
    const double x = px(t);
    o << "<line x1=\"" << x << "\" y1=\"" << kTop + ph << "\" x2=\"" << x << "\" y2=\"" << kTop + ph + 5
      << "\" stroke=\"black\"/><text x=\"" << x << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">"
      << tick_label(t) << "</text>\n";
  }
  for (double t : ticks(ay)) {
    const double y = py(t);
    o << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft << "\" y2=\"" << y
      << "\" stroke=\"black\"/><text x=\"" << kLeft - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
      << tick_label(t) << "</text>\n";
  }
  o << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">"
    << escape(s.x_label) << (s.log_x ? " (log)" : "") << "</text>\n";
  o << "<text transform=\"translate(18," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
    << escape(s.y_label) << (s.log_y ? " (log)" : "") << "</text>\n";

  int legend = 0;
  for (std::size_t ci = 0; ci < s.curves.size(); ++ci) {
    const Curve& c = s.curves[ci];
    const char* color = kColors[ci % std::size(kColors)];
    std::ostringstream pts;
    pts.precision(6);
    for (std::size_t i = 0; i < c.x.size() && i < c.y.size(); ++i) {
      if (!ax.usable(c.x[i]) || !ay.usable(c.y[i])) continue;
      pts << px(c.x[i]) << ',' << py(c.y[i]) << ' ';
      o << "<circle cx=\"" << px(c.x[i]) << "\" cy=\"" << py(c.y[i]) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
    }
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"" << pts.str() << "\"/>\n";
    o << "<text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 16 + 16 * legend++ << "\" fill=\"" << color << "\">"
      << escape(c.label) << "</text>\n";
    if (!c.fit_x.empty()) {
      std::ostringstream fp;
      fp.precision(6);
      for (std::size_t i = 0; i < c.fit_x.size() && i < c.fit_y.size(); ++i) {
        if (ax.usable(c.fit_x[i]) && ay.usable(c.fit_y[i])) fp << px(c.fit_x[i]) << ',' << py(c.fit_y[i]) << ' ';
      }
      o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-dasharray=\"6,4\" points=\"" << fp.str()
        << "\"/>\n";
      o << "<text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 16 + 16 * legend++ << "\" fill=\"" << color
        << "\">" << escape(c.fit_label) << "</text>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

std::vector<std::filesystem::path> emit_plotdata(const RunReport& report, PlotKind kind,
                                                 const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const Series& s : report.series) {
    if (s.kind != kind || s.curves.empty()) continue;
    std::string dat = "# " + s.name + "\n# " + s.x_label + " " + s.y_label + "\n";
    for (const Curve& c : s.curves) {
      dat += "\n# curve: " + c.label + "\n";
      for (std::size_t i = 0; i < c.x.size() && i < c.y.size(); ++i) {
        dat += format_double(c.x[i]) + " " + format_double(c.y[i]) + "\n";
      }
      if (!c.fit_x.empty()) {
        dat += "\n# fit: " + c.fit_label + "\n";
        for (std::size_t i = 0; i < c.fit_x.size() && i < c.fit_y.size(); ++i) {
          dat += format_double(c.fit_x[i]) + " " + format_double(c.fit_y[i]) + "\n";
        }
      }
    }
    const auto dat_path = dir / (s.name + ".dat");
    const auto svg_path = dir / (s.name + ".svg");
    write_file_atomic(dat_path, dat);
    write_file_atomic(svg_path, render_svg(s));
    files.push_back(dat_path);
    files.push_back(svg_path);
  }
  if (files.empty()) throw MissingSeries("report has no " + to_string(kind) + " series");
  return files;
}

}  // namespace gplab
