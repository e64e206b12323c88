#include "jarnik/export.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace jarnik {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string coord(double v) { return fmt("%.6f", v); }

std::string svg_open(const std::string& view_box) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         view_box + "\" width=\"600\" height=\"600\">\n";
}

std::string polyline(const std::vector<Point>& pts, const std::string& style, bool closed) {
  std::string out = closed ? "<polygon points=\"" : "<polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += coord(pts[i].x) + ',' + coord(pts[i].y);
  }
  return out + "\" " + style + "/>\n";
}

}  // namespace

std::string format_double(double v) {
  std::string s = fmt("%.17g", v);
  // Guard against a locale decimal comma.
  std::replace(s.begin(), s.end(), ',', '.');
  return s;
}

std::string polygon_csv(const LatticePolygon& polygon) {
  std::string out = "x,y\n";
  for (const LatticePoint& v : polygon.vertices) out += std::to_string(v.x) + ',' + std::to_string(v.y) + '\n';
  return out;
}

std::string polygon_csv(const ScaledPolygon& polygon) {
  std::string out = "x,y\n";
  for (const Point& v : polygon.vertices) out += format_double(v.x) + ',' + format_double(v.y) + '\n';
  return out;
}

std::string curve_csv(const LimitCurve& curve, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 curve samples");
  std::string out = "lambda,x,y\n";
  for (int i = 0; i < samples; ++i) {
    const double lambda = static_cast<double>(i) / (samples - 1);
    const Point p = curve.eval(lambda);
    out += format_double(lambda) + ',' + format_double(p.x) + ',' + format_double(p.y) + '\n';
  }
  return out;
}

std::string trace_csv(const std::vector<CurvatureSample>& trace) {
  std::string out = "Q,q1,q2,r_squared_num,r_squared_den,r_tilde,predicted\n";
  for (const CurvatureSample& s : trace) {
    out += std::to_string(s.order) + ',' + std::to_string(s.q1) + ',' + std::to_string(s.q2) + ',' +
           numerator(s.r_squared).str() + ',' + denominator(s.r_squared).str() + ',' + format_double(s.r_tilde) +
           ',' + format_double(s.predicted) + '\n';
  }
  return out;
}

std::string convergence_csv(const std::vector<ConvergenceRecord>& rows) {
  std::string out = "domain,Q,curve,sup_distance,bound\n";
  for (const ConvergenceRecord& r : rows)
    out += r.domain.name() + ',' + std::to_string(r.order) + ',' + r.curve + ',' + format_double(r.sup_distance) +
           ',' + format_double(r.bound) + '\n';
  return out;
}

std::string polygon_svg(const ScaledPolygon& polygon) {
  std::string out = svg_open("-1.2 -1.2 2.4 2.4");
  out += "<g transform=\"scale(1,-1)\">\n";
  out += polyline(polygon.vertices, "fill=\"none\" stroke=\"black\" stroke-width=\"0.004\"", true);
  out += "</g>\n</svg>\n";
  return out;
}

std::string curve_svg(const LimitCurve& curve, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 curve samples");
  std::vector<Point> arc;
  for (int i = 0; i < samples; ++i) arc.push_back(curve.eval(static_cast<double>(i) / (samples - 1)));
  std::string out = svg_open("-1.2 -1.2 2.4 2.4");
  out += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"0.006\">\n";
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (bool swap : {false, true}) {
        std::vector<Point> image;
        for (Point p : arc) {
          Point q = swap ? Point{p.y, p.x} : p;
          image.push_back({sx * q.x, sy * q.y});
        }
        out += polyline(image, "", false);
      }
  out += "</g>\n</svg>\n";
  return out;
}

std::string trace_svg(const std::vector<CurvatureSample>& trace, const CurvatureBounds& bounds) {
  constexpr double W = 800, H = 500, pad = 50;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                    "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" height=\"500\">\n";
  if (trace.empty()) return out + "</svg>\n";
  const double lx0 = std::log(static_cast<double>(trace.front().order));
  const double lx1 = std::max(lx0 + 1e-9, std::log(static_cast<double>(trace.back().order)));
  double ymax = bounds.upper * 1.1;
  for (const auto& s : trace) ymax = std::max(ymax, s.r_tilde);
  auto px = [&](double logq) { return pad + (logq - lx0) / (lx1 - lx0) * (W - 2 * pad); };
  auto py = [&](double v) { return H - pad - v / ymax * (H - 2 * pad); };

  out += "<rect x=\"" + coord(pad) + "\" y=\"" + coord(py(bounds.upper)) + "\" width=\"" + coord(W - 2 * pad) +
         "\" height=\"" + coord(py(bounds.lower) - py(bounds.upper)) + "\" fill=\"#dde8f5\"/>\n";
  for (double level : {bounds.lower, bounds.upper})
    out += "<line x1=\"" + coord(pad) + "\" x2=\"" + coord(W - pad) + "\" y1=\"" + coord(py(level)) + "\" y2=\"" +
           coord(py(level)) + "\" stroke=\"#4a78b0\"/>\n";
  out += "<line x1=\"" + coord(pad) + "\" x2=\"" + coord(W - pad) + "\" y1=\"" + coord(py(bounds.limit_curve_radius)) +
         "\" y2=\"" + coord(py(bounds.limit_curve_radius)) + "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";

  std::vector<Point> steps;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double x0 = px(std::log(static_cast<double>(trace[i].order)));
    const double x1 = i + 1 < trace.size() ? px(std::log(static_cast<double>(trace[i + 1].order))) : W - pad;
    const double y = py(trace[i].r_tilde);
    steps.push_back({x0, y});
    steps.push_back({x1, y});
  }
  out += polyline(steps, "fill=\"none\" stroke=\"#b03030\" stroke-width=\"1\"", false);
  out += "<line x1=\"" + coord(pad) + "\" x2=\"" + coord(W - pad) + "\" y1=\"" + coord(H - pad) + "\" y2=\"" +
         coord(H - pad) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + coord(pad) + "\" x2=\"" + coord(pad) + "\" y1=\"" + coord(pad) + "\" y2=\"" +
         coord(H - pad) + "\" stroke=\"black\"/>\n";
  out += "<text x=\"" + coord(W / 2) + "\" y=\"" + coord(H - 10) + "\" text-anchor=\"middle\">log Q</text>\n";
  out += "</svg>\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      f.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path);
  }
}

}  // namespace jarnik
