#include "jarnik/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <numbers>
#include <stdexcept>

#include "jarnik/parallel.hpp"

namespace jarnik {

namespace {

// Image of p under the dihedral group lying in {0 <= x <= -y}.
Point fold(Point p) {
  const double ax = std::fabs(p.x), ay = std::fabs(p.y);
  return {std::min(ax, ay), -std::max(ax, ay)};
}

// Real roots of t^3 + a t + b = 0.
std::vector<double> depressed_cubic_roots(double a, double b) {
  std::vector<double> roots;
  const double disc = b * b / 4.0 + a * a * a / 27.0;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    roots.push_back(std::cbrt(-b / 2.0 + s) + std::cbrt(-b / 2.0 - s));
  } else {
    const double m = 2.0 * std::sqrt(-a / 3.0);
    const double theta = std::acos(std::clamp(3.0 * b / (a * m), -1.0, 1.0)) / 3.0;
    for (int k = 0; k < 3; ++k) roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
  }
  for (double& t : roots) {
    // One Newton step tidies up cancellation in the closed forms.
    const double f = (t * t + a) * t + b, df = 3.0 * t * t + a;
    if (df != 0.0) t -= f / df;
  }
  return roots;
}

double segment_distance(Point p, Point a, Point b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, Point{a.x + t * dx, a.y + t * dy});
}

// The fundamental arc as an inscribed polyline. Chords longer than twice the
// mean are split until they are not, so uneven parametrizations are covered
// evenly. The largest gap between a chord and the arc above its midpoint
// (the sagitta) is added to every distance, which keeps results upper
// bounds for the distance to the true curve.
class SampledArc {
 public:
  SampledArc(const LimitCurve& curve, int samples) : curve_(curve) {
    std::vector<double> lambdas;
    for (int i = 0; i < samples; ++i) lambdas.push_back(static_cast<double>(i) / (samples - 1));
    double total = 0.0;
    for (int i = 1; i < samples; ++i) total += distance(curve.eval(lambdas[i - 1]), curve.eval(lambdas[i]));
    const double target = 2.0 * total / (samples - 1);
    for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
      lambdas_.push_back(lambdas[i]);
      refine(lambdas[i], lambdas[i + 1], target, 0);
    }
    lambdas_.push_back(1.0);
    for (double l : lambdas_) points_.push_back(curve.eval(l));
    for (std::size_t i = 0; i + 1 < lambdas_.size(); ++i) {
      const Point mid = curve.eval((lambdas_[i] + lambdas_[i + 1]) / 2.0);
      sagitta_ = std::max(sagitta_, segment_distance(mid, points_[i], points_[i + 1]));
    }
    monotone_ = std::is_sorted(points_.begin(), points_.end(), [](Point a, Point b) { return a.x < b.x; });
  }

  double distance(Point p) const { return nearest_chord(p) + sagitta_; }

 private:
  void refine(double a, double b, double target, int depth) {
    if (depth >= 24 || distance(curve_.eval(a), curve_.eval(b)) <= target) return;
    const double m = (a + b) / 2.0;
    refine(a, m, target, depth + 1);
    lambdas_.push_back(m);
    refine(m, b, target, depth + 1);
  }

  static double distance(Point a, Point b) { return jarnik::distance(a, b); }

  double nearest_chord(Point p) const {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = points_.size();
    if (!monotone_) {
      for (std::size_t i = 0; i + 1 < n; ++i) best = std::min(best, segment_distance(p, points_[i], points_[i + 1]));
      return best;
    }
    // x increases along the arc, so the x gap to a chord bounds its distance
    // from below; scan outward from p.x until that bound exceeds the best.
    const auto it = std::lower_bound(points_.begin(), points_.end(), p.x, [](Point c, double x) { return c.x < x; });
    const std::size_t start = static_cast<std::size_t>(it - points_.begin());
    for (std::size_t i = start == 0 ? 0 : start - 1; i + 1 < n && points_[i].x - p.x < best; ++i)
      best = std::min(best, segment_distance(p, points_[i], points_[i + 1]));
    for (std::size_t i = start < 2 ? 0 : start - 1; i-- > 0 && p.x - points_[i + 1].x < best;)
      best = std::min(best, segment_distance(p, points_[i], points_[i + 1]));
    return best;
  }

  LimitCurve curve_;
  std::vector<double> lambdas_;
  std::vector<Point> points_;
  double sagitta_ = 0.0;
  bool monotone_ = true;
};

}  // namespace

double distance_to_parabola_C(Point p) {
  const Point w = fold(p);
  // Stationary points of |(t, 3t^2/4 - 1) - w|^2 solve
  // (9/8) t^3 + (1 - (3/2)(1 + w.y)) t - w.x = 0.
  const double a = 8.0 / 9.0 * (1.0 - 1.5 * (1.0 + w.y));
  const double b = -8.0 / 9.0 * w.x;
  auto at = [&](double t) { return distance(w, Point{t, 0.75 * t * t - 1.0}); };
  double best = std::min(at(0.0), at(2.0 / 3.0));
  for (double t : depressed_cubic_roots(a, b))
    if (t > 0.0 && t < 2.0 / 3.0) best = std::min(best, at(t));
  return best;
}

CurveDistance distance_to_curve(const std::vector<Point>& points, const LimitCurve& curve, int samples) {
  if (samples < 1000) throw std::invalid_argument("distance_to_curve needs at least 1000 samples");
  CurveDistance out;
  if (points.empty()) return out;
  const bool exact = curve.family() == CurveFamily::C;
  std::optional<SampledArc> arc;
  if (!exact) arc.emplace(curve, samples);
  auto dist = [&](Point p) { return exact ? distance_to_parabola_C(p) : arc->distance(fold(p)); };

  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = points[i], q = points[(i + 1) % n];
    out.max_edge = std::max(out.max_edge, distance(p, q));
    const Point mid{(p.x + q.x) / 2.0, (p.y + q.y) / 2.0};
    out.sup_distance = std::max({out.sup_distance, dist(p), dist(mid)});
  }
  out.bound = out.sup_distance + out.max_edge / 4.0;
  return out;
}

CurveDistance distance_to_curve(const ScaledPolygon& polygon, const LimitCurve& curve, int samples) {
  return distance_to_curve(polygon.vertices, curve, samples);
}

std::vector<ConvergenceRecord> convergence_table(const DomainSpec& s, std::vector<Int> orders,
                                                 const LimitCurve& curve, int samples) {
  if (!LimitCurve::for_domain(s).same_curve(curve))
    throw std::invalid_argument("P_Q(" + s.name() + ") does not converge to " + curve.name() + "; expected " +
                                LimitCurve::for_domain(s).name());
  if (samples < 1000) throw std::invalid_argument("distance_to_curve needs at least 1000 samples");
  for (Int Q : orders)
    if (Q < 1) throw std::invalid_argument("orders must be positive");
  std::sort(orders.begin(), orders.end());
  std::vector<ConvergenceRecord> rows(orders.size());
  parallel_for(orders.size(), [&](std::size_t i) {
    const ScaledPolygon poly = scale_polygon(build_polygon(s, orders[i]));
    const CurveDistance d = distance_to_curve(poly, curve, samples);
    rows[i] = {s, orders[i], curve.name(), d.sup_distance, d.bound};
  });
  return rows;
}

LemmaReport lemma_check(const std::vector<Int>& orders, const std::vector<double>& lambdas) {
  if (orders.empty()) throw std::invalid_argument("lemma_check needs at least one order");
  LemmaReport report;
  constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
  for (Int Q : orders) {
    if (Q < 2) throw std::invalid_argument("lemma_check orders must be at least 2");
    const FundamentalArc arc(DomainSpec::square(), Q);
    const double q = static_cast<double>(Q);
    const double q3 = q * q * q, norm = q / std::log(q);
    for (double lambda : lambdas) {
      LemmaRow row;
      row.order = Q;
      row.lambda = lambda;
      row.vertex = arc.vertex(lambda);
      if (lambda > 0.0) {
        row.x_error = std::fabs(static_cast<double>(row.vertex.x) * kPi2 / (2.0 * lambda * q3) - 1.0) * norm;
        row.y_error = std::fabs(static_cast<double>(row.vertex.y) * kPi2 / (lambda * lambda * q3) - 1.0) * norm;
      }
      report.max_x_error = std::max(report.max_x_error, row.x_error);
      report.max_y_error = std::max(report.max_y_error, row.y_error);
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace jarnik
