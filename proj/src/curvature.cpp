#include "jarnik/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "jarnik/parallel.hpp"

namespace jarnik {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

double curvature_weight(double lambda) { return std::pow(1.0 + lambda * lambda, 1.5); }

CurvatureSample make_sample(Int Q, std::string label, const FareyNeighbors& n, ScaleFactor scale, double lambda) {
  CurvatureSample s;
  s.order = Q;
  s.lambda = std::move(label);
  s.neighbors = n;
  s.q1 = n.left.den;
  s.q2 = n.right.den;
  s.r_squared = neighbor_radius_squared(n);
  s.r = std::sqrt(s.r_squared.convert_to<double>());
  s.scale = scale;
  s.r_tilde = s.r / scale.value();
  s.predicted = predicted_radius(Q, lambda, s.q1, s.q2);
  return s;
}

void require_trace_range(Int q_min, Int q_max) {
  if (q_min < 2 || q_max < q_min) throw std::invalid_argument("curvature trace needs 2 <= q_min <= q_max");
}

// Shared driver: neighbors_at(Q) gives the Farey pair at order Q.
template <typename NeighborsAt>
std::vector<CurvatureSample> trace(NeighborsAt neighbors_at, const std::string& label, double lambda, Int q_min,
                                   Int q_max, const TraceOptions& options) {
  require_trace_range(q_min, q_max);
  const auto count = static_cast<std::size_t>(q_max - q_min + 1);
  std::vector<CurvatureSample> out(count);
  const DomainSpec square = DomainSpec::square();
  if (options.incremental) {
    ScaleLadder ladder(square, q_min, options.cross_check_every);
    for (std::size_t i = 0; i < count; ++i) {
      const Int Q = q_min + static_cast<Int>(i);
      out[i] = make_sample(Q, label, neighbors_at(Q), ladder.scale(), lambda);
      if (Q < q_max) ladder.advance();
    }
  } else {
    parallel_for(count, [&](std::size_t i) {
      const Int Q = q_min + static_cast<Int>(i);
      out[i] = make_sample(Q, label, neighbors_at(Q), scale_factor(square, Q), lambda);
    });
  }
  return out;
}

}  // namespace

BigRational circumradius_squared(LatticePoint p0, LatticePoint p1, LatticePoint p2) {
  const BigInt x1 = BigInt(p1.x) - p0.x, y1 = BigInt(p1.y) - p0.y;
  const BigInt x2 = BigInt(p2.x) - p1.x, y2 = BigInt(p2.y) - p1.y;
  const BigInt cross = x1 * y2 - y1 * x2;
  if (cross == 0) throw DegenerateInput("collinear points have no circumscribed circle");
  const BigInt sx = x1 + x2, sy = y1 + y2;
  const BigInt num = (x1 * x1 + y1 * y1) * (x2 * x2 + y2 * y2) * (sx * sx + sy * sy);
  return BigRational(num, 4 * cross * cross);
}

BigRational neighbor_radius_squared(const FareyNeighbors& n) {
  const BigInt a1 = n.left.num, q1 = n.left.den, a2 = n.right.num, q2 = n.right.den;
  const BigInt sa = a1 + a2, sq = q1 + q2;
  return BigRational((a1 * a1 + q1 * q1) * (a2 * a2 + q2 * q2) * (sa * sa + sq * sq), 4);
}

CurvatureSample local_radius(Int Q, const ExactReal& lambda) {
  if (Q < 2) throw std::invalid_argument("local radius needs Q >= 2");
  if (lambda.is_rational()) throw std::invalid_argument("rational lambda needs a side (+ or -)");
  return make_sample(Q, lambda.str(), farey_neighbors(lambda, Q), scale_factor(DomainSpec::square(), Q),
                     lambda.approx());
}

CurvatureSample local_radius(Int Q, Fraction lambda, Side side) {
  if (Q < 2) throw std::invalid_argument("local radius needs Q >= 2");
  const std::string label = "rat:" + lambda.str() + (side == Side::Plus ? "+" : "-");
  return make_sample(Q, label, farey_neighbors_sided(lambda, side, Q), scale_factor(DomainSpec::square(), Q),
                     lambda.to_double());
}

double predicted_radius(Int Q, double lambda, Int q1, Int q2) {
  const double q = static_cast<double>(Q);
  const double ratio = static_cast<double>(q1) * static_cast<double>(q2) * static_cast<double>(q1 + q2) / (q * q * q);
  return ratio * kPi2 * curvature_weight(lambda) / 6.0;
}

double limit_curve_radius(double lambda) { return 2.0 / 3.0 * curvature_weight(lambda); }

std::vector<CurvatureSample> curvature_trace(const ExactReal& lambda, Int q_min, Int q_max,
                                             const TraceOptions& options) {
  if (lambda.is_rational()) throw std::invalid_argument("rational lambda needs a side (+ or -)");
  return trace([&](Int Q) { return farey_neighbors(lambda, Q); }, lambda.str(), lambda.approx(), q_min, q_max,
               options);
}

std::vector<CurvatureSample> curvature_trace(Fraction lambda, Side side, Int q_min, Int q_max,
                                             const TraceOptions& options) {
  if (lambda.den > q_min) throw std::invalid_argument("q_min must be at least the denominator of lambda");
  const std::string label = "rat:" + lambda.str() + (side == Side::Plus ? "+" : "-");
  return trace([&](Int Q) { return farey_neighbors_sided(lambda, side, Q); }, label, lambda.to_double(), q_min,
               q_max, options);
}

CurvatureBounds curvature_bounds(double lambda) {
  const double w = curvature_weight(lambda);
  return {kPi2 / 6.0 * w, kPi2 / 3.0 * w, 2.0 / 3.0 * w};
}

double limsup_from_ratio_liminf(double lambda, double ratio_liminf) {
  const double g = ratio_liminf;
  return (2.0 + g) / ((1.0 + g) * (1.0 + g)) * kPi2 * curvature_weight(lambda) / 6.0;
}

std::optional<double> convergent_ratio_liminf(const ExactReal& lambda) {
  if (!lambda.is_periodic()) return std::nullopt;
  // r_{n+1} = k_n / k_{n+1} = 1 / (b_n + r_n), r_1 = k_0/k_1 = 0. The map is a
  // contraction, so after a long run the iterates trace the limit cycle.
  constexpr int kWarmup = 3000;
  constexpr int kCycle = 1000;  // covers any period up to this length
  auto stream = lambda.quotients();
  stream->next();
  double r = 0.0;
  double least = std::numeric_limits<double>::infinity();
  for (int n = 0; n < kWarmup + kCycle; ++n) {
    r = 1.0 / (static_cast<double>(*stream->next()) + r);
    if (n >= kWarmup) least = std::min(least, r);
  }
  return least;
}

LimsupLiminfEstimate limsup_liminf_estimate(const ExactReal& lambda, Int q_max) {
  if (lambda.is_rational()) throw std::invalid_argument("lim sup/lim inf estimates need an irrational lambda");
  LimsupLiminfEstimate est;
  est.window_high = q_max;
  est.window_low = std::max<Int>(2, q_max / 4);
  const auto samples = curvature_trace(lambda, est.window_low, est.window_high);
  est.sup_estimate = -std::numeric_limits<double>::infinity();
  est.inf_estimate = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    est.sup_estimate = std::max(est.sup_estimate, s.r_tilde);
    est.inf_estimate = std::min(est.inf_estimate, s.r_tilde);
  }
  const double l = lambda.approx();
  est.bounds = curvature_bounds(l);
  if (auto g = convergent_ratio_liminf(lambda)) est.exact_limsup = limsup_from_ratio_liminf(l, *g);
  return est;
}

}  // namespace jarnik
