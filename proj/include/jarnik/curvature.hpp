#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jarnik/continued_fraction.hpp"
#include "jarnik/geometry.hpp"
#include "jarnik/polygon.hpp"

namespace jarnik {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Three collinear points: the circle through them has infinite radius.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Squared radius of the circle through p0, p1, p2, exact. With
/// (x1,y1) = p1-p0 and (x2,y2) = p2-p1:
///   r^2 = (x1^2+y1^2)(x2^2+y2^2)((x1+x2)^2+(y1+y2)^2) / (4 (x1 y2 - y1 x2)^2).
BigRational circumradius_squared(LatticePoint p0, LatticePoint p1, LatticePoint p2);

/// Local radius of curvature of the Jarnik polygon P_Q at the vertex whose
/// adjacent edges bracket lambda.
struct CurvatureSample {
  Int order = 0;
  std::string lambda;
  Int q1 = 0;  // denominator of the left Farey neighbor
  Int q2 = 0;  // denominator of the right Farey neighbor
  FareyNeighbors neighbors;
  BigRational r_squared;
  double r = 0.0;
  ScaleFactor scale;
  double r_tilde = 0.0;    // r / R(Q)
  double predicted = 0.0;  // q1 q2 (q1+q2)/Q^3 * pi^2 (1+lambda^2)^{3/2} / 6
};

/// r^2 = (a1^2+q1^2)(a2^2+q2^2)((a1+a2)^2+(q1+q2)^2)/4 for unimodular neighbors.
BigRational neighbor_radius_squared(const FareyNeighbors& n);

CurvatureSample local_radius(Int Q, const ExactReal& lambda);
CurvatureSample local_radius(Int Q, Fraction lambda, Side side);

double predicted_radius(Int Q, double lambda, Int q1, Int q2);

/// Radius of curvature (2/3)(1+lambda^2)^{3/2} of C at (2 lambda/3, lambda^2/3 - 1).
double limit_curve_radius(double lambda);

struct TraceOptions {
  bool incremental = true;
  int cross_check_every = 64;
};

/// One sample per Q in [q_min, q_max], Q >= 2.
std::vector<CurvatureSample> curvature_trace(const ExactReal& lambda, Int q_min, Int q_max,
                                             const TraceOptions& options = {});
std::vector<CurvatureSample> curvature_trace(Fraction lambda, Side side, Int q_min, Int q_max,
                                             const TraceOptions& options = {});

struct CurvatureBounds {
  double lower = 0.0;               // pi^2/6 (1+lambda^2)^{3/2}
  double upper = 0.0;               // pi^2/3 (1+lambda^2)^{3/2}
  double limit_curve_radius = 0.0;  // (2/3)(1+lambda^2)^{3/2}
};

CurvatureBounds curvature_bounds(double lambda);

/// Value of (2 + g)/(1 + g)^2 * pi^2 (1+lambda^2)^{3/2} / 6, the lim sup of
/// r~_Q(lambda) when lim inf of k_{n-1}/k_n equals g.
double limsup_from_ratio_liminf(double lambda, double ratio_liminf);

/// lim inf of k_{n-1}/k_n for an eventually periodic expansion; nullopt otherwise.
std::optional<double> convergent_ratio_liminf(const ExactReal& lambda);

struct LimsupLiminfEstimate {
  double sup_estimate = 0.0;
  double inf_estimate = 0.0;
  Int window_low = 0;  // statistics over Q in [window_low, window_high]
  Int window_high = 0;
  CurvatureBounds bounds;
  std::optional<double> exact_limsup;  // periodic expansions only
};

/// Window statistics of the trace over [Q_max/4, Q_max]; lambda irrational.
LimsupLiminfEstimate limsup_liminf_estimate(const ExactReal& lambda, Int q_max);

}  // namespace jarnik
