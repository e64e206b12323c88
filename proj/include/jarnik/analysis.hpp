#pragma once

#include <string>
#include <vector>

#include "jarnik/domains.hpp"
#include "jarnik/limit_curves.hpp"
#include "jarnik/polygon.hpp"

namespace jarnik {

inline constexpr int kDefaultCurveSamples = 1 << 14;

/// How far a scaled polygon strays from a limit curve.
///
/// `sup_distance` is the largest distance from a polygon vertex or edge
/// midpoint to the curve. Every point of an edge lies within a quarter of the
/// edge length of one of those, so the whole polygon sits inside the
/// `bound`-neighborhood of the curve, bound = sup_distance + max_edge / 4.
struct CurveDistance {
  double sup_distance = 0.0;
  double max_edge = 0.0;
  double bound = 0.0;
};

/// Distance from the points of a scaled polygon to the eight-fold image of
/// the curve's fundamental arc.
///
/// Each point is first folded into the wedge {0 <= x <= -y}; by the mirror
/// symmetry of the curve its nearest curve point then lies on the fundamental
/// arc. Curve C is handled exactly (nearest point on a parabola is a cubic
/// root). Other curves are replaced by an inscribed polyline through at least
/// `samples` arc points, refined where the chords are long; the largest
/// chord-to-arc gap is added, so the result bounds the true distance from above.
/// Throws std::invalid_argument when samples < 1000.
CurveDistance distance_to_curve(const std::vector<Point>& points, const LimitCurve& curve,
                                int samples = kDefaultCurveSamples);
CurveDistance distance_to_curve(const ScaledPolygon& polygon, const LimitCurve& curve,
                                int samples = kDefaultCurveSamples);

/// Distance of a single point to curve C, exact up to rounding.
double distance_to_parabola_C(Point p);

struct ConvergenceRecord {
  DomainSpec domain = DomainSpec::square();
  Int order = 0;
  std::string curve;
  double sup_distance = 0.0;
  double bound = 0.0;
};

/// One record per order, sorted by order. Rejects a curve that is not the
/// limit of P_Q(S) with std::invalid_argument. Rows run in parallel.
std::vector<ConvergenceRecord> convergence_table(const DomainSpec& s, std::vector<Int> orders,
                                                 const LimitCurve& curve, int samples = kDefaultCurveSamples);

struct LemmaRow {
  Int order = 0;
  double lambda = 0.0;
  LatticePoint vertex;
  double x_error = 0.0;  // |X pi^2 / (2 lambda Q^3) - 1| * Q / log Q
  double y_error = 0.0;  // |Y pi^2 / (lambda^2 Q^3) - 1| * Q / log Q
};

struct LemmaReport {
  std::vector<LemmaRow> rows;
  double max_x_error = 0.0;
  double max_y_error = 0.0;
};

/// Normalized deviation of the square's fundamental vertex from its main
/// terms. Rows with lambda = 0 carry X = Y = 0 and zero error.
LemmaReport lemma_check(const std::vector<Int>& orders, const std::vector<double>& lambdas);

}  // namespace jarnik
