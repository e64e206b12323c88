#pragma once

#include <vector>

#include "jarnik/continued_fraction.hpp"
#include "jarnik/domains.hpp"
#include "jarnik/geometry.hpp"

namespace jarnik {

/// Primitive lattice vector (q, a): q is the x component, a the y component.
struct PrimitiveVector {
  Int q = 0;
  Int a = 0;

  friend bool operator==(const PrimitiveVector&, const PrimitiveVector&) = default;
};

/// All primitive (q, a) with (q/Q, a/Q) in S.
std::vector<PrimitiveVector> primitive_vectors(const DomainSpec& s, Int Q);

/// Strict counterclockwise angular order starting at direction (1, 0).
/// Exact: half-plane index, then cross product.
bool ccw_less(PrimitiveVector u, PrimitiveVector v);

/// Sorts counterclockwise; throws std::logic_error on a repeated direction.
void sort_ccw(std::vector<PrimitiveVector>& vectors);

/// The polygon whose edges are V_Q(S) in counterclockwise order. Edge 0 is
/// (1, 0) and vertices[i] is the endpoint of edge i, so vertices[0] is the
/// origin and the last vertex is (-1, 0).
struct LatticePolygon {
  DomainSpec domain;
  Int order = 1;
  std::vector<PrimitiveVector> edges;
  std::vector<LatticePoint> vertices;
};

LatticePolygon build_polygon(const DomainSpec& s, Int Q);

/// R_S(Q) = X_S(Q,1) + Y_S(Q,1) - 1/2, kept exact as twice its value.
struct ScaleFactor {
  Int twice = 1;

  double value() const { return static_cast<double>(twice) / 2.0; }
  friend bool operator==(const ScaleFactor&, const ScaleFactor&) = default;
};

/// Exact lattice sums over the fundamental slice of V_Q(S): the vertex
/// (X_S(Q, lambda), Y_S(Q, lambda)) summing the vectors with positive
/// coordinates and slope at most lambda.
class FundamentalArc {
 public:
  FundamentalArc(const DomainSpec& s, Int Q);

  Int order() const { return order_; }
  const DomainSpec& domain() const { return domain_; }

  // Exact for rational and ExactReal slopes; doubles are compared exactly via fma.
  LatticePoint vertex(Fraction lambda) const;
  LatticePoint vertex(const ExactReal& lambda) const;
  LatticePoint vertex(double lambda) const;

  ScaleFactor scale() const;

  // Largest a with (q, a) in Q*S, capped at q; column_heights()[q] for q = 0..Q.
  const std::vector<Int>& column_heights() const { return heights_; }

 private:
  template <typename Floor>
  LatticePoint sum_below(Floor floor_of) const;

  DomainSpec domain_;
  Int order_;
  std::vector<Int> heights_;
  CoprimeCounter counter_;
};

LatticePoint fundamental_vertex(const DomainSpec& s, Int Q, Fraction lambda);
LatticePoint fundamental_vertex(const DomainSpec& s, Int Q, const ExactReal& lambda);
LatticePoint fundamental_vertex(const DomainSpec& s, Int Q, double lambda);

ScaleFactor scale_factor(const DomainSpec& s, Int Q);

/// P_Q(S) translated so the (1,0)-edge midpoint sits at (0, -R) and scaled by 1/R.
struct ScaledPolygon {
  DomainSpec domain;
  Int order = 1;
  ScaleFactor scale;
  std::vector<Point> vertices;
};

ScaledPolygon scale_polygon(const LatticePolygon& polygon);

/// Image of a lattice vertex (x, y) under the scaling map.
Point scaled_vertex(LatticePoint v, ScaleFactor r);

/// R_S(Q) along Q = start, start+1, ... maintained from the vectors that
/// enter between consecutive orders, with a full recomputation every
/// `cross_check_every` steps (0 disables it). Requires S star-shaped.
class ScaleLadder {
 public:
  ScaleLadder(const DomainSpec& s, Int start, int cross_check_every = 64);

  Int order() const { return order_; }
  ScaleFactor scale() const { return ScaleFactor{2 * (x_ + y_) - 1}; }
  // Advances to order()+1; throws std::logic_error if a cross-check fails.
  void advance();

 private:
  DomainSpec domain_;
  Int order_;
  int cross_check_every_;
  int steps_since_check_ = 0;
  std::vector<Int> heights_;  // capped column heights at the current order
  Int x_ = 0;
  Int y_ = 0;
};

}  // namespace jarnik
