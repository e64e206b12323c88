#include "jarnik/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jarnik {

namespace {

int half_plane(PrimitiveVector v) { return (v.a > 0 || (v.a == 0 && v.q > 0)) ? 0 : 1; }

__int128 cross(PrimitiveVector u, PrimitiveVector v) {
  return static_cast<__int128>(u.q) * v.a - static_cast<__int128>(u.a) * v.q;
}

void require_order(Int Q) {
  if (Q < 1) throw std::invalid_argument("order Q must be positive");
}

}  // namespace

std::vector<PrimitiveVector> primitive_vectors(const DomainSpec& s, Int Q) {
  require_order(Q);
  std::vector<PrimitiveVector> out;
  for (Int q = -Q; q <= Q; ++q) {
    const Int h = column_height(s, Q, q);
    for (Int a = -h; a <= h; ++a)
      if (gcd(q, a) == 1) out.push_back({q, a});
  }
  return out;
}

bool ccw_less(PrimitiveVector u, PrimitiveVector v) {
  const int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

void sort_ccw(std::vector<PrimitiveVector>& vectors) {
  std::sort(vectors.begin(), vectors.end(), ccw_less);
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    const PrimitiveVector u = vectors[i - 1], v = vectors[i];
    if (half_plane(u) == half_plane(v) && cross(u, v) == 0)
      throw std::logic_error("two vectors share a direction");
  }
}

LatticePolygon build_polygon(const DomainSpec& s, Int Q) {
  LatticePolygon poly{s, Q, primitive_vectors(s, Q), {}};
  sort_ccw(poly.edges);
  if (poly.edges.empty() || poly.edges.front() != PrimitiveVector{1, 0})
    throw std::logic_error("vector set does not contain (1,0)");
  poly.vertices.reserve(poly.edges.size());
  LatticePoint p{0, 0};
  poly.vertices.push_back(p);
  for (std::size_t i = 1; i < poly.edges.size(); ++i) {
    p.x = checked_add(p.x, poly.edges[i].q);
    p.y = checked_add(p.y, poly.edges[i].a);
    poly.vertices.push_back(p);
  }
  return poly;
}

FundamentalArc::FundamentalArc(const DomainSpec& s, Int Q) : domain_(s), order_(Q), counter_(std::max<Int>(Q, 1)) {
  require_order(Q);
  heights_.resize(static_cast<std::size_t>(Q) + 1);
  for (Int q = 0; q <= Q; ++q) heights_[static_cast<std::size_t>(q)] = std::min(column_height(s, Q, q), q);
}

template <typename Floor>
LatticePoint FundamentalArc::sum_below(Floor floor_of) const {
  LatticePoint v{0, 0};
  for (Int q = 1; q <= order_; ++q) {
    const Int m = std::min(heights_[static_cast<std::size_t>(q)], floor_of(q));
    if (m <= 0) continue;
    v.x = checked_add(v.x, checked_mul(q, counter_.count(q, m)));
    v.y = checked_add(v.y, counter_.sum(q, m));
  }
  return v;
}

LatticePoint FundamentalArc::vertex(Fraction lambda) const {
  if (lambda < Fraction{0, 1} || lambda > Fraction{1, 1}) throw std::domain_error("lambda must lie in [0,1]");
  return sum_below([&](Int q) { return floor_div(checked_mul(q, lambda.num), lambda.den); });
}

LatticePoint FundamentalArc::vertex(const ExactReal& lambda) const {
  if (auto f = lambda.as_fraction()) return vertex(*f);
  if (lambda.compare(Fraction{0, 1}) < 0 || lambda.compare(Fraction{1, 1}) > 0)
    throw std::domain_error("lambda must lie in [0,1]");
  // Every a/q with q <= Q lies on the same side of lambda as of its left
  // Farey neighbor, so the neighbor gives the same vector set.
  return vertex(farey_neighbors(lambda, order_).left);
}

LatticePoint FundamentalArc::vertex(double lambda) const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("lambda must lie in [0,1]");
  return sum_below([&](Int q) {
    const double qd = static_cast<double>(q);
    auto a = static_cast<Int>(std::floor(lambda * qd));
    // fma rounds once, so the sign of lambda*q - a is exact.
    while (std::fma(lambda, qd, -static_cast<double>(a)) < 0.0) --a;
    while (std::fma(lambda, qd, -static_cast<double>(a + 1)) >= 0.0) ++a;
    return a;
  });
}

ScaleFactor FundamentalArc::scale() const {
  const LatticePoint v = vertex(Fraction{1, 1});
  return ScaleFactor{checked_add(checked_mul(2, checked_add(v.x, v.y)), -1)};
}

LatticePoint fundamental_vertex(const DomainSpec& s, Int Q, Fraction lambda) {
  return FundamentalArc(s, Q).vertex(lambda);
}

LatticePoint fundamental_vertex(const DomainSpec& s, Int Q, const ExactReal& lambda) {
  return FundamentalArc(s, Q).vertex(lambda);
}

LatticePoint fundamental_vertex(const DomainSpec& s, Int Q, double lambda) {
  return FundamentalArc(s, Q).vertex(lambda);
}

ScaleFactor scale_factor(const DomainSpec& s, Int Q) { return FundamentalArc(s, Q).scale(); }

Point scaled_vertex(LatticePoint v, ScaleFactor r) {
  const double twice = static_cast<double>(r.twice);
  return {static_cast<double>(2 * v.x + 1) / twice, static_cast<double>(2 * v.y - r.twice) / twice};
}

ScaledPolygon scale_polygon(const LatticePolygon& polygon) {
  ScaledPolygon out{polygon.domain, polygon.order, scale_factor(polygon.domain, polygon.order), {}};
  if (out.scale.twice <= 0) throw std::logic_error("degenerate polygon: non-positive scale factor");
  out.vertices.reserve(polygon.vertices.size());
  for (const LatticePoint& v : polygon.vertices) out.vertices.push_back(scaled_vertex(v, out.scale));
  return out;
}

ScaleLadder::ScaleLadder(const DomainSpec& s, Int start, int cross_check_every)
    : domain_(s), order_(start), cross_check_every_(cross_check_every) {
  const FundamentalArc arc(s, start);
  heights_ = arc.column_heights();
  const LatticePoint v = arc.vertex(Fraction{1, 1});
  x_ = v.x;
  y_ = v.y;
}

void ScaleLadder::advance() {
  const Int next = checked_add(order_, 1);
  heights_.push_back(0);
  for (Int q = 1; q <= next; ++q) {
    auto& h = heights_[static_cast<std::size_t>(q)];
    const Int h_next = std::min(column_height(domain_, next, q), q);
    for (Int a = h + 1; a <= h_next; ++a) {
      if (gcd(q, a) != 1) continue;
      x_ = checked_add(x_, q);
      y_ = checked_add(y_, a);
    }
    h = std::max(h, h_next);
  }
  order_ = next;
  if (cross_check_every_ > 0 && ++steps_since_check_ >= cross_check_every_) {
    steps_since_check_ = 0;
    if (FundamentalArc(domain_, order_).scale() != scale())
      throw std::logic_error("incremental scale factor drifted from full recomputation");
  }
}

}  // namespace jarnik
