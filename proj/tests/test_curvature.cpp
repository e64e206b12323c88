#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "jarnik/curvature.hpp"
#include "jarnik/limit_curves.hpp"

using namespace jarnik;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

double circumradius(Point a, Point b, Point c) {
  const double ab = distance(a, b), bc = distance(b, c), ca = distance(c, a);
  const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return ab * bc * ca / (2.0 * std::fabs(cross));
}

// Circumradius of the scaled images of three lattice vertices, carried out
// in 50 digits so the short edges do not cancel away.
double scaled_circumradius(LatticePoint a, LatticePoint b, LatticePoint c, ScaleFactor r) {
  using Real = boost::multiprecision::cpp_dec_float_50;
  const Real t(r.twice);
  auto sx = [&](LatticePoint p) { return Real(2 * p.x + 1) / t; };
  auto sy = [&](LatticePoint p) { return Real(2 * p.y - r.twice) / t; };
  auto len = [&](LatticePoint p, LatticePoint q) {
    return boost::multiprecision::sqrt((sx(p) - sx(q)) * (sx(p) - sx(q)) + (sy(p) - sy(q)) * (sy(p) - sy(q)));
  };
  const Real cross = (sx(b) - sx(a)) * (sy(c) - sy(a)) - (sy(b) - sy(a)) * (sx(c) - sx(a));
  return static_cast<double>(len(a, b) * len(b, c) * len(c, a) / (2 * boost::multiprecision::abs(cross)));
}

// Index of the fundamental-arc vertex whose adjacent edges bracket lambda.
std::size_t bracketing_vertex(const LatticePolygon& p, double lambda) {
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
    const auto e = p.edges[i], f = p.edges[i + 1];
    if (e.q > 0 && f.q > 0 && static_cast<double>(e.a) / e.q < lambda && lambda < static_cast<double>(f.a) / f.q)
      return i;
  }
  throw std::logic_error("no bracketing vertex");
}

}  // namespace

TEST_CASE("circumradius of lattice triples") {
  CHECK(circumradius_squared({7, 2}, {9, 3}, {12, 5}) == BigRational(1105, 2));
  CHECK(circumradius_squared({0, 0}, {1, 0}, {1, 1}) == BigRational(1, 2));
  CHECK(circumradius_squared({4, 1}, {7, 2}, {9, 3}) == BigRational(725, 2));
  CHECK_THROWS_AS(circumradius_squared({0, 0}, {1, 1}, {3, 3}), DegenerateInput);
  CHECK_THROWS_AS(circumradius_squared({2, 5}, {2, 5}, {3, 3}), DegenerateInput);
  // Large coordinates stay exact.
  const Int big = 3'000'000'000;
  CHECK(circumradius_squared({0, 0}, {big, 0}, {big, big}) == BigRational(BigInt(big) * big, 2));
}

TEST_CASE("radii at Q = 4") {
  const CurvatureSample s = local_radius(4, ExactReal::inv_sqrt3());
  CHECK(s.r_squared == BigRational(1105, 2));
  CHECK(s.q1 == 2);
  CHECK(s.q2 == 3);
  CHECK(local_radius(4, Fraction{1, 2}, Side::Plus).r_squared == BigRational(1105, 2));
  CHECK(local_radius(4, Fraction{1, 2}, Side::Minus).r_squared == BigRational(725, 2));
  CHECK(s.predicted == doctest::Approx(30.0 / 64 * kPi2 * std::pow(4.0 / 3, 1.5) / 6).epsilon(1e-14));
  CHECK(std::round(s.predicted * 1000) == 1187);
  CHECK(s.r_tilde == doctest::Approx(std::sqrt(1105.0 / 2) / s.scale.value()).epsilon(1e-14));
  CHECK_THROWS_AS(local_radius(4, ExactReal::rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(local_radius(1, ExactReal::inv_sqrt3()), std::invalid_argument);
}

TEST_CASE("the neighbor formula equals the circumradius of actual polygon vertices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> pick_d(2, 400), pick_q(2, 200);
  int checked = 0;
  for (int round = 0; round < 50; ++round) {
    const Int Q = pick_q(rng);
    const LatticePolygon poly = build_polygon(DomainSpec::square(), Q);
    const ScaleFactor scale = scale_factor(DomainSpec::square(), Q);
    for (int t = 0; t < 20; ++t) {
      // lambda = sqrt(d) - floor(sqrt(d)), irrational in (0,1).
      Int d = pick_d(rng);
      const auto root = static_cast<Int>(std::floor(std::sqrt(static_cast<double>(d))));
      if (root * root == d) ++d;
      const Int r = static_cast<Int>(std::floor(std::sqrt(static_cast<double>(d))));
      const ExactReal lambda = ExactReal::surd(-r, d, 1);
      const std::size_t i = bracketing_vertex(poly, lambda.approx());
      const LatticePoint prev = poly.vertices[(i + poly.vertices.size() - 1) % poly.vertices.size()];
      const CurvatureSample s = local_radius(Q, lambda);
      REQUIRE(circumradius_squared(prev, poly.vertices[i], poly.vertices[i + 1]) == s.r_squared);
      REQUIRE(s.neighbors.right.num * s.q1 - s.neighbors.left.num * s.q2 == 1);
      REQUIRE(s.q1 <= Q);
      REQUIRE(s.q2 <= Q);
      // Scaling the polygon scales the radius by 1/R(Q).
      const double geometric =
          scaled_circumradius(prev, poly.vertices[i], poly.vertices[i + 1], scale);
      REQUIRE(std::fabs(geometric - s.r_tilde) < 1e-10);
      ++checked;
    }
  }
  CHECK(checked == 1000);
}

TEST_CASE("limit curve radius and the lim sup band") {
  CHECK(limit_curve_radius(0) == doctest::Approx(2.0 / 3));
  CHECK(limit_curve_radius(1) == doctest::Approx(1.8856).epsilon(1e-4));
  for (int i = 0; i <= 100; ++i) {
    const double l = i / 100.0;
    const CurvatureBounds b = curvature_bounds(l);
    CHECK(b.lower < b.upper);
    CHECK(b.limit_curve_radius < b.lower);
    CHECK(b.limit_curve_radius == doctest::Approx(limit_curve_radius(l)));
  }
  const CurvatureBounds b = curvature_bounds(1 / std::sqrt(3.0));
  CHECK(b.lower == doctest::Approx(2.532).epsilon(1e-3));
  CHECK(b.upper == doctest::Approx(5.064).epsilon(1e-3));
}

TEST_CASE("osculating circle of C from three close points") {
  const double l = 0.5, h = 1e-4;
  const double r = circumradius(curve_C(l - h), curve_C(l), curve_C(l + h));
  CHECK(std::fabs(r - limit_curve_radius(l)) < 1e-6);
}

TEST_CASE("lim sup formula endpoints") {
  const double golden = (std::sqrt(5.0) - 1) / 2;
  for (double l : {0.0, 0.3, 1.0}) {
    CHECK(limsup_from_ratio_liminf(l, golden) == doctest::Approx(curvature_bounds(l).lower).epsilon(1e-14));
    CHECK(limsup_from_ratio_liminf(l, 0.0) == doctest::Approx(curvature_bounds(l).upper).epsilon(1e-14));
  }
  CHECK(convergent_ratio_liminf(ExactReal::parse("cf:[0;(1)]")).value() == doctest::Approx(golden).epsilon(1e-12));
  CHECK(convergent_ratio_liminf(ExactReal::inv_sqrt3()).value() ==
        doctest::Approx((std::sqrt(3.0) - 1) / 2).epsilon(1e-12));
  CHECK_FALSE(convergent_ratio_liminf(ExactReal::euler_minus_two()).has_value());
}

TEST_CASE("traces: incremental and full recomputation agree") {
  TraceOptions full;
  full.incremental = false;
  const auto a = curvature_trace(ExactReal::euler_minus_two(), 2, 400);
  const auto b = curvature_trace(ExactReal::euler_minus_two(), 2, 400, full);
  REQUIRE(a.size() == 399);
  REQUIRE(b.size() == 399);
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].order == static_cast<Int>(i) + 2);
    REQUIRE(a[i].scale == b[i].scale);
    REQUIRE(a[i].r_squared == b[i].r_squared);
    REQUIRE(a[i].scale == scale_factor(DomainSpec::square(), a[i].order));
  }
  CHECK_THROWS_AS(curvature_trace(ExactReal::inv_sqrt3(), 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(curvature_trace(ExactReal::inv_sqrt3(), 10, 9), std::invalid_argument);
  CHECK_THROWS_AS(curvature_trace(Fraction{3, 7}, Side::Plus, 5, 10), std::invalid_argument);
}

TEST_CASE("the asymptotic predictor tracks the exact radius") {
  for (const auto& s : curvature_trace(ExactReal::inv_sqrt3(), 500, 1500))
    REQUIRE(std::fabs(s.r_tilde / s.predicted - 1) < 0.05);
}

TEST_CASE("badly approximable lambda stays above the lim inf bound") {
  // 1/sqrt3 has partial quotients at most B = 2.
  const double l = 1 / std::sqrt(3.0);
  const double floor = 3.0 / 16 * kPi2 * std::pow(1 + l * l, 1.5) / 6 * 0.9;
  for (const auto& s : curvature_trace(ExactReal::inv_sqrt3(), 100, 5000)) REQUIRE(s.r_tilde >= floor);
  // Same for the golden-type tail [0;(1)], B = 1.
  const ExactReal g = ExactReal::parse("cf:[0;(1)]");
  const double lg = g.approx();
  const double gfloor = 2.0 / 9 * kPi2 * std::pow(1 + lg * lg, 1.5) / 6 * 0.9;
  for (const auto& s : curvature_trace(g, 100, 3000)) REQUIRE(s.r_tilde >= gfloor);
}

TEST_CASE("one-sided radii at a rational tend to zero") {
  const auto trace = curvature_trace(Fraction{1, 2}, Side::Plus, 10, 2000);
  double max_tail = 0;
  for (const auto& s : trace)
    if (s.order >= 1000) max_tail = std::max(max_tail, s.r_tilde);
  CHECK(max_tail < 0.05);
  // Decay like 1/Q: Q r~ stays bounded.
  for (const auto& s : trace) REQUIRE(s.r_tilde * static_cast<double>(s.order) < 10);
  CHECK(trace.back().r_tilde < trace.front().r_tilde);
  const auto minus = curvature_trace(Fraction{1, 2}, Side::Minus, 10, 2000);
  CHECK(minus.back().r_tilde < 0.01);
}

TEST_CASE("window estimates") {
  const LimsupLiminfEstimate s = limsup_liminf_estimate(ExactReal::inv_sqrt3(), 5000);
  CHECK(s.window_low == 1250);
  CHECK(s.window_high == 5000);
  CHECK(s.sup_estimate > s.bounds.lower);
  CHECK(s.sup_estimate < s.bounds.upper);
  REQUIRE(s.exact_limsup.has_value());
  CHECK(*s.exact_limsup == doctest::Approx(s.sup_estimate).epsilon(0.01));

  const LimsupLiminfEstimate e3 = limsup_liminf_estimate(ExactReal::euler_minus_two(), 1000);
  const LimsupLiminfEstimate e4 = limsup_liminf_estimate(ExactReal::euler_minus_two(), 10000);
  CHECK(e4.inf_estimate < e3.inf_estimate);
  CHECK_FALSE(e4.exact_limsup.has_value());
  CHECK_THROWS_AS(limsup_liminf_estimate(ExactReal::rational(1, 3), 100), std::invalid_argument);
}

TEST_CASE("1/sqrt3 trace from 50 to 5000 stays above one half") {
  double least = 1e300;
  for (const auto& s : curvature_trace(ExactReal::inv_sqrt3(), 50, 5000)) least = std::min(least, s.r_tilde);
  INFO("min r~ = " << least);
  CHECK(least > 0.5);
}
