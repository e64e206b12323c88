#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "jarnik/analysis.hpp"

using namespace jarnik;

namespace {

// All eight images of a densely sampled fundamental arc.
std::vector<Point> dense_curve(const LimitCurve& curve, int samples) {
  std::vector<Point> out;
  for (int i = 0; i <= samples; ++i) {
    const Point c = curve.eval(static_cast<double>(i) / samples);
    for (int sx : {1, -1})
      for (int sy : {1, -1}) {
        out.push_back({sx * c.x, sy * c.y});
        out.push_back({sx * c.y, sy * c.x});
      }
  }
  return out;
}

double brute_distance(Point p, const std::vector<Point>& curve) {
  double best = 1e300;
  for (Point c : curve) best = std::min(best, distance(p, c));
  return best;
}

// Brute-force sup distance over the vertices and edge midpoints.
double brute_sup(const std::vector<Point>& vertices, const std::vector<Point>& curve) {
  double worst = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point a = vertices[i], b = vertices[(i + 1) % vertices.size()];
    worst = std::max({worst, brute_distance(a, curve), brute_distance({(a.x + b.x) / 2, (a.y + b.y) / 2}, curve)});
  }
  return worst;
}

double sup_distance(const DomainSpec& s, Int Q, const LimitCurve& c) {
  return distance_to_curve(scale_polygon(build_polygon(s, Q)), c).sup_distance;
}

}  // namespace

TEST_CASE("points on the curve are at distance zero") {
  for (const LimitCurve& c : {LimitCurve::C(), LimitCurve::C1(), LimitCurve::Cdelta(2), LimitCurve::Cp(2),
                              LimitCurve::Cp(0.5)}) {
    // The whole closed curve, traversed in order through its eight images.
    std::vector<Point> closed;
    for (int k = 0; k < 8; ++k)
      for (int i = 0; i < 2000; ++i) {
        const double l = (k % 2 ? 2000 - i : i) / 2000.0;
        Point q = c.eval(l);
        // Rotate the arc by k * 45 degrees' worth of dihedral images.
        if (k % 2) q = {-q.y, -q.x};
        for (int r = 0; r < k / 2; ++r) q = {-q.y, q.x};
        closed.push_back(q);
      }
    const CurveDistance d = distance_to_curve(closed, c);
    CHECK(d.sup_distance < 1e-6);
    std::vector<Point> pts;
    for (int i = 0; i <= 200; ++i) {
      const Point q = c.eval(i / 200.0);
      pts.push_back(i % 2 ? Point{-q.y, q.x} : Point{q.x, -q.y});
    }
    for (Point p : pts) CHECK(distance_to_curve(std::vector<Point>{p}, c).sup_distance < 1e-7);
  }
}

TEST_CASE("exact parabola distance agrees with dense sampling") {
  const std::vector<Point> curve = dense_curve(LimitCurve::C(), 20000);
  for (double x = -1.3; x <= 1.3; x += 0.1)
    for (double y = -1.3; y <= 1.3; y += 0.13) {
      const Point p{x, y};
      const double exact = distance_to_parabola_C(p);
      const double brute = brute_distance(p, curve);
      REQUIRE(exact <= brute + 1e-12);
      REQUIRE(brute - exact < 1e-4);
    }
}

TEST_CASE("sampled distance agrees with dense brute force") {
  const ScaledPolygon p = scale_polygon(build_polygon(DomainSpec::ball({2, 1}), 12));
  const double want = brute_sup(p.vertices, dense_curve(LimitCurve::Cp(2), 20000));
  // The unit circle gives a closed form as a second oracle.
  double circle = 0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Point a = p.vertices[i], b = p.vertices[(i + 1) % p.vertices.size()];
    circle = std::max({circle, std::fabs(std::hypot(a.x, a.y) - 1),
                       std::fabs(std::hypot((a.x + b.x) / 2, (a.y + b.y) / 2) - 1)});
  }
  const CurveDistance d = distance_to_curve(p, LimitCurve::Cp(2));
  CHECK(d.sup_distance == doctest::Approx(want).epsilon(1e-3));
  CHECK(d.sup_distance >= circle - 1e-15);
  CHECK(d.sup_distance - circle < 1e-4);
  CHECK(d.bound == doctest::Approx(d.sup_distance + d.max_edge / 4));
  CHECK_THROWS_AS(distance_to_curve(p, LimitCurve::Cp(2), 999), std::invalid_argument);
}

TEST_CASE("order-4 square against C") {
  const ScaledPolygon p = scale_polygon(build_polygon(DomainSpec::square(), 4));
  const double d = distance_to_curve(p, LimitCurve::C()).sup_distance;
  // Regression baseline.
  CHECK(d == doctest::Approx(0.016293479966550204).epsilon(1e-12));
  const double brute = brute_sup(p.vertices, dense_curve(LimitCurve::C(), 200000));
  CHECK(d == doctest::Approx(brute).epsilon(1e-5));
}

TEST_CASE("square polygons approach C") {
  const double d25 = sup_distance(DomainSpec::square(), 25, LimitCurve::C());
  const double d100 = sup_distance(DomainSpec::square(), 100, LimitCurve::C());
  const double d400 = sup_distance(DomainSpec::square(), 400, LimitCurve::C());
  CHECK(d25 > d100);
  CHECK(d100 > d400);

  // Rate diagnostic: sup_distance Q / log Q stays bounded.
  for (const auto& r : convergence_table(DomainSpec::square(), {50, 100, 200, 400, 800}, LimitCurve::C()))
    CHECK(r.sup_distance * static_cast<double>(r.order) / std::log(static_cast<double>(r.order)) < 0.05);
}

TEST_CASE("every pairing shrinks along a geometric ladder") {
  const std::vector<std::pair<DomainSpec, LimitCurve>> pairings{
      {DomainSpec::square(), LimitCurve::C()},
      {DomainSpec::diamond(), LimitCurve::C1()},
      {DomainSpec::octagon({2, 1}), LimitCurve::Cdelta(2)},
      {DomainSpec::octagon({1, 2}), LimitCurve::Cdelta(0.5)},
      {DomainSpec::ball({2, 1}), LimitCurve::Cp(2)},
      {DomainSpec::ball({1, 2}), LimitCurve::Cp(0.5)},
      {DomainSpec::ball({3, 1}), LimitCurve::Cp(3)},
  };
  for (const auto& [s, c] : pairings) {
    // Ratio-4 ladder: at ratio 2 the distances genuinely fluctuate upward at
    // times (e.g. square from Q = 100 to 200), an arithmetic effect.
    const auto rows = convergence_table(s, {400, 25, 100}, c);
    REQUIRE(rows.size() == 3);
    CHECK(rows.front().order == 25);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].order > rows[i - 1].order);
      CHECK_MESSAGE(rows[i].sup_distance <= rows[i - 1].sup_distance * 1.05, s.name() << " Q=" << rows[i].order);
      CHECK(rows[i].bound >= rows[i].sup_distance);
    }
    CHECK_MESSAGE(rows.back().sup_distance < 2e-3, s.name());
  }
}

TEST_CASE("diamond at Q = 500 and the octagon that equals it") {
  const auto diamond = convergence_table(DomainSpec::diamond(), {60, 500}, LimitCurve::C1());
  const auto octagon = convergence_table(DomainSpec::octagon({1, 1}), {60, 500}, LimitCurve::C1());
  CHECK(diamond[1].sup_distance < 0.01);
  for (std::size_t i = 0; i < diamond.size(); ++i) {
    CHECK(diamond[i].sup_distance == octagon[i].sup_distance);
    CHECK(diamond[i].bound == octagon[i].bound);
  }
}

TEST_CASE("mismatched pairings are rejected") {
  CHECK_THROWS_AS(convergence_table(DomainSpec::diamond(), {10}, LimitCurve::C()), std::invalid_argument);
  CHECK_THROWS_AS(convergence_table(DomainSpec::square(), {10}, LimitCurve::C1()), std::invalid_argument);
  CHECK_THROWS_AS(convergence_table(DomainSpec::ball({2, 1}), {10}, LimitCurve::Cdelta(2)), std::invalid_argument);
  CHECK_NOTHROW(convergence_table(DomainSpec::ball({1, 1}), {10}, LimitCurve::C1()));
  CHECK_THROWS_AS(convergence_table(DomainSpec::square(), {0}, LimitCurve::C()), std::invalid_argument);
}

TEST_CASE("parallel rows are deterministic") {
  setenv("JARNIK_THREADS", "1", 1);
  const auto one = convergence_table(DomainSpec::ball({3, 2}), {30, 10, 20}, LimitCurve::Cp(1.5));
  setenv("JARNIK_THREADS", "3", 1);
  const auto three = convergence_table(DomainSpec::ball({3, 2}), {30, 10, 20}, LimitCurve::Cp(1.5));
  unsetenv("JARNIK_THREADS");
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].order == three[i].order);
    CHECK(one[i].sup_distance == three[i].sup_distance);
  }
}

TEST_CASE("lattice sums against their main terms") {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const LemmaReport r = lemma_check({1000}, {0.0, 1.0});
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].vertex == LatticePoint{0, 0});
  CHECK(r.rows[0].x_error == 0.0);
  const double main = 2e9 / pi2;
  CHECK(std::fabs(static_cast<double>(r.rows[1].vertex.x) / main - 1) < 0.01);

  const LemmaReport wide = lemma_check({250, 500, 1000, 2000}, {0.1, 0.25, 1 / std::sqrt(2.0), 1.0});
  CHECK(wide.rows.size() == 16);
  CHECK(wide.max_x_error < 3);
  CHECK(wide.max_y_error < 3);
  CHECK_THROWS_AS(lemma_check({}, {1.0}), std::invalid_argument);
}

TEST_CASE("lattice sums agree with the moment integrals") {
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  const Int Q = 1000;
  const double q3 = static_cast<double>(Q) * Q * Q;
  for (const DomainSpec& s : {DomainSpec::diamond(), DomainSpec::octagon({2, 1}), DomainSpec::ball({2, 1})}) {
    const FundamentalArc arc(s, Q);
    for (double lambda : {0.25, 0.5, 0.75, 1.0}) {
      const LatticePoint v = arc.vertex(lambda);
      const MomentPair m = moment_integrals(s, lambda);
      const double rel_x = static_cast<double>(v.x) / (q3 / zeta2 * m.mx) - 1;
      const double rel_y = static_cast<double>(v.y) / (q3 / zeta2 * m.my) - 1;
      CHECK_MESSAGE(std::fabs(rel_x) <= 10 * std::log(Q) / Q, s.name() << " lambda=" << lambda);
      CHECK_MESSAGE(std::fabs(rel_y) <= 10 * std::log(Q) / Q, s.name() << " lambda=" << lambda);
    }
  }
}
