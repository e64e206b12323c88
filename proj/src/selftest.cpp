#include "jarnik/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jarnik/limit_curves.hpp"

namespace jarnik {

namespace {

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<Fraction>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

std::string point_str(LatticePoint p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

class Recorder {
 public:
  template <typename Fn>
  void check(std::string name, Fn&& fn) {
    SelftestItem item{std::move(name), false, {}};
    try {
      item.detail = fn();
      item.passed = item.detail.empty();
    } catch (const std::exception& e) {
      item.detail = std::string("exception: ") + e.what();
    }
    items.push_back(std::move(item));
  }
  std::vector<SelftestItem> items;
};

std::string expect_rational(const BigRational& got, const BigRational& want) {
  return got == want ? std::string() : "got " + got.str() + ", expected " + want.str();
}

}  // namespace

bool SelftestReport::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const SelftestItem& i) { return i.passed; });
}

std::string SelftestReport::text() const {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& item : items) {
    if (item.passed) {
      ++passed;
      out << "PASS " << item.name << '\n';
    } else {
      out << "FAIL " << item.name << ": " << item.detail << '\n';
    }
  }
  out << passed << '/' << items.size() << " checks passed\n";
  return out.str();
}

SelftestReport run_selftest(const SelftestHooks& hooks) {
  Recorder r;
  const DomainSpec square = DomainSpec::square();
  const ExactReal inv_sqrt3 = ExactReal::inv_sqrt3();

  r.check("V_4 has 48 vectors", [&] {
    const auto n = primitive_vectors(square, 4).size();
    return n == 48 ? std::string() : "got " + std::to_string(n);
  });

  r.check("P_4 vertices from (0,0) to (24,30)", [&] {
    const std::vector<LatticePoint> want{{0, 0},   {4, 1},   {7, 2},   {9, 3},   {12, 5},  {16, 8},  {17, 9},
                                         {20, 13}, {22, 16}, {23, 18}, {24, 21}, {25, 25}, {25, 26}, {24, 30}};
    const LatticePolygon poly = build_polygon(square, 4);
    if (poly.vertices.size() != 48) return "polygon has " + std::to_string(poly.vertices.size()) + " vertices";
    for (std::size_t i = 0; i < want.size(); ++i)
      if (poly.vertices[i] != want[i])
        return "vertex " + std::to_string(i) + " is " + point_str(poly.vertices[i]) + ", expected " +
               point_str(want[i]);
    if (poly.vertices.back() != LatticePoint{-1, 0}) return "last vertex is " + point_str(poly.vertices.back());
    return std::string();
  });

  r.check("fundamental vertex at Q=4, lambda=1/sqrt3 is (9,3)", [&] {
    const LatticePoint v = fundamental_vertex(square, 4, inv_sqrt3);
    return v == LatticePoint{9, 3} ? std::string() : "got " + point_str(v);
  });

  r.check("circumradius^2 of (7,2),(9,3),(12,5) is 1105/2",
          [&] { return expect_rational(hooks.circumradius({7, 2}, {9, 3}, {12, 5}), BigRational(1105, 2)); });

  r.check("circumradius^2 of (4,1),(7,2),(9,3) is 725/2",
          [&] { return expect_rational(hooks.circumradius({4, 1}, {7, 2}, {9, 3}), BigRational(725, 2)); });

  r.check("r_4(1/sqrt3)^2 is 1105/2",
          [&] { return expect_rational(local_radius(4, inv_sqrt3).r_squared, BigRational(1105, 2)); });

  r.check("r_4(1/2+)^2 is 1105/2 and r_4(1/2-)^2 is 725/2", [&] {
    std::string d = expect_rational(local_radius(4, Fraction{1, 2}, Side::Plus).r_squared, BigRational(1105, 2));
    if (d.empty()) d = expect_rational(local_radius(4, Fraction{1, 2}, Side::Minus).r_squared, BigRational(725, 2));
    return d;
  });

  r.check("Farey fractions of order 4", [&] {
    const std::string got = join(farey_sequence(4));
    return got == "0/1 1/4 1/3 1/2 2/3 3/4 1/1" ? std::string() : "got " + got;
  });

  r.check("Farey neighbors of 1/sqrt3 at order 15 are 4/7, 7/12", [&] {
    const FareyNeighbors n = farey_neighbors(inv_sqrt3, 15);
    return n.left == Fraction{4, 7} && n.right == Fraction{7, 12} ? std::string()
                                                                    : "got " + n.left.str() + ", " + n.right.str();
  });

  r.check("continued fraction of 1/sqrt3", [&] {
    const std::string got = join(cf_expand(inv_sqrt3, 12).quotients);
    return got == "1,1,2,1,2,1,2,1,2,1,2,1" ? std::string() : "got " + got;
  });

  r.check("continued fraction of e-2", [&] {
    const std::string got = join(cf_expand(ExactReal::euler_minus_two(), 12).quotients);
    return got == "1,2,1,1,4,1,1,6,1,1,8,1" ? std::string() : "got " + got;
  });

  r.check("convergents of 1/sqrt3", [&] {
    const std::string got = join(convergents(cf_expand(inv_sqrt3, 8), 7));
    return got == "0/1 1/1 1/2 3/5 4/7 11/19 15/26" ? std::string() : "got " + got;
  });

  r.check("C'_2 is the unit circle and C'_1 is C_1", [&] {
    for (int i = 0; i <= 16; ++i) {
      const double lambda = i / 16.0;
      const Point c = curve_Cp(2.0, lambda);
      if (std::fabs(std::hypot(c.x, c.y) - 1.0) > 1e-9) return "off the circle at lambda=" + std::to_string(lambda);
      if (distance(curve_Cp(1.0, lambda), curve_C1(lambda)) > 1e-12)
        return "C'_1 differs from C_1 at lambda=" + std::to_string(lambda);
    }
    return std::string();
  });

  return SelftestReport{std::move(r.items)};
}

}  // namespace jarnik
