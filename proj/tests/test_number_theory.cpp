#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jarnik/continued_fraction.hpp"
#include "jarnik/number_theory.hpp"
#include "oracles.hpp"

using namespace jarnik;

TEST_CASE("integer helpers") {
  CHECK(gcd(12, -18) == 6);
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(0, 0) == 0);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-6, 3) == -2);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2 + 1, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("fractions reduce and order exactly") {
  const Fraction f{6, -8};
  CHECK(f.num == -3);
  CHECK(f.den == 4);
  CHECK(f.str() == "-3/4");
  CHECK(Fraction{1, 3} < Fraction{1, 2});
  CHECK(Fraction{2, 4} == Fraction{1, 2});
  // Cross products beyond 64 bits.
  CHECK(Fraction{INT64_MAX - 1, INT64_MAX} < Fraction{INT64_MAX, INT64_MAX - 2});
  CHECK_THROWS_AS(Fraction(1, 0), std::invalid_argument);
}

TEST_CASE("Moebius sieve matches trial division") {
  const MoebiusTable mu = moebius_sieve(10000);
  for (Int n = 1; n <= 10000; ++n) REQUIRE(mu(n) == oracle::moebius(n));
}

TEST_CASE("Moebius divisor sums vanish above 1") {
  const MoebiusTable mu = moebius_sieve(10000);
  std::vector<int> sums(10001, 0);
  for (Int d = 1; d <= 10000; ++d)
    for (Int n = d; n <= 10000; n += d) sums[static_cast<std::size_t>(n)] += mu(d);
  CHECK(sums[1] == 1);
  for (std::size_t n = 2; n <= 10000; ++n) REQUIRE(sums[n] == 0);
}

TEST_CASE("partial sums of mu(q)/q^2 approach 6/pi^2") {
  const long double target = 6.0L / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>);
  for (Int Q : {100, 1000, 10000}) CHECK(std::fabs(static_cast<double>(partial_zeta_inverse(Q) - target)) < 1.0 / Q);
  CHECK(partial_zeta_inverse(1) == 1.0L);
}

TEST_CASE("coprime counts and sums agree with enumeration") {
  const CoprimeCounter counter(60);
  for (Int q = 1; q <= 60; ++q) {
    for (Int m = 0; m <= 80; ++m) {
      Int count = 0, sum = 0;
      for (Int a = 1; a <= m; ++a)
        if (std::gcd(a, q) == 1) {
          ++count;
          sum += a;
        }
      REQUIRE(counter.count(q, m) == count);
      REQUIRE(counter.sum(q, m) == sum);
    }
  }
}

TEST_CASE("Farey sequences") {
  std::vector<Fraction> four{{0, 1}, {1, 4}, {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 1}};
  CHECK(farey_sequence(4) == four);

  for (Int Q = 1; Q <= 40; ++Q) {
    std::vector<Fraction> brute;
    for (Int q = 1; q <= Q; ++q)
      for (Int a = 0; a <= q; ++a)
        if (std::gcd(a, q) == 1) brute.emplace_back(a, q);
    std::sort(brute.begin(), brute.end());
    const auto seq = farey_sequence(Q);
    REQUIRE(seq == brute);
    for (std::size_t i = 1; i < seq.size(); ++i)
      REQUIRE(seq[i].num * seq[i - 1].den - seq[i - 1].num * seq[i].den == 1);
  }
}

TEST_CASE("exact reals: parsing, comparison, approximation") {
  const ExactReal s = ExactReal::inv_sqrt3();
  CHECK(s.compare(Fraction{4, 7}) > 0);
  CHECK(s.compare(Fraction{7, 12}) < 0);
  CHECK(s.compare(Fraction{15, 26}) > 0);
  CHECK(s.compare(Fraction{11, 19}) < 0);
  CHECK(s.approx() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(ExactReal::euler_minus_two().approx() == doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-15));

  CHECK(ExactReal::parse("rat:6/8").as_fraction() == Fraction{3, 4});
  CHECK(ExactReal::surd(1, 9, 8).as_fraction() == Fraction{1, 2});
  CHECK(ExactReal::parse("surd:(-1+sqrt(5))/2").compare(Fraction{5, 8}) < 0);
  CHECK(ExactReal::parse("surd:(-1+sqrt(5))/2").compare(Fraction{3, 5}) > 0);
  CHECK(ExactReal::parse("cf:[0;(7)]").approx() == doctest::Approx((std::sqrt(53.0) - 7) / 2).epsilon(1e-14));
  CHECK(ExactReal::parse("cf:[0;2,3]").as_fraction() == Fraction{3, 7});
  CHECK(ExactReal::parse("const:e-2").str() == "const:e-2");

  for (const char* bad : {"", "rat:", "rat:1/0", "surd:(1+sqrt(x))/2", "cf:[1;2]", "const:pi", "cf:[0;1,(0)]"})
    CHECK_THROWS_AS(ExactReal::parse(bad), std::invalid_argument);

  for (const auto& item : oracle::irrational_corpus()) {
    const ExactReal x = ExactReal::parse(item.text);
    CHECK(x.approx() == doctest::Approx(item.value.convert_to<double>()).epsilon(1e-14));
  }
}

TEST_CASE("continued fraction expansions") {
  CHECK(cf_expand(ExactReal::inv_sqrt3(), 12).quotients == std::vector<Int>{1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1});
  CHECK(cf_expand(ExactReal::euler_minus_two(), 12).quotients ==
        std::vector<Int>{1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8, 1});
  CHECK(cf_expand(ExactReal::inv_sqrt3(), 3).kind == CfKind::PeriodicQuadratic);
  CHECK(cf_expand(ExactReal::euler_minus_two(), 3).kind == CfKind::PatternGenerated);

  const ContinuedFraction r = cf_expand(ExactReal::rational(3, 7), 10);
  CHECK(r.kind == CfKind::Rational);
  CHECK(r.terminated);
  CHECK(r.quotients == std::vector<Int>{2, 3});
  CHECK(convergents(r, 10).back() == Fraction{3, 7});

  const std::vector<Fraction> conv = convergents(cf_expand(ExactReal::inv_sqrt3(), 10), 7);
  CHECK(conv == std::vector<Fraction>{{0, 1}, {1, 1}, {1, 2}, {3, 5}, {4, 7}, {11, 19}, {15, 26}});

  CHECK_THROWS(cf_expand(ExactReal::rational(3, 2), 4));
}

TEST_CASE("quotients of the corpus reproduce the high-precision values") {
  // Independent oracle: the Gauss map applied to 50-digit values.
  for (const auto& item : oracle::irrational_corpus()) {
    const ExactReal x = ExactReal::parse(item.text);
    const auto quotients = cf_expand(x, 15).quotients;
    oracle::Real v = item.value;
    for (Int b : quotients) {
      v = 1 / v;
      const auto floor = static_cast<Int>(boost::multiprecision::floor(v));
      REQUIRE_MESSAGE(floor == b, item.text);
      v -= floor;
    }
  }
}

TEST_CASE("Farey neighbors of 1/sqrt3 at order 15") {
  const FareyNeighbors n = farey_neighbors(ExactReal::inv_sqrt3(), 15);
  CHECK(n.left == Fraction{4, 7});
  CHECK(n.right == Fraction{7, 12});
}

TEST_CASE("Farey neighbors agree with a scan over denominators") {
  for (const auto& item : oracle::irrational_corpus()) {
    const ExactReal x = ExactReal::parse(item.text);
    for (Int Q = 1; Q <= 200; ++Q) {
      const FareyNeighbors want = oracle::brute_neighbors(item.value, Q);
      const FareyNeighbors cf = farey_neighbors(x, Q);
      const FareyNeighbors sb = farey_neighbors_stern_brocot(x, Q);
      REQUIRE_MESSAGE(cf.left == want.left, item.text << " Q=" << Q);
      REQUIRE_MESSAGE(cf.right == want.right, item.text << " Q=" << Q);
      REQUIRE(sb.left == want.left);
      REQUIRE(sb.right == want.right);
      REQUIRE(cf.right.num * cf.left.den - cf.left.num * cf.right.den == 1);
    }
  }
  CHECK_THROWS_AS(farey_neighbors(ExactReal::rational(1, 2), 10), std::invalid_argument);
}

TEST_CASE("one-sided Farey neighbors of rationals") {
  CHECK(farey_neighbors_sided(Fraction{1, 2}, Side::Plus, 4).right == Fraction{2, 3});
  CHECK(farey_neighbors_sided(Fraction{1, 2}, Side::Minus, 4).left == Fraction{1, 3});
  CHECK(farey_neighbors_sided(Fraction{1, 2}, Side::Minus, 4).right == Fraction{1, 2});
  for (Int Q = 3; Q <= 60; ++Q) {
    const auto seq = farey_sequence(Q);
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
      REQUIRE(farey_neighbors_sided(seq[i], Side::Plus, Q).right == seq[i + 1]);
      REQUIRE(farey_neighbors_sided(seq[i], Side::Minus, Q).left == seq[i - 1]);
    }
  }
  CHECK_THROWS_AS(farey_neighbors_sided(Fraction{3, 7}, Side::Plus, 5), std::invalid_argument);
  CHECK(parse_side("+") == Side::Plus);
  CHECK(parse_side("-") == Side::Minus);
  CHECK_THROWS_AS(parse_side("up"), std::invalid_argument);
}
