#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jarnik/number_theory.hpp"

namespace jarnik {

/// A quadratic surd (P + sqrt(D)) / Q with D > 0 not a perfect square.
struct QuadraticSurd {
  Int p = 0;
  Int d = 2;
  Int q = 1;
};

enum class PatternConstant { EulerMinusTwo };

/// Continued fraction [0; prefix..., (period...)] given by its quotients.
struct PeriodicQuotients {
  std::vector<Int> prefix;  // b_1, b_2, ... before the period
  std::vector<Int> period;  // nonempty
};

/// Stateful generator of partial quotients b_0, b_1, ...; empty once a
/// rational expansion terminates.
class QuotientStream {
 public:
  virtual ~QuotientStream() = default;
  virtual std::optional<Int> next() = 0;
};

/// A real number given exactly: a rational, a quadratic surd, a named
/// constant with a known quotient pattern, or an eventually periodic
/// continued fraction.
class ExactReal {
 public:
  using Repr = std::variant<Fraction, QuadraticSurd, PatternConstant, PeriodicQuotients>;

  static ExactReal rational(Int num, Int den);
  static ExactReal rational(Fraction f);
  // (p + sqrt(d)) / q; a perfect-square d collapses to a rational.
  static ExactReal surd(Int p, Int d, Int q);
  static ExactReal euler_minus_two();
  static ExactReal inv_sqrt3();
  static ExactReal periodic(std::vector<Int> prefix, std::vector<Int> period);

  /// Parses `rat:a/b`, `surd:(P+sqrt(D))/Q`, `const:e-2`, `const:inv-sqrt3`,
  /// `cf:[0;b1,b2,...,(per1,per2,...)]`. Throws std::invalid_argument.
  static ExactReal parse(std::string_view text);

  const Repr& repr() const { return repr_; }
  bool is_rational() const { return std::holds_alternative<Fraction>(repr_); }
  std::optional<Fraction> as_fraction() const;
  bool is_periodic() const;

  std::unique_ptr<QuotientStream> quotients() const;

  // Exact sign of (this - f).
  int compare(Fraction f) const;
  double approx() const;
  std::string str() const;

 private:
  explicit ExactReal(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

enum class CfKind { Rational, PeriodicQuadratic, PatternGenerated };

/// First partial quotients of an expansion [0; b_1, b_2, ...].
struct ContinuedFraction {
  CfKind kind = CfKind::Rational;
  std::vector<Int> quotients;  // b_1, b_2, ...
  bool terminated = false;     // true when a rational expansion ended
};

ContinuedFraction cf_expand(const ExactReal& x, std::size_t n_terms);

/// Convergents h_n/k_n for n = 1..count, seeded with h_0=1, h_1=0, k_0=0, k_1=1.
/// Stops early when the quotients run out; the last entry of a terminated
/// expansion is the value itself.
std::vector<Fraction> convergents(const ContinuedFraction& cf, std::size_t count);

/// Two consecutive Farey fractions of order Q, left < right.
struct FareyNeighbors {
  Fraction left;
  Fraction right;
  Int order = 1;
};

enum class Side { Plus, Minus };

/// Farey neighbors of an irrational via convergents and secondary convergents.
FareyNeighbors farey_neighbors(const ExactReal& lambda, Int Q);

/// Same query by descending the Stern-Brocot tree.
FareyNeighbors farey_neighbors_stern_brocot(const ExactReal& lambda, Int Q);

/// (lambda, successor) for Side::Plus, (predecessor, lambda) for Side::Minus.
FareyNeighbors farey_neighbors_sided(Fraction lambda, Side side, Int Q);

Side parse_side(std::string_view text);

}  // namespace jarnik
