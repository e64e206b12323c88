#pragma once

#include <string>
#include <string_view>

#include "jarnik/number_theory.hpp"

namespace jarnik {

enum class DomainKind { Square, Diamond, Octagon, Ball };

/// One of the dihedrally symmetric regions: the square E = [-1,1]^2, the
/// diamond D = {|x|+|y| <= 1}, the octagon O_delta with vertices (+-1,0),
/// (0,+-1), (+-t,+-t) for t = delta/(1+delta), or the ball
/// B_p = {|x|^p + |y|^p <= 1}. All regions are closed.
class DomainSpec {
 public:
  static DomainSpec square();
  static DomainSpec diamond();
  static DomainSpec octagon(Fraction delta);
  static DomainSpec ball(Fraction p);

  /// `square`, `diamond`, `octagon:<delta>`, `ball:<p>`; parameters are
  /// decimals, `a/b`, or `inf` (an alias for the square).
  static DomainSpec parse(std::string_view text);

  DomainKind kind() const { return kind_; }
  // delta for octagons, p for balls, 1 otherwise.
  Fraction parameter() const { return parameter_; }
  std::string name() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;

 private:
  DomainSpec(DomainKind k, Fraction param) : kind_(k), parameter_(param) {}
  DomainKind kind_ = DomainKind::Square;
  Fraction parameter_{1, 1};
};

/// Parses a positive decimal, `a/b`, or integer into an exact fraction.
Fraction parse_positive_rational(std::string_view text);

/// Membership of (x, y) in the closed region.
bool contains(const DomainSpec& s, Fraction x, Fraction y);

/// Largest a >= 0 with (q/Q, a/Q) in S, or -1 when no such a exists.
Int column_height(const DomainSpec& s, Int Q, Int q);

/// Moments over S(lambda) = {(x,y) in S : x > 0, 0 < y <= lambda x}.
struct MomentPair {
  double mx = 0.0;  // integral of x
  double my = 0.0;  // integral of y
};

MomentPair moment_integrals(const DomainSpec& s, double lambda);

/// c(S) with R_S(Q) ~ c(S) Q^3, equal to 6 (mx(1) + my(1)) / pi^2.
double scale_factor_asymptote(const DomainSpec& s);

}  // namespace jarnik
