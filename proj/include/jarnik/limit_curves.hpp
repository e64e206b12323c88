#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jarnik/domains.hpp"
#include "jarnik/geometry.hpp"
#include "jarnik/special_functions.hpp"

namespace jarnik {

// Fundamental arcs, lambda in [0, 1]; each starts at (0, -1).

/// Parabola y = 3x^2/4 - 1: (2 lambda/3, lambda^2/3 - 1).
Point curve_C(double lambda);

/// sqrt(1-|x|) + sqrt(1-|y|) = 1.
Point curve_C1(double lambda);

/// Parabolic arc of the octagon limit; throws std::domain_error for delta <= 0.
Point curve_Cdelta(double delta, double lambda);

/// l^p-ball limit via regularized incomplete beta functions, with
/// mu = lambda^p / (1 + lambda^p). Throws std::domain_error for p <= 0.
Point curve_Cp(double p, double lambda);

/// The y coordinate of curve_Cp written through I_{1-mu}(1/p, 1+2/p).
double curve_Cp_alternate_y(double p, double lambda);

/// curve_Cp for p = 1/m evaluated in closed form: with integer beta
/// parameters I_z is a finite binomial sum, a rational function of lambda^p.
Point curve_Cp_reciprocal_integer(int m, double lambda);

/// Rotation by pi/4 followed by scaling by 3/(2 sqrt 2); maps C onto C1.
Point rotate_scale_C(Point point);

// Implicit residuals on the fundamental arc.
double residual_C(Point pt);
double residual_C1(Point pt);
double residual_Cdelta(double delta, Point pt);
/// The degree-5 relation of C'_{1/2}, divided by the sum of absolute term values.
double scaled_residual_Cp_half(Point pt);

enum class CurveFamily { C, C1, Cdelta, Cp };

class LimitCurve {
 public:
  static LimitCurve C();
  static LimitCurve C1();
  static LimitCurve Cdelta(double delta);
  static LimitCurve Cp(double p);
  /// `C`, `C1`, `Cdelta:<delta>`, `Cp:<p>` (decimal or a/b parameter).
  static LimitCurve parse(std::string_view text);
  /// The curve the scaled polygons P_Q(S) converge to.
  static LimitCurve for_domain(const DomainSpec& s);

  CurveFamily family() const { return family_; }
  double parameter() const { return parameter_; }
  std::string name() const;

  Point eval(double lambda) const;
  Point arc_end() const { return eval(1.0); }
  /// Implicit-form residual where an algebraic form is known.
  std::optional<double> residual(Point pt) const;

  /// Same point set: C1, Cdelta(1) and Cp(1) coincide.
  bool same_curve(const LimitCurve& other) const;

 private:
  LimitCurve(CurveFamily f, double param) : family_(f), parameter_(param) {}
  CurveFamily family_;
  double parameter_;
};

}  // namespace jarnik
