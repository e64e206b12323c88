#include "jarnik/limit_curves.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace jarnik {

namespace {

void require_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("lambda must lie in [0,1]");
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::domain_error(std::string(what) + " must be positive");
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// I_z(a, b) for positive integers: P(Binomial(a+b-1, z) >= a).
double reg_inc_beta_integer(double z, int a, int b) {
  const int n = a + b - 1;
  double total = 0.0;
  for (int j = a; j <= n; ++j) total += binomial(n, j) * std::pow(z, j) * std::pow(1.0 - z, n - j);
  return total;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

struct Monomial {
  double coefficient;
  int x_power;
  int y_power;
};

constexpr std::array<Monomial, 21> kHalfBallRelation{{
    {-45253, 0, 0}, {86140, 1, 0},  {-37030, 2, 0}, {-3220, 3, 0},  {-765, 4, 0},   {128, 5, 0},
    {-86140, 0, 1}, {169060, 1, 1}, {-80340, 2, 1}, {-1940, 3, 1},  {-640, 4, 1},   {-37030, 0, 2},
    {80340, 1, 2},  {-44590, 2, 2}, {1280, 3, 2},   {3220, 0, 3},   {-1940, 1, 3},  {-1280, 2, 3},
    {-765, 0, 4},   {640, 1, 4},    {-128, 0, 5},
}};

std::string format_parameter(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

Point curve_C(double lambda) {
  require_lambda(lambda);
  return {2.0 * lambda / 3.0, lambda * lambda / 3.0 - 1.0};
}

Point curve_C1(double lambda) {
  require_lambda(lambda);
  const double w = (1.0 + lambda) * (1.0 + lambda);
  return {lambda * (2.0 + lambda) / w, -(2.0 * lambda + 1.0) / w};
}

Point curve_Cdelta(double delta, double lambda) {
  require_positive(delta, "delta");
  require_lambda(lambda);
  const double w = (delta + lambda) * (delta + lambda) * (3.0 * delta + 1.0);
  const double g = (delta + 1.0) * (delta + 1.0);
  return {lambda * (2.0 * delta + lambda) * g / w, delta * lambda * lambda * g / w - 1.0};
}

Point curve_Cp(double p, double lambda) {
  require_positive(p, "p");
  require_lambda(lambda);
  if (lambda == 0.0) return {0.0, -1.0};
  const double lp = std::pow(lambda, p);
  const double mu = lp / (1.0 + lp);
  const double tail = std::pow(1.0 + lp, -3.0 / p);
  const double b = beta(1.0 / p, 2.0 / p);
  return {reg_inc_beta(mu, 1.0 / p, 1.0 + 2.0 / p) - p * lambda * tail / (2.0 * b),
          reg_inc_beta(mu, 2.0 / p, 1.0 + 1.0 / p) - p * lambda * lambda * tail / b - 1.0};
}

double curve_Cp_alternate_y(double p, double lambda) {
  require_positive(p, "p");
  require_lambda(lambda);
  if (lambda == 0.0) return -1.0;
  const double lp = std::pow(lambda, p);
  const double tail = std::pow(1.0 + lp, -3.0 / p);
  const double b = beta(1.0 / p, 2.0 / p);
  // 1 - mu = 1/(1 + lambda^p), computed without cancellation.
  return -(reg_inc_beta(1.0 / (1.0 + lp), 1.0 / p, 1.0 + 2.0 / p) - p * lambda * lambda * tail / (2.0 * b));
}

Point curve_Cp_reciprocal_integer(int m, double lambda) {
  if (m < 1) throw std::domain_error("reciprocal exponent must be a positive integer");
  require_lambda(lambda);
  const double p = 1.0 / m;
  const double t = std::pow(lambda, p);
  const double mu = t / (1.0 + t);
  const double tail = std::pow(1.0 + t, -3.0 * m);
  // B(m, 2m) = (m-1)! (2m-1)! / (3m-1)!
  const double b = factorial(m - 1) * factorial(2 * m - 1) / factorial(3 * m - 1);
  return {reg_inc_beta_integer(mu, m, 1 + 2 * m) - p * lambda * tail / (2.0 * b),
          reg_inc_beta_integer(mu, 2 * m, 1 + m) - p * lambda * lambda * tail / b - 1.0};
}

Point rotate_scale_C(Point point) {
  const double c = std::numbers::sqrt2 / 2.0;
  const double k = 3.0 / (2.0 * std::numbers::sqrt2);
  return {k * (c * point.x - c * point.y), k * (c * point.x + c * point.y)};
}

double residual_C(Point pt) { return pt.y - (0.75 * pt.x * pt.x - 1.0); }

double residual_C1(Point pt) { return std::sqrt(1.0 - std::fabs(pt.x)) + std::sqrt(1.0 - std::fabs(pt.y)) - 1.0; }

double residual_Cdelta(double delta, Point pt) {
  const double s = delta * pt.x + pt.y + 1.0;
  return 4.0 * delta * (1.0 + delta) * (1.0 + delta) * (pt.y + 1.0) - (1.0 + 3.0 * delta) * s * s;
}

double scaled_residual_Cp_half(Point pt) {
  double value = 0.0, scale = 0.0;
  for (const Monomial& m : kHalfBallRelation) {
    const double term = m.coefficient * std::pow(pt.x, m.x_power) * std::pow(pt.y, m.y_power);
    value += term;
    scale += std::fabs(term);
  }
  return scale > 0.0 ? value / scale : value;
}

LimitCurve LimitCurve::C() { return LimitCurve(CurveFamily::C, 0.0); }
LimitCurve LimitCurve::C1() { return LimitCurve(CurveFamily::C1, 1.0); }

LimitCurve LimitCurve::Cdelta(double delta) {
  require_positive(delta, "delta");
  return LimitCurve(CurveFamily::Cdelta, delta);
}

LimitCurve LimitCurve::Cp(double p) {
  require_positive(p, "p");
  return LimitCurve(CurveFamily::Cp, p);
}

LimitCurve LimitCurve::parse(std::string_view text) {
  if (text == "C") return C();
  if (text == "C1") return C1();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view head = text.substr(0, colon), arg = text.substr(colon + 1);
    if (head == "Cdelta" || head == "Cp") {
      if (arg == "inf") return C();
      const double v = parse_positive_rational(arg).to_double();
      return head == "Cdelta" ? Cdelta(v) : Cp(v);
    }
  }
  throw std::invalid_argument("unknown curve '" + std::string(text) + "' (expected C, C1, Cdelta:<d>, Cp:<p>)");
}

LimitCurve LimitCurve::for_domain(const DomainSpec& s) {
  switch (s.kind()) {
    case DomainKind::Square:
      return C();
    case DomainKind::Diamond:
      return C1();
    case DomainKind::Octagon:
      return Cdelta(s.parameter().to_double());
    case DomainKind::Ball:
      return Cp(s.parameter().to_double());
  }
  return C();
}

std::string LimitCurve::name() const {
  switch (family_) {
    case CurveFamily::C:
      return "C";
    case CurveFamily::C1:
      return "C1";
    case CurveFamily::Cdelta:
      return "Cdelta:" + format_parameter(parameter_);
    case CurveFamily::Cp:
      return "Cp:" + format_parameter(parameter_);
  }
  return {};
}

Point LimitCurve::eval(double lambda) const {
  switch (family_) {
    case CurveFamily::C:
      return curve_C(lambda);
    case CurveFamily::C1:
      return curve_C1(lambda);
    case CurveFamily::Cdelta:
      return curve_Cdelta(parameter_, lambda);
    case CurveFamily::Cp:
      return curve_Cp(parameter_, lambda);
  }
  return {};
}

std::optional<double> LimitCurve::residual(Point pt) const {
  switch (family_) {
    case CurveFamily::C:
      return residual_C(pt);
    case CurveFamily::C1:
      return residual_C1(pt);
    case CurveFamily::Cdelta:
      return residual_Cdelta(parameter_, pt);
    case CurveFamily::Cp:
      if (parameter_ == 1.0) return residual_C1(pt);
      if (parameter_ == 2.0) return pt.x * pt.x + pt.y * pt.y - 1.0;
      if (parameter_ == 0.5) return scaled_residual_Cp_half(pt);
      return std::nullopt;
  }
  return std::nullopt;
}

bool LimitCurve::same_curve(const LimitCurve& other) const {
  auto canonical = [](const LimitCurve& c) -> std::pair<CurveFamily, double> {
    if ((c.family_ == CurveFamily::Cdelta || c.family_ == CurveFamily::Cp) && c.parameter_ == 1.0)
      return {CurveFamily::C1, 1.0};
    return {c.family_, c.parameter_};
  };
  return canonical(*this) == canonical(other);
}

}  // namespace jarnik
