#include "jarnik/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jarnik {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kEps = 1e-16;
constexpr int kMaxIterations = 10000;

// Continued fraction for B_z(a,b) / (z^a (1-z)^b / a), modified Lentz.
double beta_continued_fraction(double z, double a, double b) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * z / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * z / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * z / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete beta continued fraction did not converge");
}

}  // namespace

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta parameters must be positive");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

double reg_inc_beta(double z, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta parameters must be positive");
  if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("incomplete beta argument outside [0,1]");
  if (z == 0.0) return 0.0;
  if (z == 1.0) return 1.0;
  const double lb = log_beta(a, b);
  const double front = std::exp(a * std::log(z) + b * std::log1p(-z) - lb);
  if (z < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(z, a, b) / a;
  return 1.0 - front * beta_continued_fraction(1.0 - z, b, a) / b;
}

double inc_beta(double z, double a, double b) { return reg_inc_beta(z, a, b) * beta(a, b); }

}  // namespace jarnik
