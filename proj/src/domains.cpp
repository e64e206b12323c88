#include "jarnik/domains.hpp"

#include <mpfr.h>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jarnik/special_functions.hpp"

namespace jarnik {

namespace {

using BigRational = boost::multiprecision::cpp_rational;

BigRational to_big(Fraction f) { return BigRational(f.num, f.den); }

BigRational big_pow(const BigRational& base, Int exponent) {
  BigRational result = 1;
  for (Int i = 0; i < exponent; ++i) result *= base;
  return result;
}

Fraction abs(Fraction f) { return Fraction{f.num < 0 ? -f.num : f.num, f.den}; }

std::string param_str(Fraction f) { return f.den == 1 ? std::to_string(f.num) : f.str(); }

// RAII holder for an mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

void set_fraction(mpfr_ptr out, Fraction f, mpfr_rnd_t rnd) {
  mpfr_set_si(out, static_cast<long>(f.num), MPFR_RNDN);  // exact for |num| < 2^63 at prec >= 64
  mpfr_div_si(out, out, static_cast<long>(f.den), rnd);
}

// Enclosure of base^exponent for base >= 0 with both given as fractions.
void pow_bounds(Fraction base, Fraction exponent, mpfr_prec_t prec, mpfr_ptr lo, mpfr_ptr hi) {
  if (base.num == 0) {
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    return;
  }
  MpfrValue b_lo(prec), b_hi(prec), e_lo(prec), e_hi(prec), t(prec);
  set_fraction(b_lo.get(), base, MPFR_RNDD);
  set_fraction(b_hi.get(), base, MPFR_RNDU);
  set_fraction(e_lo.get(), exponent, MPFR_RNDD);
  set_fraction(e_hi.get(), exponent, MPFR_RNDU);
  // pow is monotone in each argument on base > 0, so the corners bound it.
  mpfr_ptr bases[2] = {b_lo.get(), b_hi.get()};
  mpfr_ptr exps[2] = {e_lo.get(), e_hi.get()};
  bool first = true;
  for (mpfr_ptr b : bases) {
    for (mpfr_ptr e : exps) {
      mpfr_pow(t.get(), b, e, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo)) mpfr_set(lo, t.get(), MPFR_RNDD);
      mpfr_pow(t.get(), b, e, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi)) mpfr_set(hi, t.get(), MPFR_RNDU);
      first = false;
    }
  }
}

// |x|^p + |y|^p <= 1 by interval arithmetic with precision escalation.
// Undecided after the last precision means equality to within 2^-4000;
// the point is treated as a boundary point and included.
bool ball_contains_interval(Fraction x, Fraction y, Fraction p) {
  for (mpfr_prec_t prec = 64; prec <= 4096; prec *= 2) {
    MpfrValue x_lo(prec), x_hi(prec), y_lo(prec), y_hi(prec), s(prec);
    pow_bounds(x, p, prec, x_lo.get(), x_hi.get());
    pow_bounds(y, p, prec, y_lo.get(), y_hi.get());
    mpfr_add(s.get(), x_hi.get(), y_hi.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(s.get(), 1) <= 0) return true;
    mpfr_add(s.get(), x_lo.get(), y_lo.get(), MPFR_RNDD);
    if (mpfr_cmp_ui(s.get(), 1) > 0) return false;
  }
  return true;
}

bool ball_contains(Fraction x, Fraction y, Fraction p) {
  x = abs(x);
  y = abs(y);
  if (p.den == 1) {
    return big_pow(to_big(x), p.num) + big_pow(to_big(y), p.num) <= 1;
  }
  if (p.den == 2) {
    // sqrt(U) + sqrt(V) <= 1  <=>  U + V <= 1 and 4UV <= (1 - U - V)^2
    const BigRational u = big_pow(to_big(x), p.num);
    const BigRational v = big_pow(to_big(y), p.num);
    const BigRational rest = 1 - u - v;
    return rest >= 0 && 4 * u * v <= rest * rest;
  }
  return ball_contains_interval(x, y, p);
}

// Upper boundary y(x) of the region in the column 0 <= x <= 1.
double column_boundary(const DomainSpec& s, double x) {
  switch (s.kind()) {
    case DomainKind::Square:
      return 1.0;
    case DomainKind::Diamond:
      return 1.0 - x;
    case DomainKind::Octagon: {
      const double delta = s.parameter().to_double();
      const double t = delta / (1.0 + delta);
      return x >= t ? delta * (1.0 - x) : 1.0 - x / delta;
    }
    case DomainKind::Ball: {
      const double p = s.parameter().to_double();
      return std::pow(std::max(0.0, 1.0 - std::pow(x, p)), 1.0 / p);
    }
  }
  return 0.0;
}

}  // namespace

DomainSpec DomainSpec::square() { return DomainSpec(DomainKind::Square, Fraction{1, 1}); }
DomainSpec DomainSpec::diamond() { return DomainSpec(DomainKind::Diamond, Fraction{1, 1}); }

DomainSpec DomainSpec::octagon(Fraction delta) {
  if (delta.num <= 0) throw std::invalid_argument("octagon parameter delta must be positive");
  return DomainSpec(DomainKind::Octagon, delta);
}

DomainSpec DomainSpec::ball(Fraction p) {
  if (p.num <= 0) throw std::invalid_argument("ball exponent p must be positive");
  return DomainSpec(DomainKind::Ball, p);
}

Fraction parse_positive_rational(std::string_view text) {
  auto fail = [&]() -> Fraction {
    throw std::invalid_argument("expected a positive decimal or a/b, got '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  const auto slash = text.find('/');
  auto parse_digits = [&](std::string_view digits) {
    if (digits.empty()) fail();
    Int v = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
      v = checked_add(checked_mul(v, 10), c - '0');
    }
    return v;
  };
  Fraction value;
  if (slash != std::string_view::npos) {
    const Int num = parse_digits(text.substr(0, slash));
    const Int den = parse_digits(text.substr(slash + 1));
    if (den == 0) fail();
    value = Fraction(num, den);
  } else {
    const auto dot = text.find('.');
    const std::string_view whole = text.substr(0, dot);
    Int num = whole.empty() ? 0 : parse_digits(whole);
    Int den = 1;
    if (dot != std::string_view::npos) {
      const std::string_view frac = text.substr(dot + 1);
      if (frac.empty() && whole.empty()) fail();
      for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        num = checked_add(checked_mul(num, 10), c - '0');
        den = checked_mul(den, 10);
      }
    }
    value = Fraction(num, den);
  }
  if (value.num <= 0) fail();
  return value;
}

DomainSpec DomainSpec::parse(std::string_view text) {
  if (text == "square") return square();
  if (text == "diamond") return diamond();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown domain '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (head != "octagon" && head != "ball") throw std::invalid_argument("unknown domain '" + std::string(text) + "'");
  if (arg == "inf") return square();
  const Fraction value = parse_positive_rational(arg);
  return head == "octagon" ? octagon(value) : ball(value);
}

std::string DomainSpec::name() const {
  switch (kind_) {
    case DomainKind::Square:
      return "square";
    case DomainKind::Diamond:
      return "diamond";
    case DomainKind::Octagon:
      return "octagon:" + param_str(parameter_);
    case DomainKind::Ball:
      return "ball:" + param_str(parameter_);
  }
  return {};
}

bool contains(const DomainSpec& s, Fraction x, Fraction y) {
  const Fraction ax = abs(x), ay = abs(y);
  const Fraction u = std::max(ax, ay), v = std::min(ax, ay);
  switch (s.kind()) {
    case DomainKind::Square:
      return u <= Fraction{1, 1};
    case DomainKind::Diamond:
      return to_big(u) + to_big(v) <= 1;
    case DomainKind::Octagon: {
      // u + v / delta <= 1 in the wedge 0 <= v <= u.
      return to_big(u) + to_big(v) / to_big(s.parameter()) <= 1;
    }
    case DomainKind::Ball:
      return ball_contains(x, y, s.parameter());
  }
  return false;
}

Int column_height(const DomainSpec& s, Int Q, Int q) {
  if (Q < 1) throw std::invalid_argument("order Q must be positive");
  const Int aq = q < 0 ? -q : q;
  if (aq > Q) return -1;
  switch (s.kind()) {
    case DomainKind::Square:
      return Q;
    case DomainKind::Diamond:
      return Q - aq;
    default:
      break;
  }
  const double estimate = static_cast<double>(Q) * column_boundary(s, static_cast<double>(aq) / static_cast<double>(Q));
  Int a = std::clamp<Int>(static_cast<Int>(std::floor(estimate)), 0, Q);
  auto inside = [&](Int b) { return b <= Q && contains(s, Fraction(aq, Q), Fraction(b, Q)); };
  while (a > 0 && !inside(a)) --a;
  while (inside(a + 1)) ++a;
  return a;
}

MomentPair moment_integrals(const DomainSpec& s, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("lambda must lie in [0,1]");
  const double l = lambda;
  switch (s.kind()) {
    case DomainKind::Square:
      return {l / 3.0, l * l / 6.0};
    case DomainKind::Diamond: {
      const double w = 6.0 * (1.0 + l) * (1.0 + l);
      return {l * (2.0 + l) / w, l * l / w};
    }
    case DomainKind::Octagon: {
      const double d = s.parameter().to_double();
      const double w = 6.0 * (d + l) * (d + l);
      return {d * l * (2.0 * d + l) / w, d * d * l * l / w};
    }
    case DomainKind::Ball: {
      if (l == 0.0) return {0.0, 0.0};
      const double p = s.parameter().to_double();
      const double lp = std::pow(l, p);
      const double mu = lp / (1.0 + lp);
      const double tail = std::pow(1.0 + lp, -3.0 / p);
      const double mx = inc_beta(mu, 1.0 / p, 1.0 + 2.0 / p) / (2.0 * p) - l * tail / 6.0;
      const double my = inc_beta(mu, 2.0 / p, 1.0 + 1.0 / p) / p - l * l * tail / 3.0;
      return {mx, my};
    }
  }
  return {};
}

double scale_factor_asymptote(const DomainSpec& s) {
  const MomentPair m = moment_integrals(s, 1.0);
  return 6.0 * (m.mx + m.my) / (std::numbers::pi * std::numbers::pi);
}

}  // namespace jarnik
