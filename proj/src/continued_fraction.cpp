#include "jarnik/continued_fraction.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace jarnik {

namespace {

Int isqrt(Int n) {
  if (n < 0) throw std::invalid_argument("isqrt of a negative number");
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

class RationalStream final : public QuotientStream {
 public:
  explicit RationalStream(Fraction f) : num_(f.num), den_(f.den) {}
  std::optional<Int> next() override {
    if (den_ == 0) return std::nullopt;
    const Int a = floor_div(num_, den_);
    const Int rem = num_ - a * den_;
    num_ = den_;
    den_ = rem;
    return a;
  }

 private:
  Int num_;
  Int den_;
};

// PQa recurrence for (P + sqrt(D)) / Q with Q | (D - P^2).
class SurdStream final : public QuotientStream {
 public:
  explicit SurdStream(QuadraticSurd s) : p_(s.p), d_(s.d), q_(s.q), root_(isqrt(s.d)) {
    if ((d_ - p_ * p_) % q_ != 0) {
      const Int aq = q_ < 0 ? -q_ : q_;
      p_ = checked_mul(p_, aq);
      d_ = checked_mul(d_, checked_mul(q_, q_));
      q_ = checked_mul(q_, aq);
      root_ = isqrt(d_);
    }
  }
  std::optional<Int> next() override {
    const Int a = q_ > 0 ? floor_div(p_ + root_, q_) : floor_div(p_ + root_ + 1, q_);
    const Int p_next = checked_mul(a, q_) - p_;
    const Int q_next = (d_ - checked_mul(p_next, p_next)) / q_;
    p_ = p_next;
    q_ = q_next;
    return a;
  }

 private:
  Int p_, d_, q_, root_;
};

class EulerStream final : public QuotientStream {
 public:
  std::optional<Int> next() override {
    const Int i = index_++;
    if (i == 0) return 0;
    if (i % 3 == 2) return 2 * (i + 1) / 3;
    return 1;
  }

 private:
  Int index_ = 0;
};

class PeriodicStream final : public QuotientStream {
 public:
  explicit PeriodicStream(const PeriodicQuotients& q) : quotients_(q) {}
  std::optional<Int> next() override {
    const std::size_t i = index_++;
    if (i == 0) return 0;
    const std::size_t k = i - 1;
    if (k < quotients_.prefix.size()) return quotients_.prefix[k];
    return quotients_.period[(k - quotients_.prefix.size()) % quotients_.period.size()];
  }

 private:
  PeriodicQuotients quotients_;
  std::size_t index_ = 0;
};

// Cursor over a string for the lambda grammar.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat(std::string_view word) {
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() const {
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  Int integer() {
    bool negative = eat('-');
    if (!negative) eat('+');
    if (!peek_digit()) fail("expected an integer");
    Int value = 0;
    while (peek_digit()) value = checked_add(checked_mul(value, 10), text[pos++] - '0');
    return negative ? -value : value;
  }
  void done() const {
    if (pos != text.size()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad lambda specification '" + std::string(text) + "': " + what);
  }
};

}  // namespace

ExactReal ExactReal::rational(Int num, Int den) { return ExactReal(Fraction(num, den)); }
ExactReal ExactReal::rational(Fraction f) { return ExactReal(f); }

ExactReal ExactReal::surd(Int p, Int d, Int q) {
  if (q == 0) throw std::invalid_argument("surd with zero denominator");
  if (d < 0) throw std::invalid_argument("surd with negative radicand");
  const Int r = isqrt(d);
  if (r * r == d) return ExactReal(Fraction(p + r, q));
  return ExactReal(QuadraticSurd{p, d, q});
}

ExactReal ExactReal::euler_minus_two() { return ExactReal(PatternConstant::EulerMinusTwo); }

ExactReal ExactReal::inv_sqrt3() { return surd(0, 3, 3); }

ExactReal ExactReal::periodic(std::vector<Int> prefix, std::vector<Int> period) {
  for (Int b : prefix)
    if (b < 1) throw std::invalid_argument("partial quotients must be positive");
  for (Int b : period)
    if (b < 1) throw std::invalid_argument("partial quotients must be positive");
  if (period.empty()) {
    // Finite expansion [0; prefix...]: fold back into a rational.
    if (prefix.empty()) return rational(0, 1);
    Int h = 1, k = 0;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
      const Int nh = checked_add(checked_mul(*it, h), k);
      k = h;
      h = nh;
    }
    return rational(k, h);
  }
  return ExactReal(PeriodicQuotients{std::move(prefix), std::move(period)});
}

ExactReal ExactReal::parse(std::string_view text) {
  Cursor c{text};
  if (c.eat("rat:")) {
    const Int num = c.integer();
    Int den = 1;
    if (c.eat('/')) den = c.integer();
    c.done();
    if (den == 0) c.fail("zero denominator");
    return rational(num, den);
  }
  if (c.eat("surd:")) {
    c.expect('(');
    Int p = 0;
    if (!c.eat("sqrt(")) {
      p = c.integer();
      int sign = 0;
      if (c.eat('+')) sign = 1;
      else if (c.eat('-')) sign = -1;
      else c.fail("expected '+' or '-' before sqrt");
      if (!c.eat("sqrt(")) c.fail("expected sqrt(");
      const Int d = c.integer();
      c.expect(')');
      c.expect(')');
      Int q = 1;
      if (c.eat('/')) q = c.integer();
      c.done();
      if (q == 0) c.fail("zero denominator");
      // (p - sqrt(d))/q == (-p + sqrt(d))/(-q)
      return sign > 0 ? surd(p, d, q) : surd(-p, d, -q);
    }
    const Int d = c.integer();
    c.expect(')');
    c.expect(')');
    Int q = 1;
    if (c.eat('/')) q = c.integer();
    c.done();
    if (q == 0) c.fail("zero denominator");
    return surd(p, d, q);
  }
  if (c.eat("const:")) {
    if (c.eat("e-2")) {
      c.done();
      return euler_minus_two();
    }
    if (c.eat("inv-sqrt3")) {
      c.done();
      return inv_sqrt3();
    }
    c.fail("unknown constant");
  }
  if (c.eat("cf:")) {
    c.expect('[');
    if (c.integer() != 0) c.fail("integer part must be 0");
    std::vector<Int> prefix, period;
    if (c.eat(';')) {
      bool first = true;
      while (!c.eat(']')) {
        if (!first) c.expect(',');
        first = false;
        if (c.eat('(')) {
          do period.push_back(c.integer());
          while (c.eat(','));
          c.expect(')');
          c.expect(']');
          break;
        }
        prefix.push_back(c.integer());
      }
    } else {
      c.expect(']');
    }
    c.done();
    return periodic(std::move(prefix), std::move(period));
  }
  c.fail("unknown prefix (expected rat:, surd:, const:, or cf:)");
}

std::optional<Fraction> ExactReal::as_fraction() const {
  if (const auto* f = std::get_if<Fraction>(&repr_)) return *f;
  return std::nullopt;
}

bool ExactReal::is_periodic() const {
  return std::holds_alternative<QuadraticSurd>(repr_) ||
         std::holds_alternative<PeriodicQuotients>(repr_);
}

std::unique_ptr<QuotientStream> ExactReal::quotients() const {
  return std::visit(
      [](const auto& r) -> std::unique_ptr<QuotientStream> {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Fraction>) return std::make_unique<RationalStream>(r);
        else if constexpr (std::is_same_v<T, QuadraticSurd>) return std::make_unique<SurdStream>(r);
        else if constexpr (std::is_same_v<T, PatternConstant>) return std::make_unique<EulerStream>();
        else return std::make_unique<PeriodicStream>(r);
      },
      repr_);
}

int ExactReal::compare(Fraction f) const {
  if (const auto* self = std::get_if<Fraction>(&repr_)) {
    const auto c = *self <=> f;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  // Irrational: compare continued fractions term by term. A finished
  // rational expansion acts as an infinite quotient.
  auto xs = quotients();
  RationalStream fs(f);
  for (std::size_t i = 0;; ++i) {
    const Int x = *xs->next();
    const std::optional<Int> y = fs.next();
    if (y && x == *y) continue;
    // With y exhausted the rational's term is +infinity.
    const bool x_term_larger = y ? (x > *y) : false;
    const bool even = (i % 2 == 0);
    return (x_term_larger == even) ? 1 : -1;
  }
}

double ExactReal::approx() const {
  return std::visit(
      [this](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Fraction>) {
          return r.to_double();
        } else if constexpr (std::is_same_v<T, QuadraticSurd>) {
          return static_cast<double>((static_cast<long double>(r.p) + std::sqrt(static_cast<long double>(r.d))) /
                                     static_cast<long double>(r.q));
        } else if constexpr (std::is_same_v<T, PatternConstant>) {
          return static_cast<double>(std::exp(1.0L) - 2.0L);
        } else {
          auto s = quotients();
          long double h_prev = 1, h = *s->next(), k_prev = 0, k = 1;
          for (int n = 0; n < 64 && k < 1e12L; ++n) {
            const long double b = static_cast<long double>(*s->next());
            const long double nh = b * h + h_prev, nk = b * k + k_prev;
            h_prev = h;
            k_prev = k;
            h = nh;
            k = nk;
          }
          return static_cast<double>(h / k);
        }
      },
      repr_);
}

std::string ExactReal::str() const {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Fraction>) {
          return "rat:" + r.str();
        } else if constexpr (std::is_same_v<T, QuadraticSurd>) {
          return "surd:(" + std::to_string(r.p) + "+sqrt(" + std::to_string(r.d) + "))/" + std::to_string(r.q);
        } else if constexpr (std::is_same_v<T, PatternConstant>) {
          return "const:e-2";
        } else {
          std::string s = "cf:[0;";
          bool first = true;
          for (Int b : r.prefix) {
            s += (first ? "" : ",") + std::to_string(b);
            first = false;
          }
          s += first ? "(" : ",(";
          for (std::size_t i = 0; i < r.period.size(); ++i) s += (i ? "," : "") + std::to_string(r.period[i]);
          return s + ")]";
        }
      },
      repr_);
}

ContinuedFraction cf_expand(const ExactReal& x, std::size_t n_terms) {
  if (x.compare(Fraction(0, 1)) <= 0 || x.compare(Fraction(1, 1)) >= 0)
    throw std::invalid_argument("cf_expand needs a value strictly between 0 and 1");
  ContinuedFraction cf;
  const auto& repr = x.repr();
  if (std::holds_alternative<Fraction>(repr)) cf.kind = CfKind::Rational;
  else if (std::holds_alternative<PatternConstant>(repr)) cf.kind = CfKind::PatternGenerated;
  else cf.kind = CfKind::PeriodicQuadratic;

  auto stream = x.quotients();
  stream->next();  // integer part, 0 on (0,1)
  while (cf.quotients.size() < n_terms) {
    const std::optional<Int> b = stream->next();
    if (!b) {
      cf.terminated = true;
      break;
    }
    cf.quotients.push_back(*b);
  }
  if (!cf.terminated && cf.kind == CfKind::Rational && !stream->next()) cf.terminated = true;
  return cf;
}

std::vector<Fraction> convergents(const ContinuedFraction& cf, std::size_t count) {
  std::vector<Fraction> out;
  Int h_prev = 1, h = 0, k_prev = 0, k = 1;  // h_0, h_1, k_0, k_1
  if (count == 0) return out;
  out.push_back(Fraction{h, k});
  for (std::size_t n = 0; n < cf.quotients.size() && out.size() < count; ++n) {
    const Int b = cf.quotients[n];
    const Int h_next = checked_add(checked_mul(b, h), h_prev);
    const Int k_next = checked_add(checked_mul(b, k), k_prev);
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    out.push_back(Fraction{h, k});
  }
  return out;
}

FareyNeighbors farey_neighbors(const ExactReal& lambda, Int Q) {
  if (Q < 1) throw std::invalid_argument("Farey order must be positive");
  if (lambda.is_rational())
    throw std::invalid_argument("rational lambda has no unique Farey neighbors; use farey_neighbors_sided");
  if (lambda.compare(Fraction(0, 1)) <= 0 || lambda.compare(Fraction(1, 1)) >= 0)
    throw std::invalid_argument("lambda must lie in (0,1)");

  auto stream = lambda.quotients();
  stream->next();
  Int h_prev = 1, h = 0, k_prev = 0, k = 1;  // index n = 1
  for (;;) {
    const Int b = *stream->next();  // b_n
    const Int k_next = checked_add(checked_mul(b, k), k_prev);
    // Q in [k_n + k_{n-1}, k_{n+1} + k_n) selects this n, with 1 <= j <= b_n.
    if (Q < checked_add(k_next, k)) {
      const Int j = (Q - k_prev) / k;
      const Fraction principal{h, k};
      const Fraction secondary{j * h + h_prev, j * k + k_prev};
      FareyNeighbors out;
      out.order = Q;
      if (principal < secondary) {
        out.left = principal;
        out.right = secondary;
      } else {
        out.left = secondary;
        out.right = principal;
      }
      return out;
    }
    const Int h_next = checked_add(checked_mul(b, h), h_prev);
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
  }
}

FareyNeighbors farey_neighbors_stern_brocot(const ExactReal& lambda, Int Q) {
  if (Q < 1) throw std::invalid_argument("Farey order must be positive");
  if (lambda.is_rational())
    throw std::invalid_argument("rational lambda has no unique Farey neighbors; use farey_neighbors_sided");
  if (lambda.compare(Fraction(0, 1)) <= 0 || lambda.compare(Fraction(1, 1)) >= 0)
    throw std::invalid_argument("lambda must lie in (0,1)");
  Fraction left{0, 1}, right{1, 1};
  for (;;) {
    const Int den = left.den + right.den;
    if (den > Q) break;
    const Fraction mediant{left.num + right.num, den};
    if (lambda.compare(mediant) > 0) left = mediant;
    else right = mediant;
  }
  return FareyNeighbors{left, right, Q};
}

namespace {

// Solves u*x - v*y = 1 for coprime u, v >= 0, returning (x, y).
std::pair<Int, Int> unimodular_solution(Int u, Int v) {
  // Extended Euclid on (u, v): s*u + t*v = 1.
  Int old_r = u, r = v, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_s, -old_t};
}

}  // namespace

FareyNeighbors farey_neighbors_sided(Fraction lambda, Side side, Int Q) {
  if (Q < 1) throw std::invalid_argument("Farey order must be positive");
  if (lambda.num < 0 || lambda.num > lambda.den) throw std::invalid_argument("lambda must lie in [0,1]");
  if (lambda.den > Q) throw std::invalid_argument("denominator of lambda exceeds the Farey order");
  const Int a = lambda.num, b = lambda.den;
  FareyNeighbors out;
  out.order = Q;
  if (side == Side::Plus) {
    if (a == b) throw std::invalid_argument("1/1 has no successor in [0,1]");
    // Successor c/d: b*c - a*d = 1 with d maximal, d <= Q.
    auto [c0, d0] = unimodular_solution(b, a);
    const Int t = floor_div(Q - d0, b);
    out.left = lambda;
    out.right = Fraction{c0 + t * a, d0 + t * b};
  } else {
    if (a == 0) throw std::invalid_argument("0/1 has no predecessor in [0,1]");
    // Predecessor c/d: a*d - b*c = 1 with d maximal, d <= Q.
    auto [d0, c0] = unimodular_solution(a, b);
    const Int t = floor_div(Q - d0, b);
    out.left = Fraction{c0 + t * a, d0 + t * b};
    out.right = lambda;
  }
  return out;
}

Side parse_side(std::string_view text) {
  if (text == "+" || text == "plus") return Side::Plus;
  if (text == "-" || text == "minus") return Side::Minus;
  throw std::invalid_argument("side must be '+' or '-'");
}

}  // namespace jarnik
