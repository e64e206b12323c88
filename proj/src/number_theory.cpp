#include "jarnik/number_theory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jarnik {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int floor_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Fraction::Fraction(Int n, Int d) {
  if (d == 0) throw std::invalid_argument("fraction with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const Int g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::string Fraction::str() const { return std::to_string(num) + "/" + std::to_string(den); }

std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs) {
  const __int128 l = static_cast<__int128>(lhs.num) * rhs.den;
  const __int128 r = static_cast<__int128>(rhs.num) * lhs.den;
  return l <=> r;
}

MoebiusTable::MoebiusTable(Int limit) {
  if (limit < 1) throw std::invalid_argument("Moebius sieve needs a positive limit");
  const auto n = static_cast<std::size_t>(limit);
  mu_.assign(n + 1, 1);
  mu_[0] = 0;
  std::vector<bool> composite(n + 1, false);
  for (std::size_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::size_t m = p; m <= n; m += p) {
      if (m > p) composite[m] = true;
      mu_[m] = static_cast<std::int8_t>(-mu_[m]);
    }
    if (p <= n / p) {
      for (std::size_t m = p * p; m <= n; m += p * p) mu_[m] = 0;
    }
  }
}

int MoebiusTable::operator()(Int n) const {
  if (n < 1 || n > limit()) throw std::out_of_range("Moebius table index out of range");
  return mu_[static_cast<std::size_t>(n)];
}

MoebiusTable moebius_sieve(Int limit) { return MoebiusTable(limit); }

long double partial_zeta_inverse(Int Q) {
  if (Q < 1) throw std::invalid_argument("partial_zeta_inverse needs Q >= 1");
  const MoebiusTable mu(Q);
  // Neumaier summation.
  long double sum = 0.0L;
  long double comp = 0.0L;
  for (Int q = 1; q <= Q; ++q) {
    const int m = mu(q);
    if (m == 0) continue;
    const long double qq = static_cast<long double>(q);
    const long double term = static_cast<long double>(m) / (qq * qq);
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

CoprimeCounter::CoprimeCounter(Int limit) : limit_(limit) {
  if (limit < 1) throw std::invalid_argument("CoprimeCounter needs a positive limit");
  const auto n = static_cast<std::size_t>(limit);
  std::vector<Int> smallest(n + 1, 0);
  for (std::size_t p = 2; p <= n; ++p) {
    if (smallest[p] != 0) continue;
    for (std::size_t m = p; m <= n; m += p)
      if (smallest[m] == 0) smallest[m] = static_cast<Int>(p);
  }
  offsets_.reserve(n + 2);
  offsets_.push_back(0);
  offsets_.push_back(0);  // n = 0 has no divisor list
  std::vector<std::pair<Int, int>> local;
  for (std::size_t m = 1; m <= n; ++m) {
    local.assign(1, {1, 1});
    Int rest = static_cast<Int>(m);
    while (rest > 1) {
      const Int p = smallest[static_cast<std::size_t>(rest)];
      while (rest % p == 0) rest /= p;
      const std::size_t size = local.size();
      for (std::size_t i = 0; i < size; ++i) local.emplace_back(local[i].first * p, -local[i].second);
    }
    divisors_.insert(divisors_.end(), local.begin(), local.end());
    offsets_.push_back(static_cast<std::uint32_t>(divisors_.size()));
  }
}

Int CoprimeCounter::count(Int q, Int m) const {
  if (q < 1 || q > limit_) throw std::out_of_range("CoprimeCounter: q out of range");
  if (m <= 0) return 0;
  Int total = 0;
  const auto i = static_cast<std::size_t>(q);
  for (std::uint32_t k = offsets_[i]; k < offsets_[i + 1]; ++k) {
    const auto [d, sign] = divisors_[k];
    total += sign * (m / d);
  }
  return total;
}

Int CoprimeCounter::sum(Int q, Int m) const {
  if (q < 1 || q > limit_) throw std::out_of_range("CoprimeCounter: q out of range");
  if (m <= 0) return 0;
  Int total = 0;
  const auto i = static_cast<std::size_t>(q);
  for (std::uint32_t k = offsets_[i]; k < offsets_[i + 1]; ++k) {
    const auto [d, sign] = divisors_[k];
    const Int t = m / d;
    total = checked_add(total, sign * checked_mul(d, checked_mul(t, t + 1) / 2));
  }
  return total;
}

std::vector<Fraction> farey_sequence(Int Q) {
  if (Q < 1) throw std::invalid_argument("Farey order must be positive");
  std::vector<Fraction> seq;
  Int a = 0, b = 1, c = 1, d = Q;
  seq.emplace_back(0, 1);
  while (c <= Q) {
    const Int k = (Q + b) / d;
    const Int next_c = k * c - a;
    const Int next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
    seq.push_back(Fraction{a, b});
    if (a == 1 && b == 1) break;
  }
  return seq;
}

}  // namespace jarnik
