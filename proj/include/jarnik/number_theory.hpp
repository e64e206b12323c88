#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jarnik {

using Int = std::int64_t;

// Overflow-checked integer arithmetic; throws std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

Int gcd(Int a, Int b);

// Floor division for a signed numerator and positive denominator.
Int floor_div(Int num, Int den);

/// Reduced fraction num/den with den > 0.
struct Fraction {
  Int num = 0;
  Int den = 1;

  Fraction() = default;
  Fraction(Int n, Int d);  // reduces; throws std::invalid_argument when d == 0

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs);
};

/// Values of the Moebius function mu(n) for 1 <= n <= limit.
class MoebiusTable {
 public:
  explicit MoebiusTable(Int limit);

  Int limit() const { return static_cast<Int>(mu_.size()) - 1; }
  int operator()(Int n) const;
  // Indexed by n; entry 0 is unused and holds 0.
  std::span<const std::int8_t> values() const { return mu_; }

 private:
  std::vector<std::int8_t> mu_;
};

MoebiusTable moebius_sieve(Int limit);

// Sum of mu(q)/q^2 over q <= Q, compensated summation in long double.
long double partial_zeta_inverse(Int Q);

/// Counts and sums of integers coprime to q in [1, m], by inclusion-exclusion
/// over the squarefree divisors of q.
class CoprimeCounter {
 public:
  explicit CoprimeCounter(Int limit);

  Int limit() const { return limit_; }
  Int count(Int q, Int m) const;
  Int sum(Int q, Int m) const;

 private:
  Int limit_;
  // Squarefree divisors d of each n with sign mu(d), flattened.
  std::vector<std::uint32_t> offsets_;
  std::vector<std::pair<Int, int>> divisors_;
};

/// Farey fractions of order Q in increasing order, 0/1 through 1/1.
std::vector<Fraction> farey_sequence(Int Q);

}  // namespace jarnik
