#pragma once

// Exact 64-bit integer helpers: checked arithmetic, integer square roots,
// trial-division primality and factorization.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zi {

using Int = std::int64_t;

// Thrown whenever an intermediate result leaves the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Thrown when an operation's mathematical precondition is violated
// (division by zero, gcd(0, 0), a non-prime where a prime is required...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

inline Int square(Int a) { return checked_mul(a, a); }

// Floor division; b must be nonzero.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

inline Int gcd(Int a, Int b) {
  a = checked_abs(a);
  b = checked_abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct ExtendedGcd {
  Int g;  // non-negative
  Int s;  // a*s + b*t == g
  Int t;
};

inline ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
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
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(Int n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  if (n < 2) return n;
  auto r = static_cast<Int>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && (r > n / r)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

inline bool is_perfect_square(Int n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (Int d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

// (prime, exponent) pairs in increasing prime order; n >= 1.
using IntFactorization = std::vector<std::pair<Int, int>>;

inline IntFactorization factor_integer(Int n) {
  if (n < 1) throw DomainError("factor_integer needs a positive argument");
  IntFactorization out;
  auto strip = [&](Int p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (Int d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Number of divisors from a factorization.
inline Int divisor_count(const IntFactorization& f) {
  Int count = 1;
  for (const auto& [p, e] : f) count = checked_mul(count, e + 1);
  return count;
}

// All positive divisors of n in increasing order.
inline std::vector<Int> divisors(Int n) {
  if (n < 1) throw DomainError("divisors needs a positive argument");
  std::vector<Int> small, large;
  for (Int d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace zi
