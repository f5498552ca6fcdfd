#pragma once

// Gauss-Pythagorean integers: x + y i with x, y != 0 and x^2 + y^2 a perfect
// square. They form a multiplicative semigroup GP[i].

#include <algorithm>
#include <optional>
#include <vector>

#include "zi/primes.hpp"

namespace zi {

struct GpWitness {
  GaussInt element;
  Int z = 0;  // z^2 == norm(element)
  bool primitive = false;
  std::optional<GaussInt> tau;  // norm(tau) == z, when z is a sum of two squares
};

/// Some tau with norm(tau) == z, choosing re >= im >= 0 with re minimal.
inline std::optional<GaussInt> element_of_norm(Int z) {
  if (z < 0) return std::nullopt;
  for (Int p = isqrt(z / 2); p <= isqrt(z); ++p) {
    Int rest = z - p * p;
    if (rest < 0 || rest > p * p) continue;
    if (is_perfect_square(rest)) return GaussInt{p, isqrt(rest)};
  }
  return std::nullopt;
}

inline std::optional<GpWitness> is_gp(const GaussInt& a) {
  if (a.re == 0 || a.im == 0) return std::nullopt;
  const Int n = norm(a);
  if (!is_perfect_square(n)) return std::nullopt;
  GpWitness w;
  w.element = a;
  w.z = isqrt(n);
  w.primitive = gcd(a.re, a.im) == 1;
  w.tau = element_of_norm(w.z);
  return w;
}

struct GpNormRoot {
  Int z = 0;
  std::optional<GaussInt> tau;
};

/// z with z^2 = norm(a), plus tau with norm(tau) = z when one exists.
/// A tau always exists for primitive elements (z = p^2 + q^2).
inline GpNormRoot gp_norm_root(const GaussInt& a) {
  auto w = is_gp(a);
  if (!w) throw DomainError(to_string(a) + " is not Gauss-Pythagorean");
  return {w->z, w->tau};
}

/// True iff a has no factorization into two GP elements. Divisors are
/// enumerated up to associates; GP membership is invariant under units.
inline bool is_gp_prime(const GaussInt& a) {
  if (!is_gp(a)) throw DomainError(to_string(a) + " is not Gauss-Pythagorean");
  const Int n = norm(a);
  for (const GaussInt& d : divisors_up_to_associates(a)) {
    const Int nd = norm(d);
    if (nd == 1 || nd == n) continue;
    if (is_gp(d) && is_gp(exact_div(a, d))) return false;
  }
  return true;
}

/// (t + s i)^2 where p = t^2 + s^2 with t > s > 0; this is (t^2 - s^2) + 2ts i.
inline GaussInt gp_prime_from_rational_prime(Int p) {
  auto [odd, even] = sum_two_squares(p);
  const Int t = std::max(odd, even);
  const Int s = std::min(odd, even);
  const GaussInt base{t, s};
  return base * base;
}

/// Every GP element with norm <= norm_bound, ordered by (norm, re, im).
inline std::vector<GpWitness> gp_stream(Int norm_bound) {
  if (norm_bound < 0) throw DomainError("gp_stream needs a non-negative bound");
  std::vector<GpWitness> out;
  const Int r = isqrt(norm_bound);
  for (Int x = -r; x <= r; ++x) {
    for (Int y = -r; y <= r; ++y) {
      if (x * x + y * y > norm_bound) continue;
      if (auto w = is_gp({x, y})) out.push_back(*w);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GpWitness& l, const GpWitness& r) { return norm_less(l.element, r.element); });
  return out;
}

}  // namespace zi
