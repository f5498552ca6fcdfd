#pragma once

// Gaussian primes: classification, two-squares decomposition of rational
// primes p = 1 (mod 4), and factorization into canonical Gaussian primes.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "zi/gaussint.hpp"

namespace zi {

enum class PrimeClass {
  Zero,
  Unit,
  Ramified,   // associate of 1+i
  Inert,      // associate of a rational prime p = 3 (mod 4)
  Split,      // norm is a rational prime p = 1 (mod 4)
  Composite,
};

inline const char* to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::Zero: return "zero";
    case PrimeClass::Unit: return "unit";
    case PrimeClass::Ramified: return "ramified";
    case PrimeClass::Inert: return "inert";
    case PrimeClass::Split: return "split";
    case PrimeClass::Composite: return "composite";
  }
  return "?";
}

inline PrimeClass classify(const GaussInt& a) {
  const Int n = norm(a);
  if (n == 0) return PrimeClass::Zero;
  if (n == 1) return PrimeClass::Unit;
  if (n == 2) return PrimeClass::Ramified;
  if (is_prime(n)) return PrimeClass::Split;  // n odd prime, necessarily 1 mod 4
  // Norm p^2 with p = 3 (mod 4): the element must be an associate of p.
  if (a.re == 0 || a.im == 0) {
    Int p = checked_abs(a.re + a.im);
    if (p % 4 == 3 && is_prime(p)) return PrimeClass::Inert;
  }
  return PrimeClass::Composite;
}

inline bool is_gaussian_prime(const GaussInt& a) {
  auto c = classify(a);
  return c == PrimeClass::Ramified || c == PrimeClass::Inert || c == PrimeClass::Split;
}

struct TwoSquares {
  Int odd;   // a
  Int even;  // b, with a^2 + b^2 == p
};

/// The unique decomposition p = a^2 + b^2 (a odd, b even, both positive) of a
/// prime p = 1 (mod 4).
inline TwoSquares sum_two_squares(Int p) {
  if (p % 4 != 1 || !is_prime(p)) throw DomainError("sum_two_squares needs a prime p = 1 (mod 4), got " + std::to_string(p));
  for (Int a = 1; a * a <= p / 2 + 1; ++a) {
    Int rest = p - a * a;
    if (!is_perfect_square(rest)) continue;
    Int b = isqrt(rest);
    return a % 2 == 1 ? TwoSquares{a, b} : TwoSquares{b, a};
  }
  throw DomainError("unreachable: prime 1 mod 4 with no two-squares form");
}

struct PrimePower {
  GaussInt prime;  // canonical
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  GaussInt unit{1};
  std::vector<PrimePower> factors;  // ordered by (norm, re, im)
};

inline GaussInt power(GaussInt base, int e) {
  GaussInt r{1};
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

inline GaussInt expand(const Factorization& f) {
  GaussInt r = f.unit;
  for (const auto& pp : f.factors) r *= power(pp.prime, pp.exponent);
  return r;
}

/// Complete factorization. Every Gaussian prime lies over a rational prime
/// dividing the norm, so the norm's factorization tells us which primes to try.
inline Factorization factorize(const GaussInt& a) {
  if (a.is_zero()) throw DomainError("cannot factorize 0");
  Factorization out;
  GaussInt rest = a;
  auto pull = [&](const GaussInt& p, int times) {
    for (int k = 0; k < times; ++k) rest = exact_div(rest, p);
    GaussInt c = canonical(p);
    for (auto& pp : out.factors) {
      if (pp.prime == c) {
        pp.exponent += times;
        return;
      }
    }
    out.factors.push_back({c, times});
  };

  for (const auto& [p, e] : factor_integer(norm(a))) {
    if (p == 2) {
      pull(kOnePlusI, e);
    } else if (p % 4 == 3) {
      pull(GaussInt{p}, e / 2);
    } else {
      auto [x, y] = sum_two_squares(p);
      const GaussInt pi{x, y};
      const GaussInt pi_bar = pi.conj();
      int with_pi = 0;
      while (with_pi < e && divides(pi, rest)) {
        rest = exact_div(rest, pi);
        ++with_pi;
      }
      for (int k = with_pi; k < e; ++k) rest = exact_div(rest, pi_bar);
      if (with_pi > 0) out.factors.push_back({canonical(pi), with_pi});
      if (e - with_pi > 0) out.factors.push_back({canonical(pi_bar), e - with_pi});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& l, const PrimePower& r) { return norm_less(l.prime, r.prime); });

  // What is left after removing canonical primes is the unit.
  GaussInt prod{1};
  for (const auto& pp : out.factors) prod *= power(pp.prime, pp.exponent);
  out.unit = exact_div(a, prod);
  return out;
}

/// Every divisor of a up to associates (canonical representatives), including 1
/// and canonical(a), ordered by (norm, re, im).
inline std::vector<GaussInt> divisors_up_to_associates(const GaussInt& a) {
  Factorization f = factorize(a);
  std::vector<GaussInt> out{GaussInt{1}};
  for (const auto& pp : f.factors) {
    std::vector<GaussInt> next;
    for (const auto& d : out) {
      GaussInt cur = d;
      for (int k = 0; k <= pp.exponent; ++k) {
        next.push_back(canonical(cur));
        cur *= pp.prime;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), norm_less);
  return out;
}

}  // namespace zi
