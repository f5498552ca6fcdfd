#pragma once

// Pythagorean triples a^2 + b^2 = c^2 over Z[i].

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "zi/gaussint.hpp"

namespace zi {

struct TripleZi {
  GaussInt alpha;
  GaussInt beta;
  GaussInt gamma;

  friend bool operator==(const TripleZi&, const TripleZi&) = default;

  [[nodiscard]] bool pythagorean() const {
    return alpha * alpha + beta * beta == gamma * gamma;
  }
};

inline bool is_primitive_triple(const TripleZi& t) {
  if (t.alpha.is_zero() && t.beta.is_zero() && t.gamma.is_zero()) return false;
  return gcd3(t.alpha, t.beta, t.gamma).is_unit();
}

/// Generators of a primitive triple: coprime and of different parity.
struct GeneratorPair {
  GaussInt lambda;
  GaussInt mu;

  [[nodiscard]] bool valid() const {
    if (lambda.is_zero() && mu.is_zero()) return false;
    return parity_of(lambda) != parity_of(mu) && gcd(lambda, mu).is_unit();
  }
};

/// (2 lambda mu, lambda^2 - mu^2, lambda^2 + mu^2).
inline TripleZi gen_primitive_triple(const GeneratorPair& g) {
  if (!g.valid()) throw DomainError("generators must be coprime and of different parity");
  const GaussInt l2 = g.lambda * g.lambda;
  const GaussInt m2 = g.mu * g.mu;
  return {GaussInt{2} * g.lambda * g.mu, l2 - m2, l2 + m2};
}

struct NormPrimitivity {
  Int norm_gcd = 0;  // gcd over Z of the three norms
  bool gauss_primitive = false;
};

/// A norm gcd of 1 forces Gaussian primitivity; for Pythagorean triples the
/// two conditions coincide.
inline NormPrimitivity norm_primitivity(const TripleZi& t) {
  return {gcd(gcd(norm(t.alpha), norm(t.beta)), norm(t.gamma)), is_primitive_triple(t)};
}

namespace detail {

// Sign representative: re > 0, or re == 0 and im > 0.
inline GaussInt upper_half(const GaussInt& a) {
  if (a.re > 0 || (a.re == 0 && a.im >= 0)) return a;
  return -a;
}

inline auto triple_key(const TripleZi& t) {
  return std::tuple{norm(t.gamma), t.gamma.re, t.gamma.im, norm(t.alpha), t.alpha.re, t.alpha.im,
                    norm(t.beta),  t.beta.re,  t.beta.im};
}

inline TripleZi normalize_ordered(const TripleZi& t) {
  // Scaling the whole triple by a unit keeps it Pythagorean; the leg and
  // hypotenuse signs are free since only squares appear.
  const GaussInt u = canonical_associate(t.alpha).unit;
  return {u * t.alpha, upper_half(u * t.beta), upper_half(u * t.gamma)};
}

}  // namespace detail

/// Deterministic representative of a triple's class under component
/// associates and leg swap. For triples with nonzero components this
/// coincides with the class under global unit scaling and component signs.
inline TripleZi normalize_triple(const TripleZi& t) {
  TripleZi a = detail::normalize_ordered(t);
  TripleZi b = detail::normalize_ordered({t.beta, t.alpha, t.gamma});
  return detail::triple_key(b) < detail::triple_key(a) ? b : a;
}

/// All Pythagorean triples with nonzero components of norm <= norm_bound, one
/// per class (see normalize_triple), ordered by (norm(gamma), ...).
inline std::vector<TripleZi> enumerate_pythagorean_triples(Int norm_bound, bool primitive_only) {
  if (norm_bound < 0) throw DomainError("enumerate_pythagorean_triples needs a non-negative bound");
  std::vector<GaussInt> ball;
  const Int r = isqrt(norm_bound);
  for (Int x = -r; x <= r; ++x)
    for (Int y = -r; y <= r; ++y)
      if ((x != 0 || y != 0) && x * x + y * y <= norm_bound) ball.push_back({x, y});

  // Squares of hypotenuse candidates; gamma and -gamma share one entry.
  std::map<std::pair<Int, Int>, GaussInt> roots;
  for (const auto& g : ball) {
    GaussInt s = g * g;
    roots.emplace(std::pair{s.re, s.im}, detail::upper_half(g));
  }

  std::map<decltype(detail::triple_key(TripleZi{})), TripleZi> found;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const GaussInt a2 = ball[i] * ball[i];
    for (std::size_t j = i; j < ball.size(); ++j) {
      const GaussInt c2 = a2 + ball[j] * ball[j];
      auto it = roots.find({c2.re, c2.im});
      if (it == roots.end()) continue;
      TripleZi t = normalize_triple({ball[i], ball[j], it->second});
      if (primitive_only && !is_primitive_triple(t)) continue;
      found.emplace(detail::triple_key(t), t);
    }
  }
  std::vector<TripleZi> out;
  out.reserve(found.size());
  for (auto& [k, t] : found) out.push_back(t);
  return out;
}

/// All (x, y, z) with coordinates in [-bound, bound], xyz != 0 and
/// x^4 + y^4 = z^4. Expected to be empty.
inline std::vector<TripleZi> fermat_quartic_search(Int coord_bound) {
  if (coord_bound < 1) throw DomainError("fermat_quartic_search needs bound >= 1");
  std::vector<GaussInt> box;
  std::vector<GaussInt> fourth;
  for (Int x = -coord_bound; x <= coord_bound; ++x)
    for (Int y = -coord_bound; y <= coord_bound; ++y) {
      if (x == 0 && y == 0) continue;
      GaussInt g{x, y};
      GaussInt s = g * g;
      box.push_back(g);
      fourth.push_back(s * s);
    }

  std::unordered_multimap<Int, std::size_t> by_re;
  for (std::size_t k = 0; k < box.size(); ++k) by_re.emplace(fourth[k].re, k);

  std::vector<TripleZi> out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t j = 0; j < box.size(); ++j) {
      const GaussInt sum = fourth[i] + fourth[j];
      auto [lo, hi] = by_re.equal_range(sum.re);
      for (auto it = lo; it != hi; ++it) {
        if (fourth[it->second] == sum) out.push_back({box[i], box[j], box[it->second]});
      }
    }
  }
  return out;
}

/// N(k^2 + t^2) == N(k)^2 + N(t)^2 + 2 Re((k conj(t))^2).
inline bool norm_sum_identity_check(const GaussInt& kappa, const GaussInt& tau) {
  const Int lhs = norm(kappa * kappa + tau * tau);
  const GaussInt cross = kappa * tau.conj();
  const Int rhs = checked_add(checked_add(square(norm(kappa)), square(norm(tau))),
                              checked_mul(2, (cross * cross).re));
  return lhs == rhs;
}

}  // namespace zi
