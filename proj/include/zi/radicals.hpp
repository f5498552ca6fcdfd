#pragma once

// Square roots in Z[i].
//
// For a = n + m*i with m != 0, a root x + y*i satisfies x^2 - y^2 = n and
// 2xy = m, so x^2 + y^2 = l with l^2 = n^2 + m^2. Hence (n, m, l) is a
// Pythagorean triple, x^2 = (n + l)/2 and y = m/(2x).

#include <optional>
#include <vector>

#include "zi/gaussint.hpp"

namespace zi {

struct RadicalResult {
  std::vector<GaussInt> solutions;  // {z, -z}; just {0} for a == 0; empty if none
  bool via_formula = false;         // true when the Pythagorean formula was used (m != 0)
  std::optional<Int> hypotenuse;    // l = sqrt(n^2 + m^2) when integral

  [[nodiscard]] bool solvable() const { return !solutions.empty(); }
};

inline RadicalResult square_radical(const GaussInt& a) {
  RadicalResult out;
  const Int n = a.re;
  const Int m = a.im;
  const Int nn = norm(a);
  if (is_perfect_square(nn)) out.hypotenuse = isqrt(nn);

  if (m == 0) {
    if (n == 0) {
      out.solutions = {GaussInt{0}};
    } else if (n > 0 && is_perfect_square(n)) {
      Int r = isqrt(n);
      out.solutions = {GaussInt{r}, GaussInt{-r}};
    } else if (n < 0 && is_perfect_square(-n)) {
      Int r = isqrt(-n);
      out.solutions = {GaussInt{0, r}, GaussInt{0, -r}};
    }
    return out;
  }

  out.via_formula = true;
  if (!out.hypotenuse) return out;
  const Int l = *out.hypotenuse;
  const Int twice_x2 = checked_add(n, l);
  if (twice_x2 % 2 != 0 || !is_perfect_square(twice_x2 / 2)) return out;
  const Int x = isqrt(twice_x2 / 2);  // x > 0 because m != 0 forces l > |n|
  if (m % (2 * x) != 0) return out;
  const GaussInt z{x, m / (2 * x)};
  out.solutions = {z, -z};
  return out;
}

/// Values n + l and l - n of the real display identity 2*sqrt((n + m i)/2) = t + k i,
/// where t^2 = n + l and k^2 = l - n. Reported only; no integrality is implied.
struct RadicalDisplay {
  Int hypotenuse = 0;
  Int n_plus_l = 0;
  Int l_minus_n = 0;
  bool n_plus_l_square = false;
  bool l_minus_n_square = false;
};

inline RadicalDisplay radical_display_params(Int n, Int m) {
  if (m == 0) throw DomainError("radical_display_params needs m != 0");
  const Int nn = checked_add(square(n), square(m));
  if (!is_perfect_square(nn)) throw DomainError("n^2 + m^2 is not a perfect square");
  RadicalDisplay d;
  d.hypotenuse = isqrt(nn);
  d.n_plus_l = checked_add(n, d.hypotenuse);
  d.l_minus_n = checked_sub(d.hypotenuse, n);
  d.n_plus_l_square = is_perfect_square(d.n_plus_l);
  d.l_minus_n_square = is_perfect_square(d.l_minus_n);
  return d;
}

}  // namespace zi
