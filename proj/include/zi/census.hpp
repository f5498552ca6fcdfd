#pragma once

// Counting functions for Pythagorean triangles over N:
//   kappa(n) - triangles with leg n (not necessarily primitive)
//   eta(d)   - primitive triangles with leg d
//   delta(n) - number of divisors of n
//   chi(l)   - triangles with hypotenuse l
//
// Each count has a definitional brute-force route and, where the census needs
// speed, a closed form from the factorization of the argument.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zi/integer.hpp"

namespace zi {

struct LegPair {
  Int other_leg;
  Int hypotenuse;
  friend bool operator==(const LegPair&, const LegPair&) = default;
};

/// All (x, z) with x >= 1 and x^2 + n^2 = z^2, increasing in x. Scans the
/// factor pairs n^2 = (z - x)(z + x) with both factors of equal parity.
inline std::vector<LegPair> legs_with_cathetus(Int n) {
  std::vector<LegPair> out;
  if (n <= 0) return out;
  const Int n2 = square(n);
  for (Int d = n - 1; d >= 1; --d) {
    if (n2 % d != 0) continue;
    const Int e = n2 / d;
    if ((e - d) % 2 != 0) continue;
    out.push_back({(e - d) / 2, (e + d) / 2});
  }
  return out;
}

inline Int kappa_bruteforce(Int n) {
  if (n < 0) throw DomainError("kappa needs n >= 0");
  return static_cast<Int>(legs_with_cathetus(n).size());
}

/// Primitive triangles with d as a leg (either the odd or the even one).
inline Int eta(Int d) {
  if (d < 1) throw DomainError("eta needs d >= 1");
  Int count = 0;
  for (const auto& lp : legs_with_cathetus(d))
    if (gcd(lp.other_leg, d) == 1) ++count;
  return count;
}

inline Int kappa_via_formula(Int n) {
  if (n < 1) throw DomainError("kappa_via_formula needs n >= 1");
  Int sum = 0;
  for (Int d : divisors(n)) sum += eta(d);
  return sum;
}

inline Int delta(Int n) {
  if (n < 1) throw DomainError("delta needs n >= 1");
  return divisor_count(factor_integer(n));
}

/// Unordered {x, y}, x, y >= 1, with x^2 + y^2 = l^2, by direct search.
inline Int chi_bruteforce(Int l) {
  if (l < 1) throw DomainError("chi needs l >= 1");
  const Int l2 = square(l);
  Int count = 0;
  for (Int x = 1; 2 * x * x < l2; ++x)
    if (is_perfect_square(l2 - x * x)) ++count;
  return count;
}

/// Closed form: (prod over p = 1 mod 4 of (2 e_p + 1) - 1) / 2.
inline Int chi(Int l) {
  if (l < 1) throw DomainError("chi needs l >= 1");
  Int r = 1;
  for (const auto& [p, e] : factor_integer(l))
    if (p % 4 == 1) r = checked_mul(r, 2 * e + 1);
  return (r - 1) / 2;
}

/// Closed form for primitive triangles with leg d: zero for d = 1 or
/// d = 2 (mod 4), otherwise 2^(omega(d) - 1).
inline Int eta_closed_form(Int d) {
  if (d < 1) throw DomainError("eta needs d >= 1");
  if (d == 1 || d % 4 == 2) return 0;
  return Int{1} << (factor_integer(d).size() - 1);
}

/// Closed form for kappa: with n = 2^a m, m odd, the number of valid factor
/// pairs of n^2 is ((2a - 1) tau(m^2) - 1) / 2 for a >= 1 and
/// (tau(m^2) - 1) / 2 for a = 0.
inline Int kappa_closed_form(Int n) {
  if (n < 0) throw DomainError("kappa needs n >= 0");
  if (n == 0) return 0;
  Int tau_odd_sq = 1;
  int a = 0;
  for (const auto& [p, e] : factor_integer(n)) {
    if (p == 2) a = e;
    else tau_odd_sq = checked_mul(tau_odd_sq, 2 * e + 1);
  }
  const Int pairs = a == 0 ? tau_odd_sq : checked_mul(2 * a - 1, tau_odd_sq);
  return (pairs - 1) / 2;
}

// ---------------------------------------------------------------------------
// Census reports.

struct CensusRow {
  Int n = 0;
  Int kappa = 0;
  Int eta_sum = 0;
  Int delta = 0;
  Int delta_sq = 0;
  double ratio_half = 0.0;              // kappa / sqrt(n)
  std::optional<double> prachar_bound;  // exp(2 ln2 ln n / ln ln n), n >= 100 only
};

inline constexpr double kPracharRho = 1.0;
inline constexpr Int kPracharMinN = 100;

inline std::optional<double> prachar_bound(Int n) {
  if (n < kPracharMinN) return std::nullopt;
  const double ln = std::log(static_cast<double>(n));
  return std::exp((1.0 + kPracharRho) * std::log(2.0) * ln / std::log(ln));
}

inline CensusRow census_row(Int n) {
  if (n < 1) throw DomainError("census rows need n >= 1");
  CensusRow row;
  row.n = n;
  row.kappa = kappa_closed_form(n);
  for (Int d : divisors(n)) row.eta_sum += eta_closed_form(d);
  row.delta = delta(n);
  row.delta_sq = square(row.delta);
  row.ratio_half = static_cast<double>(row.kappa) / std::sqrt(static_cast<double>(n));
  row.prachar_bound = prachar_bound(n);
  return row;
}

struct CensusSummary {
  Int n_from = 0;
  Int n_to = 0;
  double max_ratio_half = 0.0;
  Int argmax_ratio_half = 0;
  double max_ratio_one = 0.0;  // max kappa(n) / n
  Int argmax_ratio_one = 0;
  bool kappa_matches_eta_sum = true;
  bool kappa_below_delta_sq = true;
  // Top decade = [max(n_from, n_to / 10), n_to]. The running maximum of
  // ratio_half does not grow there iff the top-decade maximum stays at or
  // below the maximum seen before it. Absent when nothing precedes the decade.
  std::optional<double> max_ratio_half_before_top_decade;
  double max_ratio_half_top_decade = 0.0;
  std::optional<bool> running_max_flat_in_top_decade;
};

struct CensusReport {
  std::vector<CensusRow> rows;
  CensusSummary summary;
};

inline CensusReport census_range(Int n_from, Int n_to) {
  if (n_from < 1 || n_from > n_to) throw DomainError("census_range needs 1 <= from <= to");
  CensusReport rep;
  auto& s = rep.summary;
  s.n_from = n_from;
  s.n_to = n_to;
  const Int top_start = std::max(n_from, n_to / 10);
  rep.rows.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (Int n = n_from; n <= n_to; ++n) {
    CensusRow row = census_row(n);
    s.kappa_matches_eta_sum = s.kappa_matches_eta_sum && row.kappa == row.eta_sum;
    s.kappa_below_delta_sq = s.kappa_below_delta_sq && row.kappa < row.delta_sq;
    if (row.ratio_half > s.max_ratio_half || s.argmax_ratio_half == 0) {
      s.max_ratio_half = row.ratio_half;
      s.argmax_ratio_half = n;
    }
    const double r1 = static_cast<double>(row.kappa) / static_cast<double>(n);
    if (r1 > s.max_ratio_one || s.argmax_ratio_one == 0) {
      s.max_ratio_one = r1;
      s.argmax_ratio_one = n;
    }
    if (n < top_start) {
      s.max_ratio_half_before_top_decade =
          std::max(s.max_ratio_half_before_top_decade.value_or(0.0), row.ratio_half);
    } else {
      s.max_ratio_half_top_decade = std::max(s.max_ratio_half_top_decade, row.ratio_half);
    }
    rep.rows.push_back(row);
  }
  if (s.max_ratio_half_before_top_decade)
    s.running_max_flat_in_top_decade = s.max_ratio_half_top_decade <= *s.max_ratio_half_before_top_decade;
  return rep;
}

inline constexpr const char* kCensusCsvHeader = "n,kappa,eta_sum,delta,delta_sq,ratio_half,prachar_bound";

inline std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

/// One CSV line (no newline). The Prachar column is empty below n = 100.
inline std::string to_csv(const CensusRow& r) {
  std::string line = std::to_string(r.n) + ',' + std::to_string(r.kappa) + ',' + std::to_string(r.eta_sum) + ',' +
                     std::to_string(r.delta) + ',' + std::to_string(r.delta_sq) + ',' + format_fixed6(r.ratio_half) +
                     ',';
  if (r.prachar_bound) line += format_fixed6(*r.prachar_bound);
  return line;
}

inline void write_csv(std::ostream& os, const std::vector<CensusRow>& rows) {
  os << kCensusCsvHeader << '\n';
  for (const auto& r : rows) os << to_csv(r) << '\n';
}

}  // namespace zi
