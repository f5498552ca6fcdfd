#pragma once

// Exact arithmetic in the ring of Gaussian integers Z[i].

#include <array>
#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "zi/integer.hpp"

namespace zi {

/// An element re + im*i of Z[i]. All arithmetic is overflow-checked.
struct GaussInt {
  Int re = 0;
  Int im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(Int re_, Int im_ = 0) : re(re_), im(im_) {}

  friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] bool is_unit() const {
    return (im == 0 && (re == 1 || re == -1)) || (re == 0 && (im == 1 || im == -1));
  }

  [[nodiscard]] GaussInt conj() const { return {re, checked_neg(im)}; }
  [[nodiscard]] GaussInt times_i() const { return {checked_neg(im), re}; }

  GaussInt operator-() const { return {checked_neg(re), checked_neg(im)}; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)};
  }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
            checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
  }
  GaussInt& operator+=(const GaussInt& b) { return *this = *this + b; }
  GaussInt& operator-=(const GaussInt& b) { return *this = *this - b; }
  GaussInt& operator*=(const GaussInt& b) { return *this = *this * b; }
};

inline const GaussInt kI{0, 1};
inline const GaussInt kOnePlusI{1, 1};

inline Int norm(const GaussInt& a) { return checked_add(square(a.re), square(a.im)); }

/// Lexicographic key (norm, re, im); used wherever a deterministic order is needed.
inline std::strong_ordering norm_order(const GaussInt& a, const GaussInt& b) {
  if (auto c = norm(a) <=> norm(b); c != 0) return c;
  if (auto c = a.re <=> b.re; c != 0) return c;
  return a.im <=> b.im;
}

inline bool norm_less(const GaussInt& a, const GaussInt& b) { return norm_order(a, b) < 0; }

/// The four unit multiples in the order {a, -a, i*a, -i*a}.
inline std::array<GaussInt, 4> units_and_associates(const GaussInt& a) {
  return {a, -a, a.times_i(), -a.times_i()};
}

inline std::array<GaussInt, 4> units() { return units_and_associates(GaussInt{1}); }

struct CanonicalForm {
  GaussInt canonical;
  GaussInt unit;  // canonical == unit * original
};

/// The associate with re > 0 and im >= 0 (or 0 for the zero element).
inline CanonicalForm canonical_associate(const GaussInt& a) {
  if (a.is_zero()) return {a, GaussInt{1}};
  for (const GaussInt& u : units()) {
    GaussInt c = u * a;
    if (c.re > 0 && c.im >= 0) return {c, u};
  }
  throw DomainError("unreachable: no first-quadrant associate");
}

inline GaussInt canonical(const GaussInt& a) { return canonical_associate(a).canonical; }

inline bool are_associates(const GaussInt& a, const GaussInt& b) { return canonical(a) == canonical(b); }

struct DivMod {
  GaussInt quotient;
  GaussInt remainder;
};

namespace detail {
// Nearest integer to num/den (den > 0), halves rounded toward +infinity.
inline Int round_half_up(Int num, Int den) {
  return floor_div(checked_add(checked_mul(2, num), den), checked_mul(2, den));
}
}  // namespace detail

/// Euclidean division a = q*b + r with norm(r) <= norm(b)/2.
inline DivMod euclid_divmod(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw DomainError("Gaussian division by zero");
  const Int n = norm(b);
  const GaussInt num = a * b.conj();
  GaussInt q{detail::round_half_up(num.re, n), detail::round_half_up(num.im, n)};
  return {q, a - q * b};
}

inline bool divides(const GaussInt& d, const GaussInt& a) {
  if (d.is_zero()) return a.is_zero();
  return euclid_divmod(a, d).remainder.is_zero();
}

/// Exact quotient a/b; throws if b does not divide a.
inline GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  auto [q, r] = euclid_divmod(a, b);
  if (!r.is_zero()) throw DomainError("exact_div: divisor does not divide dividend");
  return q;
}

inline GaussInt gcd(GaussInt a, GaussInt b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    GaussInt r = euclid_divmod(a, b).remainder;
    a = b;
    b = r;
  }
  return canonical(a);
}

inline GaussInt gcd3(const GaussInt& a, const GaussInt& b, const GaussInt& c) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) throw DomainError("gcd of three zeros is undefined");
  if (a.is_zero() && b.is_zero()) return canonical(c);
  return gcd(gcd(a, b), c);
}

// ---------------------------------------------------------------------------
// Parity. An element is even when its coordinates agree mod 2; this is the
// same as divisibility by 1+i and as the norm being even.

enum class Parity { Even, Odd };

inline Parity parity_of(const GaussInt& a) {
  return ((a.re - a.im) % 2 == 0) ? Parity::Even : Parity::Odd;
}

inline int residue_mod_one_plus_i(const GaussInt& a) {
  return euclid_divmod(a, kOnePlusI).remainder.is_zero() ? 0 : 1;
}

inline Parity parity_by_norm(const GaussInt& a) { return norm(a) % 2 == 0 ? Parity::Even : Parity::Odd; }

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// ---------------------------------------------------------------------------
// Text form: "3+4i", "-1+2i", "1-i", "2i", "-i", "7", "0".

inline std::string to_string(const GaussInt& a) {
  if (a.im == 0) return std::to_string(a.re);
  std::string imag;
  if (a.im == 1) imag = "i";
  else if (a.im == -1) imag = "-i";
  else imag = std::to_string(a.im) + "i";
  if (a.re == 0) return imag;
  std::string out = std::to_string(a.re);
  if (a.im > 0) out += '+';
  return out + imag;
}

inline std::ostream& operator<<(std::ostream& os, const GaussInt& a) { return os << to_string(a); }

namespace detail {

struct TermCursor {
  std::string_view s;
  std::size_t pos = 0;

  [[nodiscard]] bool done() const { return pos == s.size(); }

  // [sign] [digits] ['i']; at least one of digits or 'i' must be present.
  bool term(Int& value, bool& imaginary) {
    bool negative = false;
    if (!done() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
    std::size_t start = pos;
    Int magnitude = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      magnitude = checked_add(checked_mul(magnitude, 10), s[pos] - '0');
      ++pos;
    }
    bool has_digits = pos > start;
    imaginary = !done() && s[pos] == 'i';
    if (imaginary) ++pos;
    if (!has_digits && !imaginary) return false;
    if (!has_digits) magnitude = 1;
    value = negative ? -magnitude : magnitude;
    return true;
  }
};

}  // namespace detail

/// Parses the text form written by to_string; signs are optional on either part
/// ("+3+4i", "3+-4i" are accepted).
inline GaussInt parse_gauss(std::string_view text) {
  auto fail = [&]() -> GaussInt { throw DomainError("not a Gaussian integer: '" + std::string(text) + "'"); };
  if (text.empty()) return fail();
  detail::TermCursor cur{text};
  Int first = 0;
  bool first_imag = false;
  if (!cur.term(first, first_imag)) return fail();
  if (cur.done()) return first_imag ? GaussInt{0, first} : GaussInt{first, 0};
  if (first_imag) return fail();

  // The joining operator, optionally followed by the imaginary part's own sign.
  char op = text[cur.pos];
  if (op != '+' && op != '-') return fail();
  ++cur.pos;
  Int second = 0;
  bool second_imag = false;
  if (!cur.term(second, second_imag)) return fail();
  if (!second_imag || !cur.done()) return fail();
  if (op == '-') second = checked_neg(second);
  return {first, second};
}

}  // namespace zi
