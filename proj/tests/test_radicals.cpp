#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zi/radicals.hpp"

using namespace zi;

namespace {

bool same_set(std::vector<GaussInt> a, std::vector<GaussInt> b) {
  auto key = [](const GaussInt& l, const GaussInt& r) { return std::pair(l.re, l.im) < std::pair(r.re, r.im); };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  return a == b;
}

std::vector<GaussInt> roots_by_search(const GaussInt& a) {
  std::vector<GaussInt> out;
  const Int n = a.re * a.re + a.im * a.im;
  Int r = 0;
  while ((r + 1) * (r + 1) * (r + 1) * (r + 1) <= n) ++r;  // |z|^4 = N(a)
  for (Int x = -r; x <= r; ++x)
    for (Int y = -r; y <= r; ++y)
      if (GaussInt{x, y} * GaussInt{x, y} == a) out.push_back({x, y});
  return out;
}

}  // namespace

TEST(SquareRadical, Examples) {
  auto r = square_radical({3, 4});
  EXPECT_TRUE(same_set(r.solutions, {{2, 1}, {-2, -1}}));
  EXPECT_TRUE(r.via_formula);
  EXPECT_EQ(r.hypotenuse, 5);

  r = square_radical({0, 2});
  EXPECT_TRUE(same_set(r.solutions, {{1, 1}, {-1, -1}}));

  r = square_radical({1, 1});
  EXPECT_FALSE(r.solvable());
  EXPECT_FALSE(r.hypotenuse.has_value());
}

TEST(SquareRadical, RealAxis) {
  EXPECT_TRUE(same_set(square_radical({9}).solutions, {{3}, {-3}}));
  EXPECT_TRUE(same_set(square_radical({-9}).solutions, {{0, 3}, {0, -3}}));
  EXPECT_FALSE(square_radical({8}).solvable());
  EXPECT_FALSE(square_radical({-8}).solvable());
  EXPECT_TRUE(same_set(square_radical({0}).solutions, {{0}}));
}

TEST(SquareRadical, RoundTrip) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 500; ++k) {
    GaussInt z = oracle::random_gauss(rng, 500);
    auto r = square_radical(z * z);
    if (z.is_zero()) {
      EXPECT_TRUE(same_set(r.solutions, {z}));
    } else {
      ASSERT_TRUE(same_set(r.solutions, {z, -z})) << to_string(z);
    }
  }
}

TEST(SquareRadical, CompleteAgainstExhaustiveSearch) {
  for (Int x = -60; x <= 60; ++x) {
    for (Int y = -60; y <= 60; ++y) {
      GaussInt a{x, y};
      auto r = square_radical(a);
      ASSERT_TRUE(same_set(r.solutions, roots_by_search(a))) << to_string(a);
      if (r.solvable() && y != 0) {
        const Int root_re = r.solutions[0].re;
        ASSERT_EQ(x + *r.hypotenuse, 2 * root_re * root_re);
      }
    }
  }
}

TEST(RadicalDisplay, Examples) {
  auto d = radical_display_params(3, 4);
  EXPECT_EQ(d.hypotenuse, 5);
  EXPECT_EQ(d.n_plus_l, 8);
  EXPECT_EQ(d.l_minus_n, 2);
  EXPECT_FALSE(d.n_plus_l_square);
  EXPECT_FALSE(d.l_minus_n_square);

  d = radical_display_params(5, 12);
  EXPECT_EQ(d.n_plus_l, 18);
  EXPECT_EQ(d.l_minus_n, 8);
  EXPECT_FALSE(d.n_plus_l_square);
  EXPECT_FALSE(d.l_minus_n_square);

  d = radical_display_params(0, 2);
  EXPECT_EQ(d.n_plus_l, 2);
  EXPECT_EQ(d.l_minus_n, 2);

  EXPECT_THROW(radical_display_params(1, 1), DomainError);
  EXPECT_THROW(radical_display_params(3, 0), DomainError);
}

TEST(RadicalDisplay, RealIdentity) {
  // With t^2 = n + l and k^2 = l - n: t^2 - k^2 = 2n and t^2 k^2 = m^2,
  // so (t + k i)^2 = 2(n + |m| i).
  for (Int n = -80; n <= 80; ++n)
    for (Int m = 1; m <= 80; ++m)
      if (oracle::is_square(n * n + m * m)) {
        auto d = radical_display_params(n, m);
        ASSERT_EQ(d.n_plus_l - d.l_minus_n, 2 * n);
        ASSERT_EQ(d.n_plus_l * d.l_minus_n, m * m);
      }
  // Both can be squares: 2 sqrt(4i / 2) = 2 + 2i.
  auto d = radical_display_params(0, 4);
  EXPECT_TRUE(d.n_plus_l_square && d.l_minus_n_square);
}
