#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "qf48/oracle.hpp"

using namespace qf48;

namespace {

// Plain four-fold loop over a box, no per-coordinate solving.
template <class Value>
std::int64_t box_count(std::int64_t n, std::int64_t r, Value value) {
  std::int64_t count = 0;
  for (std::int64_t x = -r; x <= r; ++x)
    for (std::int64_t y = -r; y <= r; ++y)
      for (std::int64_t z = -r; z <= r; ++z)
        for (std::int64_t w = -r; w <= r; ++w) count += value(x, y, z, w) == n;
  return count;
}

std::int64_t hex(std::int64_t x, std::int64_t y) { return x * x + x * y + y * y; }

}  // namespace

TEST(Oracle, Examples) {
  EXPECT_EQ(count_q1({1, 1, 1, 1}, 2), 24);
  EXPECT_EQ(count_q1({1, 1, 1, 4}, 1), 6);
  EXPECT_EQ(count_q1({3, 4, 6, 12}, 0), 1);
  EXPECT_EQ(count_q2({1, 2}, 1), 6);
  EXPECT_EQ(count_q2({1, 2}, 2), 6);
  EXPECT_EQ(count_q2({1, 4}, 0), 1);
  EXPECT_EQ(count_q3({1, 3, 1}, 1), 8);
  EXPECT_EQ(count_q3({1, 3, 1}, 2), 12);
  EXPECT_EQ(count_q3({1, 1, 1}, 0), 1);
  EXPECT_EQ(count_q3({3, 3, 4}, 1), 0);
  EXPECT_EQ(count_q1({1, 2, 4, 4}, 1), 2);
}

TEST(Oracle, RejectsBadInput) {
  EXPECT_THROW(count_q1({1, 1, 1, 1}, -1), std::invalid_argument);
  EXPECT_THROW(count_q2({0, 1}, 3), std::invalid_argument);
  EXPECT_THROW(count_q3({1, 1, -1}, 3), std::invalid_argument);
}

TEST(Oracle, JacobiFourSquares) {
  // r_4(n) = 8 * sum of divisors of n not divisible by 4.
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0 && d % 4 != 0) s += d;
    EXPECT_EQ(count_q1({1, 1, 1, 1}, n), 8 * s) << n;
  }
}

TEST(Oracle, AgreesWithBoxEnumeration) {
  for (std::int64_t n = 0; n <= 30; ++n) {
    EXPECT_EQ(count_q1({1, 2, 3, 6}, n),
              box_count(n, 6, [](auto x, auto y, auto z, auto w) { return x * x + 2 * y * y + 3 * z * z + 6 * w * w; }))
        << n;
    EXPECT_EQ(count_q2({1, 4}, n),
              box_count(n, 7, [](auto x, auto y, auto z, auto w) { return hex(x, y) + 4 * hex(z, w); }))
        << n;
    EXPECT_EQ(count_q3({2, 3, 2}, n),
              box_count(n, 7, [](auto x, auto y, auto z, auto w) { return 2 * x * x + 3 * y * y + 2 * hex(z, w); }))
        << n;
  }
}

TEST(OracleProperty, PermutationInvariance) {
  std::mt19937 rng(48);
  const std::vector<std::array<std::int64_t, 4>> forms = {{1, 1, 1, 4}, {1, 2, 3, 4}, {3, 4, 6, 12}, {1, 3, 4, 12}};
  for (auto a : forms) {
    std::vector<std::int64_t> base;
    for (std::int64_t n = 0; n <= 60; ++n) base.push_back(count_q1(a, n));
    for (int trial = 0; trial < 4; ++trial) {
      std::shuffle(a.begin(), a.end(), rng);
      for (std::int64_t n = 0; n <= 60; ++n) EXPECT_EQ(count_q1(a, n), base[static_cast<std::size_t>(n)]);
    }
  }
  for (std::int64_t n = 0; n <= 60; ++n) {
    EXPECT_EQ(count_q2({1, 8}, n), count_q2({8, 1}, n));
    EXPECT_EQ(count_q3({1, 3, 4}, n), count_q3({3, 1, 4}, n));
  }
}

TEST(OracleProperty, Scaling) {
  for (std::int64_t n = 0; n <= 60; ++n) {
    EXPECT_EQ(count_q1({2, 2, 4, 8}, 2 * n), count_q1({1, 1, 2, 4}, n)) << n;
    EXPECT_EQ(count_q2({2, 4}, 2 * n), count_q2({1, 2}, n)) << n;
    EXPECT_EQ(count_q3({2, 6, 8}, 2 * n), count_q3({1, 3, 4}, n)) << n;
    EXPECT_EQ(count_q1({2, 2, 4, 8}, 2 * n + 1), 0) << n;
  }
}
