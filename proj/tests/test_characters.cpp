#include <gtest/gtest.h>

#include "qf48/characters.hpp"

using namespace qf48;

namespace {

const std::vector<std::string> kronecker_names = {"chi8", "chi12", "chi24", "chi-3", "chi-4", "chi-8"};

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1;
  b = ((b % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// (d/n) for n >= 1 from the prime factorization of n and Euler's criterion.
int kronecker_by_factoring(std::int64_t d, std::int64_t n) {
  int out = 1;
  for (std::int64_t p = 2; n > 1; ++p) {
    while (n % p == 0) {
      n /= p;
      int v;
      if (p == 2) {
        const std::int64_t r = ((d % 8) + 8) % 8;
        v = (d % 2 == 0) ? 0 : (r == 1 || r == 7) ? 1 : -1;
      } else {
        const std::int64_t e = powmod(d, (p - 1) / 2, p);
        v = e == 0 ? 0 : e == 1 ? 1 : -1;
      }
      out *= v;
    }
  }
  return out;
}

}  // namespace

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker_symbol(8, 3), -1);
  EXPECT_EQ(kronecker_symbol(12, 5), -1);
  EXPECT_EQ(kronecker_symbol(-4, 1), 1);
  EXPECT_EQ(kronecker_symbol(-4, 3), -1);
  EXPECT_EQ(kronecker_symbol(8, 2), 0);
  EXPECT_EQ(kronecker_symbol(5, 0), 0);
  EXPECT_EQ(kronecker_symbol(1, 0), 1);
}

TEST(Kronecker, AgreesWithEulerCriterion) {
  for (std::int64_t d : {-8, -4, -3, 5, 8, 12, 13, 24, -7, 21})
    for (std::int64_t n = 1; n <= 500; ++n)
      ASSERT_EQ(kronecker_symbol(d, n), kronecker_by_factoring(d, n)) << d << " " << n;
}

TEST(Kronecker, ZeroExactlyWhenSharingAFactor) {
  for (std::int64_t d : {-8, -4, -3, 8, 12, 24})
    for (std::int64_t n = 1; n <= 300; ++n)
      EXPECT_EQ(kronecker_symbol(d, n) == 0, std::gcd(d < 0 ? -d : d, n) > 1) << d << " " << n;
}

TEST(Character, Evaluation) {
  EXPECT_EQ(Character::trivial()(17), 1);
  EXPECT_EQ(Character::trivial()(48), 1);
  EXPECT_EQ(Character::parse("chi8")(2), 0);
  EXPECT_EQ(Character::parse("chi-4")(3), -1);
  const Character chi0 = Character::parse("chi0");
  EXPECT_EQ(chi0(5), 1);
  EXPECT_EQ(chi0(9), 0);
  EXPECT_EQ(chi0(10), 0);
  EXPECT_EQ(chi0.conductor(), 48);
}

TEST(Character, NamesRoundTrip) {
  for (const char* name : {"1", "chi0", "chi8", "chi12", "chi24", "chi-3", "chi-4", "chi-8"})
    EXPECT_EQ(Character::parse(name).name(), name);
  EXPECT_THROW(Character::parse("chi5"), std::invalid_argument);
  EXPECT_THROW(Character::parse("chi"), std::invalid_argument);
  EXPECT_THROW(Character::parse("x"), std::invalid_argument);
}

TEST(Character, ConductorIsAbsoluteDiscriminant) {
  for (const auto& name : kronecker_names) {
    const Character c = Character::parse(name);
    EXPECT_EQ(c.conductor(), std::abs(c.discriminant())) << name;
  }
  EXPECT_EQ(Character::trivial().conductor(), 1);
}

TEST(Character, TableMatchesKroneckerSymbol) {
  for (const auto& name : kronecker_names) {
    const Character c = Character::parse(name);
    for (std::int64_t n = 1; n <= 1000; ++n) ASSERT_EQ(c(n), kronecker_symbol(c.discriminant(), n)) << name;
  }
}

TEST(CharacterProperty, Periodicity) {
  std::vector<Character> all;
  for (const auto& name : kronecker_names) all.push_back(Character::parse(name));
  all.push_back(Character::trivial());
  all.push_back(Character::parse("chi0"));
  ASSERT_EQ(all.size(), 8u);
  for (const auto& c : all)
    for (std::int64_t n = 1; n <= 1000; ++n) ASSERT_EQ(c(n), c(n + c.conductor())) << c.name() << " " << n;
}

TEST(CharacterProperty, CompleteMultiplicativity) {
  for (const auto& name : kronecker_names) {
    const Character c = Character::parse(name);
    for (std::int64_t m = 1; m <= 200; ++m)
      for (std::int64_t n = 1; n <= 200; ++n) ASSERT_EQ(c(m * n), c(m) * c(n)) << name << " " << m << " " << n;
  }
}

TEST(CharacterProperty, ParityTable) {
  for (const char* odd : {"chi-3", "chi-4", "chi-8"}) {
    const Character c = Character::parse(odd);
    EXPECT_EQ(c.parity(), -1) << odd;
    EXPECT_EQ(c(c.conductor() - 1), -1) << odd;
    EXPECT_EQ(c(-1), -1) << odd;
  }
  for (const char* even : {"chi8", "chi12", "chi24"}) {
    const Character c = Character::parse(even);
    EXPECT_EQ(c.parity(), 1) << even;
    EXPECT_EQ(c(c.conductor() - 1), 1) << even;
    EXPECT_EQ(c(-1), 1) << even;
  }
}

TEST(Space, NamesAndDimensions) {
  EXPECT_EQ(space_dimension(Space::chi0), 14u);
  EXPECT_EQ(space_dimension(Space::chi8), 12u);
  EXPECT_EQ(space_dimension(Space::chi12), 14u);
  EXPECT_EQ(space_dimension(Space::chi24), 12u);
  for (Space s : all_spaces) EXPECT_EQ(parse_space(space_name(s)), s);
  EXPECT_THROW(parse_space("chi5"), std::invalid_argument);
}
