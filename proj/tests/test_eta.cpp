#include <gtest/gtest.h>

#include <numeric>

#include "qf48/eta.hpp"

using namespace qf48;

namespace {

// prod_{n>=1} (1 - q^{dn}) from the pentagonal number series.
QSeries euler_product_pentagonal(std::size_t d, std::size_t p) {
  // sum_k (-1)^k q^{d k(3k-1)/2} over all integers k.
  std::vector<Rational> c(p);
  c[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const Rational sign(k % 2 == 0 ? 1 : -1);
    const auto lo = static_cast<std::size_t>(k * (3 * k - 1) / 2) * d;
    const auto hi = static_cast<std::size_t>(k * (3 * k + 1) / 2) * d;
    if (lo >= p) break;
    c[lo] += sign;
    if (hi < p) c[hi] += sign;
  }
  return QSeries(std::move(c));
}

QSeries eta_by_pentagonal(const EtaQuotient& q, std::size_t p) {
  const std::size_t shift = q.leading_exponent();
  QSeries prod = QSeries::one(p);
  for (const auto& f : q.factors()) {
    QSeries base = euler_product_pentagonal(static_cast<std::size_t>(f.scale), p);
    if (f.exponent < 0) base = invert_unit(base);
    for (int i = 0; i < std::abs(f.exponent); ++i) prod = prod * base;
  }
  std::vector<Rational> out(p);
  for (std::size_t i = 0; i + shift < p; ++i) out[i + shift] = prod[i];
  return QSeries(std::move(out));
}

}  // namespace

TEST(EtaQuotient, ParseAndPrint) {
  const EtaQuotient q = EtaQuotient::parse("2^-1 4^{4} 6^-1 8^-1 12^4 24^-1");
  EXPECT_EQ(q.str(), "2^-1 4^4 6^-1 8^-1 12^4 24^-1");
  EXPECT_EQ(q.weighted_sum(), 24);
  EXPECT_EQ(q.twice_weight(), 4);
  EXPECT_THROW(EtaQuotient::parse("2^1 2^1"), std::invalid_argument);
  EXPECT_THROW(EtaQuotient::parse("2^0"), std::invalid_argument);
  EXPECT_THROW(EtaQuotient::parse("2"), std::invalid_argument);
  EXPECT_THROW(EtaQuotient::parse("x^1"), std::invalid_argument);
}

TEST(EtaQuotient, RejectsBadPrefactor) {
  EXPECT_THROW(eta_quotient_expansion(EtaQuotient::parse("1^1"), 10), std::domain_error);
  EXPECT_THROW(eta_quotient_expansion(EtaQuotient::parse("1^-24"), 10), std::domain_error);
}

TEST(EtaQuotient, EmptyIsOne) {
  EXPECT_EQ(eta_quotient_expansion(EtaQuotient(), 10), QSeries::one(10));
}

TEST(EtaQuotient, Delta24Values) {
  const QSeries f = eta_quotient_expansion(EtaQuotient::parse("2^1 4^1 6^1 12^1"), 50);
  EXPECT_EQ(f[0], Rational(0));
  EXPECT_EQ(f[1], Rational(1));
  EXPECT_EQ(f[2], Rational(0));
  EXPECT_EQ(f[3], Rational(-1));
  EXPECT_EQ(f[5], Rational(-2));
}

TEST(NamedCusp, LeadingCoefficients) {
  EXPECT_EQ(named_cusp_form("Delta_2_48", 20)[1], Rational(1));
  EXPECT_EQ(named_cusp_form("Delta_2_24_chi8_1", 20)[1], Rational(1));
  EXPECT_THROW(named_cusp_form("Delta_9", 20), std::invalid_argument);
}

TEST(NamedCusp, Chi12TwistSupport) {
  const QSeries a = named_cusp_form("Delta_2_48_chi12_1", 200);
  const QSeries b = named_cusp_form("Delta_2_48_chi12_2", 200);
  for (std::size_t n = 0; n < 200; ++n) {
    if (n % 4 != 1) {
      EXPECT_TRUE(a[n].is_zero()) << n;
    }
    if (n % 4 != 3) {
      EXPECT_TRUE(b[n].is_zero()) << n;
    }
  }
  EXPECT_EQ(a[1], Rational(1));
  EXPECT_EQ(b[1], Rational(0));
}

TEST(NamedCusp, AliasesShareOneQuotient) {
  EXPECT_EQ(named_cusp_form("Delta_2_24_chi24_2", 100), named_cusp_form("Delta_2_48_chi24_2", 100));
}

TEST(EtaProperty, PrefactorIntegralityForCatalogue) {
  for (const auto& e : cusp_catalogue) {
    const EtaQuotient q = EtaQuotient::parse(e.eta);
    EXPECT_EQ(q.weighted_sum() % 24, 0) << e.name;
    EXPECT_GE(q.weighted_sum(), 24) << e.name;
    EXPECT_EQ(q.twice_weight(), 4) << e.name;
  }
}

TEST(EtaProperty, CatalogueIsCuspidalWithSmallLeadingTerm) {
  for (const auto& e : cusp_catalogue) {
    const QSeries f = named_cusp_form(e.name, 200);
    EXPECT_TRUE(f[0].is_zero()) << e.name;
    EXPECT_TRUE(f[1] == Rational(0) || f[1] == Rational(1)) << e.name;
  }
}

TEST(EtaProperty, ExpansionMatchesPentagonalRoute) {
  for (const auto& e : cusp_catalogue) {
    const EtaQuotient q = EtaQuotient::parse(e.eta);
    EXPECT_EQ(eta_quotient_expansion(q, 200), eta_by_pentagonal(q, 200)) << e.name;
  }
}

TEST(EtaProperty, Delta24IsMultiplicative) {
  const QSeries f = named_cusp_form("Delta_2_24", 101);
  for (std::size_t m = 1; m <= 100; ++m)
    for (std::size_t n = 1; m * n <= 100; ++n)
      if (std::gcd(m, n) == 1) {
        EXPECT_EQ(f[m * n], f[m] * f[n]) << m << " " << n;
      }
}

TEST(EtaProperty, CacheReturnsIdenticalSeries) {
  const QSeries a = cached_cusp_form("Delta_2_48", 150);
  const QSeries b = cached_cusp_form("Delta_2_48", 120);
  EXPECT_GE(b.precision(), 150u);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.truncated(150), named_cusp_form("Delta_2_48", 150));
}
