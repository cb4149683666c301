#pragma once

// Classical arithmetic functions over exact rationals: divisor sums and
// Bernoulli numbers (plain, polynomial and character-twisted).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qf48/characters.hpp"
#include "qf48/rational.hpp"

namespace qf48 {

/// sigma_r(n) = sum of d^r over the positive divisors d of n; 0 for n <= 0.
inline Rational divisor_sigma(unsigned r, std::int64_t n) {
  if (n <= 0) return 0;
  Integer total = 0;
  Integer term;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), r);
    total += term;
    const std::int64_t e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(e), r);
      total += term;
    }
  }
  return Rational(total);
}

/// sigma_r at a rational argument: 0 unless the argument is a positive
/// integer. This is how sigma(n/a) reads when a does not divide n.
inline Rational divisor_sigma(unsigned r, const Rational& x) {
  if (!x.is_integer() || x.sign() <= 0) return 0;
  return divisor_sigma(r, x.to_int64());
}

/// sigma(n) = sigma_1(n).
inline Rational sigma(std::int64_t n) { return divisor_sigma(1, n); }

/// Binomial coefficient C(n, k) as an exact integer.
inline Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Bernoulli numbers B_0..B_k for x/(e^x - 1), from the recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_table(unsigned k) {
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= k; ++m) {
    Rational acc;
    for (unsigned j = 0; j < m; ++j) acc.add_product(Rational(binomial(m + 1, j)), b[j]);
    b[m] = -acc / Rational(static_cast<long>(m) + 1);
  }
  return b;
}

inline Rational bernoulli(unsigned k) { return bernoulli_table(k)[k]; }

/// Bernoulli polynomial B_k(x) = sum_j C(k, j) B_j x^{k-j}.
inline Rational bernoulli_polynomial(unsigned k, const Rational& x) {
  const auto b = bernoulli_table(k);
  Rational acc;
  for (unsigned j = 0; j <= k; ++j) acc += Rational(binomial(k, j)) * b[j] * pow(x, k - j);
  return acc;
}

/// Generalized Bernoulli number B_{k,psi}, defined by
///   sum_{a=1}^{M} psi(a) x e^{ax} / (e^{Mx} - 1) = sum_n B_{n,psi} x^n / n!
/// with M the conductor of psi, evaluated through the finite formula
///   B_{k,psi} = M^{k-1} sum_{a=1}^{M} psi(a) B_k(a/M).
inline Rational bernoulli_generalized(unsigned k, const Character& psi) {
  if (k == 0) throw std::invalid_argument("bernoulli_generalized: k must be positive");
  const std::int64_t m = psi.conductor();
  Rational acc;
  for (std::int64_t a = 1; a <= m; ++a) {
    const int v = psi(a);
    if (v == 0) continue;
    const Rational term = bernoulli_polynomial(k, Rational(a, m));
    if (v > 0) acc += term;
    else acc -= term;
  }
  return pow(Rational(m), k - 1) * acc;
}

}  // namespace qf48
