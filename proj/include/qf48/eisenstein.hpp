#pragma once

// Eisenstein series with character pairs, the quasimodular E_2, and the
// weight-2 combinations phi_{a,b} = (b E_2(bz) - a E_2(az)) / (b - a).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qf48/arith.hpp"
#include "qf48/characters.hpp"
#include "qf48/qseries.hpp"

namespace qf48 {

/// sigma_{k-1,chi,psi}(n) = sum_{d | n} psi(d) chi(n/d) d^{k-1}.
inline Rational twisted_sigma(unsigned k, const Character& chi, const Character& psi,
                              std::int64_t n) {
  if (n < 1) throw std::invalid_argument("twisted_sigma: n must be positive");
  if (k == 0) throw std::invalid_argument("twisted_sigma: weight must be positive");
  Integer total = 0;
  Integer power;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int v = psi(d) * chi(n / d);
    if (v == 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), k - 1);
    if (v > 0) total += power;
    else total -= power;
  }
  return Rational(total);
}

/// twisted_sigma at n/a; 0 when the argument is not a positive integer.
inline Rational twisted_sigma(unsigned k, const Character& chi, const Character& psi,
                              const Rational& x) {
  if (!x.is_integer() || x.sign() <= 0) return 0;
  return twisted_sigma(k, chi, psi, x.to_int64());
}

/// E_{k,chi,psi}(dilation * z).
struct EisensteinSpec {
  unsigned weight = 2;
  Character chi = Character::trivial();
  Character psi = Character::trivial();
  std::size_t dilation = 1;

  std::string str() const {
    return "E" + std::to_string(weight) + "(" + chi.name() + "," + psi.name() + "," +
           std::to_string(dilation) + ")";
  }
};

/// Throws unless chi(-1) psi(-1) = (-1)^k, N M != 1, and dilation >= 1.
inline void validate(const EisensteinSpec& spec) {
  if (spec.weight < 1) throw std::invalid_argument("Eisenstein series: weight must be positive");
  if (spec.dilation < 1) throw std::invalid_argument("Eisenstein series: dilation must be positive");
  const int sign = (spec.weight % 2 == 0) ? 1 : -1;
  if (spec.chi.parity() * spec.psi.parity() != sign)
    throw std::invalid_argument("Eisenstein series " + spec.str() + ": parity condition fails");
  if (spec.chi.conductor() * spec.psi.conductor() == 1)
    throw std::invalid_argument("Eisenstein series " + spec.str() +
                                ": both characters trivial (use e2_series / phi_ab)");
}

/// Constant term: 0 when chi has conductor > 1, else -B_{k,psi} / 2k.
inline Rational eisenstein_constant_term(const EisensteinSpec& spec) {
  if (spec.chi.conductor() > 1) return 0;
  return -bernoulli_generalized(spec.weight, spec.psi) / Rational(2 * static_cast<long>(spec.weight));
}

/// c_0 + sum_{n>=1} sigma_{k-1,chi,psi}(n) q^n, then dilated.
inline QSeries eisenstein_series(const EisensteinSpec& spec, std::size_t precision) {
  validate(spec);
  std::vector<Rational> c(precision);
  c[0] = eisenstein_constant_term(spec);
  for (std::size_t n = 1; n < precision; ++n)
    c[n] = twisted_sigma(spec.weight, spec.chi, spec.psi, static_cast<std::int64_t>(n));
  QSeries e(std::move(c));
  return spec.dilation == 1 ? e : dilate(e, spec.dilation);
}

/// E_2 = 1 - 24 sum sigma(n) q^n.
inline QSeries e2_series(std::size_t precision) {
  std::vector<Rational> c(precision);
  c[0] = 1;
  for (std::size_t n = 1; n < precision; ++n) c[n] = Rational(-24) * sigma(static_cast<std::int64_t>(n));
  return QSeries(std::move(c));
}

inline void validate_phi(std::size_t a, std::size_t b) {
  if (a < 1 || b <= a || b % a != 0)
    throw std::invalid_argument("phi(" + std::to_string(a) + "," + std::to_string(b) +
                                "): need a | b and b > a >= 1");
}

/// phi_{a,b} built from its definition (b E_2(bz) - a E_2(az)) / (b - a).
inline QSeries phi_ab(std::size_t a, std::size_t b, std::size_t precision) {
  validate_phi(a, b);
  const QSeries e2 = e2_series(precision);
  const Rational denom(static_cast<long>(b - a));
  return (Rational(static_cast<long>(b)) / denom) * dilate(e2, b) -
         (Rational(static_cast<long>(a)) / denom) * dilate(e2, a);
}

/// phi_{a,b} from its Fourier expansion
///   1 + 24a/(b-a) sum sigma(n/a) q^n - 24b/(b-a) sum sigma(n/b) q^n.
inline QSeries phi_ab_fourier(std::size_t a, std::size_t b, std::size_t precision) {
  validate_phi(a, b);
  const Rational ca(24 * static_cast<long>(a), static_cast<long>(b - a));
  const Rational cb(24 * static_cast<long>(b), static_cast<long>(b - a));
  std::vector<Rational> c(precision);
  c[0] = 1;
  for (std::size_t n = 1; n < precision; ++n) {
    const auto sn = static_cast<long>(n);
    c[n] = ca * divisor_sigma(1, Rational(sn, static_cast<long>(a))) -
           cb * divisor_sigma(1, Rational(sn, static_cast<long>(b)));
  }
  return QSeries(std::move(c));
}

}  // namespace qf48
