#pragma once

// Truncated power series in q with exact rational coefficients.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qf48/rational.hpp"

namespace qf48 {

/// Default number of known coefficients (indices 0..199).
inline constexpr std::size_t default_precision = 200;

/// sum_{n < P} c_n q^n. The precision P counts the known coefficients.
/// Binary operations work at the smaller of the two precisions.
class QSeries {
 public:
  /// Zero series with P known coefficients.
  explicit QSeries(std::size_t precision) : c_(precision) {
    if (precision == 0) throw std::invalid_argument("QSeries: precision must be positive");
  }

  explicit QSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("QSeries: precision must be positive");
  }

  /// The constant series 1.
  static QSeries one(std::size_t precision) {
    QSeries s(precision);
    s.c_[0] = 1;
    return s;
  }

  std::size_t precision() const { return c_.size(); }

  const Rational& operator[](std::size_t n) const { return c_[n]; }

  /// Coefficient of q^n; throws when n is beyond the precision.
  const Rational& coeff(std::size_t n) const {
    if (n >= c_.size()) throw std::out_of_range("QSeries::coeff: index beyond precision");
    return c_[n];
  }

  std::span<const Rational> coefficients() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
  }

  QSeries truncated(std::size_t precision) const {
    if (precision == 0 || precision > c_.size())
      throw std::invalid_argument("QSeries::truncated: precision out of range");
    return QSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(precision)));
  }

  QSeries operator-() const {
    QSeries out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
  }

  friend QSeries operator+(const QSeries& f, const QSeries& g) {
    QSeries out(std::min(f.precision(), g.precision()));
    for (std::size_t i = 0; i < out.precision(); ++i) out.c_[i] = f.c_[i] + g.c_[i];
    return out;
  }

  friend QSeries operator-(const QSeries& f, const QSeries& g) {
    QSeries out(std::min(f.precision(), g.precision()));
    for (std::size_t i = 0; i < out.precision(); ++i) out.c_[i] = f.c_[i] - g.c_[i];
    return out;
  }

  friend QSeries operator*(const Rational& c, const QSeries& f) {
    QSeries out(f.precision());
    if (c.is_zero()) return out;
    for (std::size_t i = 0; i < out.precision(); ++i) out.c_[i] = c * f.c_[i];
    return out;
  }

  /// Cauchy product truncated to the smaller precision. Zero coefficients
  /// of the left factor are skipped, which makes theta products cheap.
  friend QSeries operator*(const QSeries& f, const QSeries& g) {
    const std::size_t p = std::min(f.precision(), g.precision());
    QSeries out(p);
    for (std::size_t i = 0; i < p; ++i) {
      if (f.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < p; ++j) {
        if (g.c_[j].is_zero()) continue;
        out.c_[i + j].add_product(f.c_[i], g.c_[j]);
      }
    }
    return out;
  }

  /// Coefficient-wise equality through the common precision.
  friend bool operator==(const QSeries& f, const QSeries& g) {
    const std::size_t p = std::min(f.precision(), g.precision());
    return std::equal(f.c_.begin(), f.c_.begin() + static_cast<std::ptrdiff_t>(p), g.c_.begin());
  }

 private:
  std::vector<Rational> c_;
};

inline QSeries series_add(const QSeries& f, const QSeries& g) { return f + g; }
inline QSeries series_scale(const Rational& c, const QSeries& f) { return c * f; }
inline QSeries series_mul(const QSeries& f, const QSeries& g) { return f * g; }

/// f(dz): the coefficient at n is c_{n/d} when d | n, else 0. Precision is kept.
inline QSeries dilate(const QSeries& f, std::size_t d) {
  if (d == 0) throw std::invalid_argument("dilate: factor must be positive");
  std::vector<Rational> out(f.precision());
  for (std::size_t n = 0; n < out.size(); n += d) out[n] = f[n / d];
  return QSeries(std::move(out));
}

/// Keeps the coefficients at indices congruent to r mod m and zeroes the rest.
inline QSeries restrict_residue(const QSeries& f, std::size_t m, std::size_t r) {
  if (m == 0 || r >= m) throw std::invalid_argument("restrict_residue: need 0 <= r < m");
  std::vector<Rational> out(f.precision());
  for (std::size_t n = r; n < out.size(); n += m) out[n] = f[n];
  return QSeries(std::move(out));
}

/// Multiplicative inverse of a series with nonzero constant term.
inline QSeries invert_unit(const QSeries& f) {
  if (f[0].is_zero()) throw std::domain_error("invert_unit: constant term is zero");
  const Rational inv0 = Rational(1) / f[0];
  std::vector<Rational> g(f.precision());
  g[0] = inv0;
  for (std::size_t n = 1; n < g.size(); ++n) {
    Rational acc;
    for (std::size_t j = 1; j <= n; ++j) {
      if (f[j].is_zero()) continue;
      acc.add_product(f[j], g[n - j]);
    }
    g[n] = -acc * inv0;
  }
  return QSeries(std::move(g));
}

}  // namespace qf48
