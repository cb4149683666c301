#pragma once

// q-expansions of eta-quotients written in the compact notation
// d1^r1 d2^r2 ..., i.e. prod_i eta(d_i z)^{r_i}, and the catalogue of named
// cusp forms built from them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qf48/qseries.hpp"

namespace qf48 {

struct EtaFactor {
  int scale;     // d: eta(d z)
  int exponent;  // r, nonzero
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// Finite product of integer powers of eta at scaled arguments. Scales are
/// distinct positive integers and exponents are nonzero.
class EtaQuotient {
 public:
  EtaQuotient() = default;

  explicit EtaQuotient(std::vector<EtaFactor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].scale < 1) throw std::invalid_argument("EtaQuotient: scale must be positive");
      if (factors_[i].exponent == 0) throw std::invalid_argument("EtaQuotient: zero exponent");
      for (std::size_t j = 0; j < i; ++j)
        if (factors_[j].scale == factors_[i].scale)
          throw std::invalid_argument("EtaQuotient: repeated scale " + std::to_string(factors_[i].scale));
    }
  }

  /// Parses "2^1 4^1 6^1 12^1"; exponents may be negative ("2^-1") and may
  /// be braced ("2^{-1}").
  static EtaQuotient parse(std::string_view text) {
    std::vector<EtaFactor> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      const auto caret = tok.find('^');
      if (caret == std::string::npos || caret == 0 || caret + 1 == tok.size())
        throw std::invalid_argument("EtaQuotient::parse: bad factor '" + tok + "'");
      std::string exp = tok.substr(caret + 1);
      if (exp.front() == '{' && exp.back() == '}') exp = exp.substr(1, exp.size() - 2);
      out.push_back({parse_int(tok.substr(0, caret), tok), parse_int(exp, tok)});
    }
    return EtaQuotient(std::move(out));
  }

  const std::vector<EtaFactor>& factors() const { return factors_; }

  /// sum r_i d_i, the numerator of the leading q-exponent over 24.
  std::int64_t weighted_sum() const {
    std::int64_t s = 0;
    for (const auto& f : factors_) s += static_cast<std::int64_t>(f.scale) * f.exponent;
    return s;
  }

  /// Weight sum(r_i)/2 times 2.
  int twice_weight() const {
    int s = 0;
    for (const auto& f : factors_) s += f.exponent;
    return s;
  }

  /// Leading exponent sum r_i d_i / 24; throws unless it is a non-negative integer.
  std::size_t leading_exponent() const {
    const std::int64_t s = weighted_sum();
    if (s % 24 != 0) throw std::domain_error("EtaQuotient: prefactor exponent is not integral");
    if (s < 0) throw std::domain_error("EtaQuotient: prefactor exponent is negative");
    return static_cast<std::size_t>(s / 24);
  }

  std::string str() const {
    std::string out;
    for (const auto& f : factors_) {
      if (!out.empty()) out += ' ';
      out += std::to_string(f.scale) + "^" + std::to_string(f.exponent);
    }
    return out;
  }

 private:
  static int parse_int(const std::string& s, const std::string& tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty())
      throw std::invalid_argument("EtaQuotient::parse: bad factor '" + tok + "'");
    return v;
  }

  std::vector<EtaFactor> factors_;
};

/// q^{sum r_i d_i / 24} prod_i prod_{n>=1} (1 - q^{d_i n})^{r_i}, truncated at P.
/// Each scale's Euler product is raised to |r| by multiplying sparse
/// binomials in place; negative exponents invert that power once.
inline QSeries eta_quotient_expansion(const EtaQuotient& quotient, std::size_t precision) {
  const std::size_t shift = quotient.leading_exponent();
  QSeries product = QSeries::one(precision);
  if (shift >= precision) return QSeries(precision);
  const std::size_t body = precision - shift;

  for (const auto& factor : quotient.factors()) {
    std::vector<Rational> power(body);
    power[0] = 1;
    const std::size_t d = static_cast<std::size_t>(factor.scale);
    const int reps = factor.exponent < 0 ? -factor.exponent : factor.exponent;
    for (std::size_t m = d; m < body; m += d) {
      for (int rep = 0; rep < reps; ++rep) {
        // power *= (1 - q^m)
        for (std::size_t i = body - 1; i >= m; --i) {
          if (!power[i - m].is_zero()) power[i] -= power[i - m];
          if (i == m) break;
        }
      }
    }
    QSeries factor_series(std::move(power));
    if (factor.exponent < 0) factor_series = invert_unit(factor_series);
    product = product * factor_series;
  }

  std::vector<Rational> out(precision);
  for (std::size_t i = 0; i < body; ++i) out[i + shift] = product[i];
  return QSeries(std::move(out));
}

/// A named cusp form: an eta-quotient, optionally restricted to one residue
/// class of exponents.
struct CuspFormEntry {
  std::string_view name;
  std::string_view eta;
  std::size_t residue_modulus;  // 0 means no restriction
  std::size_t residue;
};

/// The eta-quotient cusp forms used by the level-48 bases. Exponent data is
/// kept as text so each entry reads exactly like its defining product.
inline constexpr std::array<CuspFormEntry, 10> cusp_catalogue = {{
    {"Delta_2_24", "2^1 4^1 6^1 12^1", 0, 0},
    {"Delta_2_48", "2^-1 4^4 6^-1 8^-1 12^4 24^-1", 0, 0},
    {"Delta_2_24_chi8_1", "1^1 2^-1 3^-1 6^4 8^2 12^-1", 0, 0},
    {"Delta_2_24_chi8_2", "1^2 4^-1 6^-1 8^1 12^4 24^-1", 0, 0},
    {"Delta_2_48_chi12", "1^-4 2^11 4^-5 6^1 8^1 12^-1 24^1", 0, 0},
    {"Delta_2_48_chi12_1", "1^-4 2^11 4^-5 6^1 8^1 12^-1 24^1", 4, 1},
    {"Delta_2_48_chi12_2", "1^-4 2^11 4^-5 6^1 8^1 12^-1 24^1", 4, 3},
    {"Delta_2_24_chi24_1", "1^1 2^-1 3^-1 4^1 6^4 12^-2 24^2", 0, 0},
    {"Delta_2_48_chi24_2", "1^2 2^-2 4^4 6^1 8^-1 12^-1 24^1", 0, 0},
    // The coefficient stream of the previous form is also written with a
    // "2_24" subscript; both names denote the same quotient.
    {"Delta_2_24_chi24_2", "1^2 2^-2 4^4 6^1 8^-1 12^-1 24^1", 0, 0},
}};

inline const CuspFormEntry& cusp_form_entry(std::string_view name) {
  for (const auto& e : cusp_catalogue)
    if (e.name == name) return e;
  throw std::invalid_argument("unknown cusp form '" + std::string(name) + "'");
}

inline QSeries named_cusp_form(std::string_view name, std::size_t precision) {
  const auto& entry = cusp_form_entry(name);
  QSeries f = eta_quotient_expansion(EtaQuotient::parse(entry.eta), precision);
  if (entry.residue_modulus != 0) f = restrict_residue(f, entry.residue_modulus, entry.residue);
  return f;
}

/// Process-wide memo of named cusp forms, grown on demand. Returned series
/// have at least the requested precision.
inline QSeries cached_cusp_form(std::string_view name, std::size_t min_precision) {
  static std::mutex mutex;
  static std::map<std::string, QSeries, std::less<>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(name);
    if (it != cache.end() && it->second.precision() >= min_precision) return it->second;
  }
  const std::size_t p = std::max<std::size_t>(min_precision, default_precision);
  QSeries f = named_cusp_form(name, p);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(std::string(name), f);
  if (!inserted && it->second.precision() < f.precision()) it->second = f;
  return it->second;
}

}  // namespace qf48
