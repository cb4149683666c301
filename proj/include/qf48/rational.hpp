#pragma once

// Exact rational scalars. Every coefficient in the library is one of these;
// nothing is ever rounded.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qf48 {

using Integer = mpz_class;

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Rational(T v) : v_(static_cast<long>(v)) {
    static_assert(sizeof(T) <= sizeof(long));
  }
  Rational(const Integer& v) : v_(v) {}

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  template <std::integral T, std::integral U>
  Rational(T num, U den)
      : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

  /// Parses "p", "-p", "p/q" (whitespace not allowed inside).
  static Rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(Integer(std::string(text), 10));
      return Rational(Integer(std::string(text.substr(0, slash)), 10),
                      Integer(std::string(text.substr(slash + 1)), 10));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
    }
  }

  Integer numerator() const { return Integer(v_.get_num()); }
  Integer denominator() const { return Integer(v_.get_den()); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Integer value; throws if the fraction is not integral or does not fit.
  std::int64_t to_int64() const {
    if (!is_integer()) throw std::domain_error("Rational::to_int64: not an integer");
    if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational::to_int64: overflow");
    return v_.get_num().get_si();
  }

  /// "p/q", or "p" when q = 1.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& gmp() const { return v_; }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }

  /// this += a * b without allocating a temporary Rational per call.
  void add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), scratch.get_mpq_t());
  }
  /// this -= a * b.
  void sub_product(const Rational& a, const Rational& b) {
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), scratch.get_mpq_t());
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

/// Integer power of a rational with a non-negative exponent.
inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace qf48
