#pragma once

// Brute-force representation counts N1, N2, N3 by nested-loop lattice
// enumeration. Independent of the series machinery on purpose.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "qf48/theta.hpp"

namespace qf48 {

namespace detail {

inline std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

inline void bump(std::int64_t& count, std::int64_t by) {
  if (__builtin_add_overflow(count, by, &count))
    throw std::overflow_error("representation count overflows int64");
}

/// Number of y in Z with a y^2 = m.
inline std::int64_t square_solutions(std::int64_t a, std::int64_t m) {
  if (m < 0 || m % a != 0) return 0;
  const std::int64_t w = m / a;
  const std::int64_t s = isqrt(w);
  if (s * s != w) return 0;
  return w == 0 ? 1 : 2;
}

/// Number of y in Z with b (x^2 + x y + y^2) = m for fixed x. The roots are
/// (-x +- sqrt(4 m/b - 3 x^2)) / 2.
inline std::int64_t hexagonal_solutions(std::int64_t b, std::int64_t x, std::int64_t m) {
  if (m < 0 || m % b != 0) return 0;
  const std::int64_t disc = 4 * (m / b) - 3 * x * x;
  if (disc < 0) return 0;
  const std::int64_t s = isqrt(disc);
  if (s * s != disc) return 0;
  if ((s - x) % 2 != 0) return 0;  // s and x have the same parity
  return s == 0 ? 1 : 2;
}

/// Largest |x| with a x^2 <= n.
inline std::int64_t square_bound(std::int64_t a, std::int64_t n) { return isqrt(n / a); }

/// Largest |x| that can occur in b (x^2 + x y + y^2) <= n, from
/// x^2 + x y + y^2 >= 3 x^2 / 4.
inline std::int64_t hexagonal_bound(std::int64_t b, std::int64_t n) { return isqrt(4 * n / (3 * b)); }

inline void check_target(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("representation count: n must be non-negative");
}

inline void check_positive(std::int64_t c) {
  if (c < 1) throw std::invalid_argument("representation count: coefficients must be positive");
}

}  // namespace detail

/// #{x in Z^4 : a1 x1^2 + a2 x2^2 + a3 x3^2 + a4 x4^2 = n}.
inline std::int64_t count_q1(const std::array<std::int64_t, 4>& a, std::int64_t n) {
  detail::check_target(n);
  for (auto c : a) detail::check_positive(c);
  std::int64_t count = 0;
  const std::int64_t b0 = detail::square_bound(a[0], n);
  const std::int64_t b1 = detail::square_bound(a[1], n);
  const std::int64_t b2 = detail::square_bound(a[2], n);
  for (std::int64_t x0 = -b0; x0 <= b0; ++x0) {
    const std::int64_t s0 = a[0] * x0 * x0;
    for (std::int64_t x1 = -b1; x1 <= b1; ++x1) {
      const std::int64_t s1 = s0 + a[1] * x1 * x1;
      if (s1 > n) continue;
      for (std::int64_t x2 = -b2; x2 <= b2; ++x2) {
        const std::int64_t s2 = s1 + a[2] * x2 * x2;
        if (s2 > n) continue;
        detail::bump(count, detail::square_solutions(a[3], n - s2));
      }
    }
  }
  return count;
}

/// #{x in Z^4 : b1 (x1^2 + x1 x2 + x2^2) + b2 (x3^2 + x3 x4 + x4^2) = n}.
inline std::int64_t count_q2(const std::array<std::int64_t, 2>& b, std::int64_t n) {
  detail::check_target(n);
  for (auto c : b) detail::check_positive(c);
  std::int64_t count = 0;
  const std::int64_t h0 = detail::hexagonal_bound(b[0], n);
  const std::int64_t h1 = detail::hexagonal_bound(b[1], n);
  for (std::int64_t x0 = -h0; x0 <= h0; ++x0) {
    for (std::int64_t x1 = -h0; x1 <= h0; ++x1) {
      const std::int64_t s1 = b[0] * (x0 * x0 + x0 * x1 + x1 * x1);
      if (s1 > n) continue;
      for (std::int64_t x2 = -h1; x2 <= h1; ++x2) {
        detail::bump(count, detail::hexagonal_solutions(b[1], x2, n - s1));
      }
    }
  }
  return count;
}

/// #{x in Z^4 : a1 x1^2 + a2 x2^2 + b1 (x3^2 + x3 x4 + x4^2) = n}.
inline std::int64_t count_q3(const std::array<std::int64_t, 3>& c, std::int64_t n) {
  detail::check_target(n);
  for (auto v : c) detail::check_positive(v);
  std::int64_t count = 0;
  const std::int64_t b0 = detail::square_bound(c[0], n);
  const std::int64_t b1 = detail::square_bound(c[1], n);
  const std::int64_t h = detail::hexagonal_bound(c[2], n);
  for (std::int64_t x0 = -b0; x0 <= b0; ++x0) {
    const std::int64_t s0 = c[0] * x0 * x0;
    for (std::int64_t x1 = -b1; x1 <= b1; ++x1) {
      const std::int64_t s1 = s0 + c[1] * x1 * x1;
      if (s1 > n) continue;
      for (std::int64_t x2 = -h; x2 <= h; ++x2) {
        detail::bump(count, detail::hexagonal_solutions(c[2], x2, n - s1));
      }
    }
  }
  return count;
}

/// Dispatches on the family of the form.
inline std::int64_t count_representations(const QuadraticForm& form, std::int64_t n) {
  const auto& c = form.coefficients;
  switch (form.family) {
    case Family::q1: return count_q1({c[0], c[1], c[2], c[3]}, n);
    case Family::q2: return count_q2({c[0], c[1]}, n);
    case Family::q3: return count_q3({c[0], c[1], c[2]}, n);
  }
  throw std::logic_error("count_representations");
}

}  // namespace qf48
