#pragma once

// Dirichlet characters realized as Kronecker symbols, plus the four
// character labels of the weight-2 level-48 spaces.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qf48 {

/// Kronecker symbol (d/n), the standard extension of the Jacobi symbol to
/// every integer n. Total; returns 0 exactly when gcd(d, n) > 1.
inline int kronecker_symbol(std::int64_t d, std::int64_t n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }
  // Factor 2 out of n using (d/2).
  int twos = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++twos;
  }
  if (twos > 0) {
    if ((d & 1) == 0) return 0;
    const std::int64_t r8 = ((d % 8) + 8) % 8;
    if ((twos & 1) && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol (d mod n / n) for odd positive n.
  std::int64_t a = ((d % n) + n) % n;
  std::int64_t m = n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::int64_t r8 = m % 8;
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

/// A character of one of three kinds: the constant character 1 (mod 1),
/// the principal character mod N, or the Kronecker symbol (d/.) for a
/// fundamental discriminant d in {-3, -4, 8, -8, 12, 24}.
///
/// Values are read from a one-period table built at construction, so
/// evaluation is a lookup; the table is derived from kronecker_symbol.
class Character {
 public:
  enum class Kind { trivial, principal, kronecker };

  static Character trivial() { return Character(Kind::trivial, 1); }

  static Character principal(std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("principal character: modulus must be >= 1");
    return Character(Kind::principal, modulus);
  }

  static Character kronecker(std::int64_t d) {
    switch (d) {
      case -3: case -4: case 8: case -8: case 12: case 24:
        return Character(Kind::kronecker, d);
      default:
        throw std::invalid_argument("unsupported Kronecker character chi" + std::to_string(d));
    }
  }

  /// Names: "1", "chi0" (principal mod 48), "chi8", "chi12", "chi24",
  /// "chi-3", "chi-4", "chi-8".
  static Character parse(std::string_view name) {
    if (name == "1") return trivial();
    if (name == "chi0") return principal(48);
    if (name.starts_with("chi")) {
      const std::string rest(name.substr(3));
      char* end = nullptr;
      const long d = std::strtol(rest.c_str(), &end, 10);
      if (!rest.empty() && end != nullptr && *end == '\0') {
        switch (d) {
          case -3: case -4: case 8: case -8: case 12: case 24:
            return kronecker(d);
          default:
            break;
        }
      }
    }
    throw std::invalid_argument("unknown character '" + std::string(name) + "'");
  }

  Kind kind() const { return kind_; }

  /// |d| for Kronecker characters, N for the principal character mod N,
  /// 1 for the trivial character. This is also the period.
  std::int64_t conductor() const {
    return kind_ == Kind::kronecker ? std::abs(value_) : value_;
  }

  /// Discriminant d of a Kronecker character (0 for the other kinds).
  std::int64_t discriminant() const { return kind_ == Kind::kronecker ? value_ : 0; }

  bool is_trivial() const { return kind_ == Kind::trivial; }

  int operator()(std::int64_t n) const {
    switch (kind_) {
      case Kind::trivial:
        return 1;
      case Kind::principal:
        return std::gcd(n < 0 ? -n : n, value_) == 1 ? 1 : 0;
      case Kind::kronecker: {
        if (n < 0) return parity() * (*this)(-n);
        return table_[static_cast<std::size_t>(n % conductor())];
      }
    }
    return 0;
  }

  /// chi(-1).
  int parity() const {
    if (kind_ != Kind::kronecker) return 1;
    return value_ < 0 ? -1 : 1;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::trivial:
        return "1";
      case Kind::principal:
        return value_ == 48 ? "chi0" : "chi0_mod" + std::to_string(value_);
      case Kind::kronecker:
        return "chi" + std::to_string(value_);
    }
    return {};
  }

  friend bool operator==(const Character& a, const Character& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

 private:
  Character(Kind kind, std::int64_t value) : kind_(kind), value_(value) {
    if (kind_ == Kind::kronecker) {
      for (std::int64_t r = 0; r < conductor(); ++r)
        table_[static_cast<std::size_t>(r)] = static_cast<signed char>(kronecker_symbol(value_, r));
    }
  }

  Kind kind_;
  std::int64_t value_;
  std::array<signed char, 24> table_{};
};

/// The four spaces M_2(48, chi) handled by the library.
enum class Space { chi0, chi8, chi12, chi24 };

inline constexpr std::array<Space, 4> all_spaces = {Space::chi0, Space::chi8, Space::chi12,
                                                     Space::chi24};

inline std::string space_name(Space s) {
  switch (s) {
    case Space::chi0: return "chi0";
    case Space::chi8: return "chi8";
    case Space::chi12: return "chi12";
    case Space::chi24: return "chi24";
  }
  return {};
}

inline Space parse_space(std::string_view name) {
  for (Space s : all_spaces)
    if (space_name(s) == name) return s;
  throw std::invalid_argument("unknown space '" + std::string(name) + "'");
}

/// dim M_2(48, chi): 14 for chi0 and chi12, 12 for chi8 and chi24.
inline std::size_t space_dimension(Space s) {
  return (s == Space::chi0 || s == Space::chi12) ? 14 : 12;
}

inline Character space_character(Space s) {
  switch (s) {
    case Space::chi0: return Character::principal(48);
    case Space::chi8: return Character::kronecker(8);
    case Space::chi12: return Character::kronecker(12);
    case Space::chi24: return Character::kronecker(24);
  }
  throw std::logic_error("space_character");
}

}  // namespace qf48
