#pragma once

// The ordered bases f_{1,chi}, ..., f_{l,chi} of M_2(48, chi) for the four
// characters, and the descriptor syntax shared with the command line:
//   phi(1,12)            phi_{1,12}
//   E2(chi-4,chi-4,3)    E_{2,chi-4,chi-4}(3z)
//   Delta_2_24(2z)       a named cusp form at dilation 2 ("(z)" may be omitted)

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qf48/characters.hpp"
#include "qf48/eisenstein.hpp"
#include "qf48/eta.hpp"
#include "qf48/linalg.hpp"
#include "qf48/qseries.hpp"

namespace qf48 {

/// Smallest precision at which bases are built or decompositions solved.
inline constexpr std::size_t minimum_basis_precision = 30;

struct BasisElement {
  enum class Kind { phi, eisenstein, cusp };
  Kind kind = Kind::phi;
  std::size_t phi_a = 1;
  std::size_t phi_b = 2;
  EisensteinSpec eisenstein;  // used when kind == eisenstein
  std::string cusp_name;      // used when kind == cusp
  std::size_t dilation = 1;   // used when kind == cusp

  std::string descriptor() const {
    switch (kind) {
      case Kind::phi:
        return "phi(" + std::to_string(phi_a) + "," + std::to_string(phi_b) + ")";
      case Kind::eisenstein:
        return eisenstein.str();
      case Kind::cusp:
        return cusp_name + (dilation == 1 ? "(z)" : "(" + std::to_string(dilation) + "z)");
    }
    return {};
  }

  bool is_cusp_form() const { return kind == Kind::cusp; }
};

namespace detail {

inline std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t used = 0;
  unsigned long v = 0;
  const std::string text(s);
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size() || text.front() == '-')
    throw std::invalid_argument("bad basis descriptor '" + std::string(whole) + "'");
  return v;
}

inline std::vector<std::string_view> split_args(std::string_view inside) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = inside.find(',');
    out.push_back(inside.substr(0, comma));
    if (comma == std::string_view::npos) break;
    inside = inside.substr(comma + 1);
  }
  return out;
}

}  // namespace detail

inline BasisElement parse_basis_element(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("bad basis descriptor '" + std::string(text) + "'"); };
  const auto open = text.find('(');
  const std::string_view head = text.substr(0, open);
  std::string_view inside;
  if (open != std::string_view::npos) {
    if (text.back() != ')') throw bad();
    inside = text.substr(open + 1, text.size() - open - 2);
  }

  BasisElement e;
  if (head == "phi") {
    const auto args = detail::split_args(inside);
    if (open == std::string_view::npos || args.size() != 2) throw bad();
    e.kind = BasisElement::Kind::phi;
    e.phi_a = detail::parse_size(args[0], text);
    e.phi_b = detail::parse_size(args[1], text);
    validate_phi(e.phi_a, e.phi_b);
    return e;
  }
  if (head == "E2") {
    const auto args = detail::split_args(inside);
    if (open == std::string_view::npos || args.size() != 3) throw bad();
    e.kind = BasisElement::Kind::eisenstein;
    e.eisenstein.chi = Character::parse(args[0]);
    e.eisenstein.psi = Character::parse(args[1]);
    e.eisenstein.dilation = detail::parse_size(args[2], text);
    validate(e.eisenstein);
    return e;
  }
  e.kind = BasisElement::Kind::cusp;
  e.cusp_name = std::string(cusp_form_entry(head).name);
  if (open == std::string_view::npos || inside == "z") return e;
  if (inside.size() < 2 || inside.back() != 'z') throw bad();
  e.dilation = detail::parse_size(inside.substr(0, inside.size() - 1), text);
  if (e.dilation == 0) throw bad();
  return e;
}

inline QSeries build_element(const BasisElement& e, std::size_t precision) {
  switch (e.kind) {
    case BasisElement::Kind::phi:
      return phi_ab(e.phi_a, e.phi_b, precision);
    case BasisElement::Kind::eisenstein:
      return eisenstein_series(e.eisenstein, precision);
    case BasisElement::Kind::cusp: {
      const QSeries f = cached_cusp_form(e.cusp_name, precision).truncated(precision);
      return e.dilation == 1 ? f : dilate(f, e.dilation);
    }
  }
  throw std::logic_error("build_element");
}

namespace detail {

// Basis descriptors in basis order, one space-separated list per space.
inline constexpr std::array<std::pair<Space, std::string_view>, 4> basis_table = {{
    {Space::chi0,
     "phi(1,2) phi(1,3) phi(1,4) phi(1,6) phi(1,8) phi(1,12) phi(1,16) phi(1,24) phi(1,48) "
     "E2(chi-4,chi-4,1) E2(chi-4,chi-4,3) Delta_2_24(z) Delta_2_24(2z) Delta_2_48(z)"},
    {Space::chi8,
     "E2(1,chi8,1) E2(1,chi8,2) E2(1,chi8,3) E2(1,chi8,6) "
     "E2(chi8,1,1) E2(chi8,1,2) E2(chi8,1,3) E2(chi8,1,6) "
     "Delta_2_24_chi8_1(z) Delta_2_24_chi8_1(2z) Delta_2_24_chi8_2(z) Delta_2_24_chi8_2(2z)"},
    {Space::chi12,
     "E2(1,chi12,1) E2(1,chi12,2) E2(1,chi12,4) E2(chi12,1,1) E2(chi12,1,2) E2(chi12,1,4) "
     "E2(chi-4,chi-3,1) E2(chi-4,chi-3,2) E2(chi-4,chi-3,4) "
     "E2(chi-3,chi-4,1) E2(chi-3,chi-4,2) E2(chi-3,chi-4,4) "
     "Delta_2_48_chi12_1(z) Delta_2_48_chi12_2(z)"},
    {Space::chi24,
     "E2(1,chi24,1) E2(1,chi24,2) E2(chi24,1,1) E2(chi24,1,2) "
     "E2(chi-3,chi-8,1) E2(chi-3,chi-8,2) E2(chi-8,chi-3,1) E2(chi-8,chi-3,2) "
     "Delta_2_24_chi24_1(z) Delta_2_24_chi24_1(2z) Delta_2_24_chi24_2(z) Delta_2_24_chi24_2(2z)"},
}};

}  // namespace detail

/// Basis descriptors of a space, in basis order (index 0 is f_1).
inline std::vector<BasisElement> basis_elements(Space space) {
  for (const auto& [s, text] : detail::basis_table) {
    if (s != space) continue;
    std::vector<BasisElement> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) out.push_back(parse_basis_element(tok));
    return out;
  }
  throw std::logic_error("basis_elements");
}

inline void check_basis_precision(std::size_t precision) {
  if (precision < minimum_basis_precision)
    throw std::invalid_argument("basis precision must be at least " + std::to_string(minimum_basis_precision));
}

/// The basis series of a space at precision P, memoized per (space, P).
inline std::shared_ptr<const std::vector<QSeries>> build_basis_shared(Space space, std::size_t precision) {
  check_basis_precision(precision);
  static std::mutex mutex;
  static std::map<std::pair<Space, std::size_t>, std::shared_ptr<const std::vector<QSeries>>> cache;
  const auto key = std::make_pair(space, precision);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<std::vector<QSeries>>();
  for (const auto& e : basis_elements(space)) built->push_back(build_element(e, precision));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(built));
  return it->second;
}

inline std::vector<QSeries> build_basis(Space space, std::size_t precision) {
  return *build_basis_shared(space, precision);
}

/// Rank over Q of the l x P coefficient matrix.
inline std::size_t basis_rank(Space space, std::size_t precision) {
  const auto basis = build_basis_shared(space, precision);
  Matrix m;
  for (const auto& f : *basis) m.emplace_back(f.coefficients().begin(), f.coefficients().end());
  return matrix_rank(std::move(m));
}

}  // namespace qf48
