#pragma once

// Generating functions of the quaternary forms
//   Q1: a1 x1^2 + a2 x2^2 + a3 x3^2 + a4 x4^2
//   Q2: b1 (x1^2 + x1 x2 + x2^2) + b2 (x3^2 + x3 x4 + x4^2)
//   Q3: a1 x1^2 + a2 x2^2 + b1 (x3^2 + x3 x4 + x4^2)
// and the catalogue of the 124 forms with their character labels.

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qf48/characters.hpp"
#include "qf48/qseries.hpp"

namespace qf48 {

/// Theta(z) = sum_{n in Z} q^{n^2}, by index enumeration.
inline QSeries theta_series(std::size_t precision) {
  std::vector<Rational> c(precision);
  c[0] = 1;
  for (std::size_t m = 1; m * m < precision; ++m) c[m * m] = 2;
  return QSeries(std::move(c));
}

/// F(z) = sum_{m,n in Z} q^{m^2 + mn + n^2}, by enumerating
/// |m|, |n| <= ceil(sqrt(4P/3)).
inline QSeries hexagonal_series(std::size_t precision) {
  const auto bound = static_cast<long>(std::ceil(std::sqrt(4.0 * static_cast<double>(precision) / 3.0)));
  std::vector<long> counts(precision, 0);
  for (long m = -bound; m <= bound; ++m) {
    for (long n = -bound; n <= bound; ++n) {
      const long v = m * m + m * n + n * n;
      if (v < static_cast<long>(precision)) ++counts[static_cast<std::size_t>(v)];
    }
  }
  std::vector<Rational> c(precision);
  for (std::size_t i = 0; i < precision; ++i) c[i] = counts[i];
  return QSeries(std::move(c));
}

enum class Family { q1, q2, q3 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::q1: return "q1";
    case Family::q2: return "q2";
    case Family::q3: return "q3";
  }
  return {};
}

inline std::size_t family_arity(Family f) {
  switch (f) {
    case Family::q1: return 4;
    case Family::q2: return 2;
    case Family::q3: return 3;
  }
  return 0;
}

/// A form of one of the three families with positive coefficients, in
/// canonical order (Q1 sorted; Q2 sorted; Q3 with a1 <= a2).
struct QuadraticForm {
  Family family = Family::q1;
  std::vector<int> coefficients;

  std::string str() const {
    std::string out = family_name(family) + ":";
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(coefficients[i]);
    }
    return out;
  }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

inline QuadraticForm make_quadratic_form(Family family, std::vector<int> coefficients) {
  if (coefficients.size() != family_arity(family))
    throw std::invalid_argument(family_name(family) + " form needs " +
                                std::to_string(family_arity(family)) + " coefficients");
  for (int c : coefficients)
    if (c < 1) throw std::invalid_argument("form coefficients must be positive");
  switch (family) {
    case Family::q1:
    case Family::q2:
      std::sort(coefficients.begin(), coefficients.end());
      break;
    case Family::q3:
      std::sort(coefficients.begin(), coefficients.begin() + 2);
      break;
  }
  return {family, std::move(coefficients)};
}

/// Parses "q1:1,1,1,4", "q2:1,8", "q3:1,3,16".
inline QuadraticForm parse_form(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("form '" + std::string(text) + "': expected family:coefficients");
  const std::string_view fam = text.substr(0, colon);
  Family family;
  if (fam == "q1") family = Family::q1;
  else if (fam == "q2") family = Family::q2;
  else if (fam == "q3") family = Family::q3;
  else throw std::invalid_argument("form '" + std::string(text) + "': unknown family");

  std::vector<int> coeffs;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string item(rest.substr(0, comma));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw std::invalid_argument("form '" + std::string(text) + "': bad coefficient '" + item + "'");
    coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return make_quadratic_form(family, std::move(coeffs));
}

/// A form listed in the catalogue, with the character of the space its
/// theta series lives in.
struct FormSpec {
  QuadraticForm form;
  Space space = Space::chi0;

  std::string str() const { return form.str(); }
  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

namespace detail {

struct CatalogueBlock {
  Family family;
  Space space;
  std::string_view tuples;  // space-separated, comma-joined tuples
};

// The list of forms by space, transcribed as data.
inline constexpr std::array<CatalogueBlock, 9> form_catalogue_data = {{
    {Family::q1, Space::chi0,
     "1,1,1,4 1,1,4,4 1,1,3,12 1,1,12,12 1,2,2,4 1,2,6,12 1,3,3,4 1,3,4,12 1,4,4,4 "
     "1,4,6,6 1,4,12,12 2,2,3,12 2,3,4,6 3,3,4,4 3,4,4,12"},
    {Family::q1, Space::chi8,
     "1,1,2,4 1,1,6,12 1,2,4,4 1,2,3,12 1,2,12,12 1,3,4,6 1,4,6,12 2,3,3,4 2,3,4,12 3,4,4,6"},
    {Family::q1, Space::chi12,
     "1,1,1,12 1,1,3,4 1,1,4,12 1,2,2,12 1,2,4,6 1,3,3,12 1,3,4,4 1,3,12,12 1,4,4,12 "
     "1,6,6,12 1,12,12,12 2,2,3,4 2,3,6,12 3,3,3,4 3,3,4,12 3,4,4,4 3,4,6,6 3,4,12,12"},
    {Family::q1, Space::chi24,
     "1,1,2,12 1,1,4,6 1,2,3,4 1,2,4,12 1,3,6,12 1,4,4,6 1,6,12,12 2,3,3,12 2,3,4,4 "
     "2,3,12,12 3,3,4,6 3,4,6,12"},
    {Family::q2, Space::chi0, "1,2 1,4 1,8 1,16"},
    {Family::q3, Space::chi0,
     "1,3,1 1,3,2 1,3,4 1,3,8 1,3,16 1,12,1 1,12,2 1,12,4 1,12,8 1,12,16 2,6,1 3,4,1 "
     "3,4,2 3,4,4 3,4,8 3,4,16 4,12,1"},
    {Family::q3, Space::chi8,
     "1,6,1 1,6,2 1,6,4 1,6,8 1,6,16 2,3,1 2,3,2 2,3,4 2,3,8 2,3,16 2,12,1 4,6,1"},
    {Family::q3, Space::chi12,
     "1,1,1 1,1,2 1,1,4 1,1,8 1,1,16 1,4,1 1,4,2 1,4,4 1,4,8 1,4,16 2,2,1 3,3,1 3,3,2 "
     "3,3,4 3,3,8 3,3,16 3,12,1 3,12,2 3,12,4 3,12,8 3,12,16 4,4,1 6,6,1 12,12,1"},
    {Family::q3, Space::chi24,
     "1,2,1 1,2,2 1,2,4 1,2,8 1,2,16 2,4,1 3,6,1 3,6,2 3,6,4 3,6,8 3,6,16 6,12,1"},
}};

inline std::vector<FormSpec> build_form_catalogue() {
  std::vector<FormSpec> all;
  // Catalogue order: all Q1 (by space), then Q2, then Q3.
  for (const auto& block : form_catalogue_data) {
    std::istringstream in{std::string(block.tuples)};
    std::string tuple;
    while (in >> tuple) {
      all.push_back({parse_form(family_name(block.family) + ":" + tuple), block.space});
    }
  }
  return all;
}

}  // namespace detail

/// The 124 catalogued forms (55 Q1, 4 Q2, 65 Q3) in listing order.
inline const std::vector<FormSpec>& form_catalogue() {
  static const std::vector<FormSpec> catalogue = detail::build_form_catalogue();
  return catalogue;
}

/// The space under which a form is listed; throws if it is not listed.
inline Space classify_character(const QuadraticForm& form) {
  for (const auto& spec : form_catalogue())
    if (spec.form == form) return spec.space;
  throw std::invalid_argument("form " + form.str() + " is not in the catalogue");
}

inline FormSpec catalogued_form(const QuadraticForm& form) { return {form, classify_character(form)}; }

/// Product of Theta(a_i z) and F(b_j z) factors for any positive form; its
/// n-th coefficient is the number of representations of n.
inline QSeries theta_product(const QuadraticForm& form, std::size_t precision) {
  const QSeries theta = theta_series(precision);
  const QSeries hex = hexagonal_series(precision);
  const auto& c = form.coefficients;
  const auto th = [&](int a) { return dilate(theta, static_cast<std::size_t>(a)); };
  const auto hx = [&](int b) { return dilate(hex, static_cast<std::size_t>(b)); };
  switch (form.family) {
    case Family::q1: return th(c[0]) * th(c[1]) * th(c[2]) * th(c[3]);
    case Family::q2: return hx(c[0]) * hx(c[1]);
    case Family::q3: return th(c[0]) * th(c[1]) * hx(c[2]);
  }
  throw std::logic_error("theta_product");
}

/// Theta product of a catalogued form.
inline QSeries form_theta_product(const FormSpec& spec, std::size_t precision) {
  if (classify_character(spec.form) != spec.space)
    throw std::invalid_argument("form " + spec.str() + " is listed under a different space");
  return theta_product(spec.form, precision);
}

}  // namespace qf48
