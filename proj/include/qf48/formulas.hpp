#pragma once

// Explicit representation-number formulas written as term lists, and the
// closed forms obtained from them by 2-adic / 3-adic bookkeeping.
//
// Term syntax, whitespace separated:
//   [coef*]ingredient(n[/d])
// where ingredient is one of
//   sigma              sum of divisors
//   s[chi,psi]         sum_{d|m} psi(d) chi(m/d) d
//   tau[name]          coefficients of a named cusp form
// and coef is an optional signed rational ("-3/2*", "-", "4*").
// A term whose argument n/d is not an integer contributes 0.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "qf48/arith.hpp"
#include "qf48/basis.hpp"
#include "qf48/characters.hpp"
#include "qf48/decompose.hpp"
#include "qf48/eisenstein.hpp"
#include "qf48/eta.hpp"
#include "qf48/oracle.hpp"
#include "qf48/theta.hpp"

namespace qf48 {

struct Ingredient {
  enum class Kind { sigma, twisted, tau };
  Kind kind = Kind::sigma;
  Character chi = Character::trivial();
  Character psi = Character::trivial();
  std::string cusp;

  std::string str() const {
    switch (kind) {
      case Kind::sigma: return "sigma";
      case Kind::twisted: return "s[" + chi.name() + "," + psi.name() + "]";
      case Kind::tau: return "tau[" + cusp + "]";
    }
    return {};
  }

  friend bool operator==(const Ingredient& a, const Ingredient& b) { return a.str() == b.str(); }
};

struct Term {
  Rational coefficient;
  Ingredient ingredient;
  std::int64_t divisor = 1;

  std::string str() const {
    std::string c = coefficient.str();
    if (coefficient == Rational(1)) c = "";
    else if (coefficient == Rational(-1)) c = "-";
    else c += "*";
    const std::string arg = divisor == 1 ? "n" : "n/" + std::to_string(divisor);
    return c + ingredient.str() + "(" + arg + ")";
  }
};

inline std::string terms_str(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += ' ';
    out += t.str();
  }
  return out;
}

inline Term parse_term(std::string_view text) {
  const auto bad = [&](const char* why) {
    return std::invalid_argument("bad formula term '" + std::string(text) + "': " + why);
  };
  Term t;
  std::string_view body = text;
  t.coefficient = 1;
  if (const auto star = body.find('*'); star != std::string_view::npos) {
    t.coefficient = Rational::parse(body.substr(0, star));
    body = body.substr(star + 1);
  } else if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    if (body.front() == '-') t.coefficient = -1;
    body = body.substr(1);
  }

  const auto open = body.rfind('(');
  if (open == std::string_view::npos || body.back() != ')') throw bad("missing argument");
  const std::string_view head = body.substr(0, open);
  const std::string_view arg = body.substr(open + 1, body.size() - open - 2);
  if (arg == "n") {
    t.divisor = 1;
  } else if (arg.starts_with("n/")) {
    const std::string d(arg.substr(2));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(d, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != d.size() || v < 1) throw bad("argument must be n or n/d");
    t.divisor = v;
  } else {
    throw bad("argument must be n or n/d");
  }

  if (head == "sigma") {
    t.ingredient.kind = Ingredient::Kind::sigma;
  } else if (head.starts_with("s[") && head.back() == ']') {
    const std::string_view inner = head.substr(2, head.size() - 3);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw bad("s[chi,psi] needs two characters");
    t.ingredient.kind = Ingredient::Kind::twisted;
    t.ingredient.chi = Character::parse(inner.substr(0, comma));
    t.ingredient.psi = Character::parse(inner.substr(comma + 1));
  } else if (head.starts_with("tau[") && head.back() == ']') {
    t.ingredient.kind = Ingredient::Kind::tau;
    t.ingredient.cusp = std::string(cusp_form_entry(head.substr(4, head.size() - 5)).name);
  } else {
    throw bad("unknown ingredient");
  }
  return t;
}

inline std::vector<Term> parse_terms(std::string_view text) {
  std::vector<Term> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(parse_term(tok));
  return out;
}

/// Coefficient of q^m in a named cusp form; the expansion is cached and
/// grown in steps so sweeps over m do not rebuild it each time.
inline Rational tau_value(std::string_view name, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("tau_value: negative index");
  const auto need = static_cast<std::size_t>(m) + 1;
  const std::size_t p = std::max<std::size_t>((need + 255) / 256 * 256, default_precision);
  return cached_cusp_form(name, p)[static_cast<std::size_t>(m)];
}

inline Rational eval_ingredient(const Ingredient& ing, std::int64_t m) {
  switch (ing.kind) {
    case Ingredient::Kind::sigma: return sigma(m);
    case Ingredient::Kind::twisted: return twisted_sigma(2, ing.chi, ing.psi, m);
    case Ingredient::Kind::tau: return tau_value(ing.cusp, m);
  }
  throw std::logic_error("eval_ingredient");
}

inline Rational eval_terms(const std::vector<Term>& terms, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("formula: n must be positive");
  Rational total;
  for (const auto& t : terms) {
    if (n % t.divisor != 0) continue;
    total.add_product(t.coefficient, eval_ingredient(t.ingredient, n / t.divisor));
  }
  return total;
}

/// Merges terms with the same ingredient and divisor, drops zero terms, and
/// orders by ingredient kind, then ingredient, then divisor.
inline std::vector<Term> combine_terms(std::vector<Term> terms) {
  std::vector<Term> out;
  for (auto& t : terms) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Term& o) {
      return o.divisor == t.divisor && o.ingredient == t.ingredient;
    });
    if (it == out.end()) out.push_back(std::move(t));
    else it->coefficient += t.coefficient;
  }
  std::erase_if(out, [](const Term& t) { return t.coefficient.is_zero(); });
  // Group index of each ingredient in first-seen order.
  std::vector<std::string> seen;
  const auto group = [&](const Term& t) {
    const std::string key = t.ingredient.str();
    auto it = std::find(seen.begin(), seen.end(), key);
    if (it == seen.end()) {
      seen.push_back(key);
      return seen.size() - 1;
    }
    return static_cast<std::size_t>(it - seen.begin());
  };
  for (const auto& t : out) group(t);
  std::stable_sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return std::make_tuple(a.ingredient.kind, group(a), a.divisor) <
           std::make_tuple(b.ingredient.kind, group(b), b.divisor);
  });
  return out;
}

/// Terms valid for n >= 1 equivalent to sum_i c_i f_i for a basis of `space`.
inline std::vector<Term> terms_from_decomposition(Space space, const std::vector<Rational>& coefficients) {
  const auto elements = basis_elements(space);
  if (elements.size() != coefficients.size())
    throw std::invalid_argument("terms_from_decomposition: wrong coefficient count");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Rational& c = coefficients[i];
    if (c.is_zero()) continue;
    const auto& e = elements[i];
    switch (e.kind) {
      case BasisElement::Kind::phi: {
        const auto a = static_cast<std::int64_t>(e.phi_a);
        const auto b = static_cast<std::int64_t>(e.phi_b);
        terms.push_back({c * Rational(24 * a, b - a), {}, a});
        terms.push_back({-c * Rational(24 * b, b - a), {}, b});
        break;
      }
      case BasisElement::Kind::eisenstein: {
        Ingredient ing;
        ing.kind = Ingredient::Kind::twisted;
        ing.chi = e.eisenstein.chi;
        ing.psi = e.eisenstein.psi;
        terms.push_back({c, ing, static_cast<std::int64_t>(e.eisenstein.dilation)});
        break;
      }
      case BasisElement::Kind::cusp: {
        Ingredient ing;
        ing.kind = Ingredient::Kind::tau;
        ing.cusp = e.cusp_name;
        terms.push_back({c, ing, static_cast<std::int64_t>(e.dilation)});
        break;
      }
    }
  }
  return combine_terms(std::move(terms));
}

struct NamedFormula {
  std::string id;
  QuadraticForm form;
  std::string printed;  // term list as printed, in term syntax
};

namespace detail {

struct FormulaData {
  std::string_view id;
  std::string_view form;
  std::string_view terms;
};

inline constexpr std::array<FormulaData, 4> q2_formula_data = {{
    {"N2_1_2", "q2:1,2", "6*sigma(n) -12*sigma(n/2) 18*sigma(n/3) -36*sigma(n/6)"},
    {"N2_1_4", "q2:1,4",
     "6*sigma(n) -18*sigma(n/2) -18*sigma(n/3) 24*sigma(n/4) 54*sigma(n/6) -72*sigma(n/12)"},
    {"N2_1_8", "q2:1,8",
     "3/2*sigma(n) -9/2*sigma(n/2) 9/2*sigma(n/3) 9*sigma(n/4) -27/2*sigma(n/6) -12*sigma(n/8) "
     "27*sigma(n/12) -36*sigma(n/24) 9/2*tau[Delta_2_24](n)"},
    {"N2_1_16", "q2:1,16",
     "3/2*sigma(n) -9/2*sigma(n/2) -9/2*sigma(n/3) 9*sigma(n/4) 27/2*sigma(n/6) -18*sigma(n/8) "
     "-27*sigma(n/12) 24*sigma(n/16) 54*sigma(n/24) 72*sigma(n/48) 9/2*tau[Delta_2_48](n)"},
}};

inline constexpr std::array<FormulaData, 11> sample_formula_data = {{
    {"N1_1_2_4_4", "q1:1,2,4,4", "-2*s[1,chi8](n/2) 2*s[chi8,1](n)"},
    {"N1_1_2_4_6", "q1:1,2,4,6",
     "-s[1,chi12](n/4) 3/2*s[chi12,1](n) 1/2*s[chi-4,chi-3](n) -3*s[chi-3,chi-4](n/4)"},
    {"N1_1_2_4_12", "q1:1,2,4,12",
     "s[chi24,1](n) -1/3*s[1,chi24](n/2) 1/3*s[chi-8,chi-3](n) s[chi-3,chi-8](n/2) "
     "4*tau[Delta_2_24_chi24_1](n/2) 2/3*tau[Delta_2_24_chi24_2](n) 4/3*tau[Delta_2_24_chi24_2](n/2)"},
    {"N1_1_3_4_6", "q1:1,3,4,6",
     "-4/5*s[1,chi8](n/2) -6/5*s[1,chi8](n/6) 8/5*s[chi8,1](n) -12/5*s[chi8,1](n/3) "
     "8/5*tau[Delta_2_24_chi8_1](n) -8/5*tau[Delta_2_24_chi8_1](n/2) "
     "-6/5*tau[Delta_2_24_chi8_2](n) -8/5*tau[Delta_2_24_chi8_2](n/2)"},
    {"N1_1_3_4_12", "q1:1,3,4,12",
     "1204/1081*sigma(n) -3*sigma(n/2) -3*sigma(n/3) 10*sigma(n/4) 9*sigma(n/6) -12*sigma(n/8) "
     "-30*sigma(n/12) 360/23*sigma(n/24) 1656/47*sigma(n/48) -47/24*s[chi-4,chi-4](n) tau[Delta_2_48](n)"},
    {"N3_1_3_1", "q3:1,3,1",
     "8*sigma(n) -12*sigma(n/2) -24*sigma(n/3) 16*sigma(n/4) 36*sigma(n/6) -48*sigma(n/12)"},
    {"N3_1_3_16", "q3:1,3,16",
     "-17/92*sigma(n) -3/2*sigma(n/2) -3/2*sigma(n/3) 7*sigma(n/4) 9/2*sigma(n/6) -18*sigma(n/8) "
     "-21*sigma(n/12) 24*sigma(n/16) 54*sigma(n/24) -72*sigma(n/48) 3/2*tau[Delta_2_48](n)"},
    {"N3_1_4_8", "q3:1,4,8",
     "1/4*s[1,chi12](n) -1/4*s[1,chi12](n/2) -s[1,chi12](n/4) 3/4*s[chi12,1](n) "
     "-3/2*s[chi12,1](n/2) 6*s[chi12,1](n/4) 1/4*s[chi-4,chi-3](n) 1/2*s[chi-4,chi-3](n/2) "
     "2*s[chi-4,chi-3](n/4) 3/4*s[chi-3,chi-4](n) 3/4*s[chi-3,chi-4](n/2) -3*s[chi-3,chi-4](n/4)"},
    {"N3_2_3_1", "q3:2,3,1",
     "2/5*s[1,chi8](n) -12/5*s[1,chi8](n/3) 16/5*s[chi8,1](n) 96/5*s[chi8,1](n/3) "
     "12/5*tau[Delta_2_24_chi8_2](n/3)"},
    {"N3_3_3_4", "q3:3,3,4", "-s[1,chi12](n) s[chi12,1](n) -s[chi-4,chi-3](n) s[chi-3,chi-4](n)"},
    {"N3_3_6_2", "q3:3,6,2",
     "-1/3*s[1,chi24](n) 4/3*s[chi24,1](n) -4/3*s[chi-3,chi-8](n) 1/3*s[chi-8,chi-3](n) "
     "4/3*tau[Delta_2_24_chi24_1](n)"},
}};

template <std::size_t N>
std::vector<NamedFormula> to_formulas(const std::array<FormulaData, N>& data) {
  std::vector<NamedFormula> out;
  for (const auto& d : data) out.push_back({std::string(d.id), parse_form(d.form), std::string(d.terms)});
  return out;
}

}  // namespace detail

inline const std::vector<NamedFormula>& q2_formulas() {
  static const auto all = detail::to_formulas(detail::q2_formula_data);
  return all;
}

inline const std::vector<NamedFormula>& sample_formulas() {
  static const auto all = detail::to_formulas(detail::sample_formula_data);
  return all;
}

inline const NamedFormula& find_formula(const std::vector<NamedFormula>& list, std::string_view id) {
  for (const auto& f : list)
    if (f.id == id) return f;
  throw std::invalid_argument("unknown formula '" + std::string(id) + "'");
}

/// Terms of the formula read off from our own decomposition of the form's
/// theta series, memoized per form.
inline std::vector<Term> recomputed_terms(const QuadraticForm& form, std::size_t precision = default_precision) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::size_t>, std::vector<Term>> cache;
  const auto key = std::make_pair(form.str(), precision);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const FormSpec spec = catalogued_form(form);
  const Decomposition d = decompose_form(spec, precision);
  auto terms = terms_from_decomposition(spec.space, d.coefficients);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(terms)).first->second;
}

enum class Variant { printed, recomputed };

inline std::vector<Term> formula_terms(const NamedFormula& f, Variant v) {
  return v == Variant::printed ? parse_terms(f.printed) : recomputed_terms(f.form);
}

/// Right-hand side of the N2 formula for a pair (b1, b2), as printed.
inline Rational eval_theorem_q2(std::pair<int, int> pair, std::int64_t n, Variant v = Variant::printed) {
  const std::string id = "N2_" + std::to_string(pair.first) + "_" + std::to_string(pair.second);
  return eval_terms(formula_terms(find_formula(q2_formulas(), id), v), n);
}

/// One of the eleven sample formulas, by id ("N1_1_2_4_4", ..., "N3_3_6_2").
inline Rational eval_sample(std::string_view id, std::int64_t n, Variant v = Variant::printed) {
  return eval_terms(formula_terms(find_formula(sample_formulas(), id), v), n);
}

// ---------------------------------------------------------------------------
// Closed forms.

/// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<std::int64_t, unsigned>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, unsigned>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// n = 2^alpha 3^beta N with gcd(N, 6) = 1.
struct SmoothSplit {
  unsigned alpha = 0;
  unsigned beta = 0;
  std::int64_t rest = 1;
};

inline SmoothSplit split_2_3(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("split_2_3: n must be positive");
  SmoothSplit s;
  while (n % 2 == 0) {
    n /= 2;
    ++s.alpha;
  }
  while (n % 3 == 0) {
    n /= 3;
    ++s.beta;
  }
  s.rest = n;
  return s;
}

/// sum_{d|n} psi(d) chi(n/d) d evaluated as a product of local factors
/// sum_{j=0}^{e} psi(p)^j chi(p)^{e-j} p^j over p^e || n.
inline Rational multiplicative_twisted_sigma(const Character& chi, const Character& psi, std::int64_t n) {
  Integer total = 1;
  for (const auto& [p, e] : factorize(n)) {
    Integer local = 0;
    Integer pj = 1;
    for (unsigned j = 0; j <= e; ++j) {
      int sign = 1;
      for (unsigned k = 0; k < j; ++k) sign *= psi(p);
      for (unsigned k = j; k < e; ++k) sign *= chi(p);
      if (sign > 0) local += pj;
      else if (sign < 0) local -= pj;
      pj *= p;
    }
    total *= local;
  }
  return Rational(total);
}

/// S(n) = sum_{d|n} (8/(n/d)) d.
inline Rational S_function(std::int64_t n) {
  if (n < 1) return 0;
  Integer total = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) total += kronecker_symbol(8, n / d) * d;
  return Rational(total);
}

/// R(n) = sum_{d|n} (8/d) d.
inline Rational R_function(std::int64_t n) {
  if (n < 1) return 0;
  Integer total = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) total += kronecker_symbol(8, d) * d;
  return Rational(total);
}

/// The four divisor functions of the (3,3,4) rewriting, identified with the
/// twisted sums they replace term by term:
///   -s[1,chi12] + s[chi12,1] - s[chi-4,chi-3] + s[chi-3,chi-4] = -D + A - C + B.
/// Each is evaluated through its local factors, not by divisor enumeration.
inline Rational A_function(std::int64_t n) {
  return multiplicative_twisted_sigma(Character::kronecker(12), Character::trivial(), n);
}
inline Rational B_function(std::int64_t n) {
  return multiplicative_twisted_sigma(Character::kronecker(-3), Character::kronecker(-4), n);
}
inline Rational C_function(std::int64_t n) {
  return multiplicative_twisted_sigma(Character::kronecker(-4), Character::kronecker(-3), n);
}
inline Rational D_function(std::int64_t n) {
  return multiplicative_twisted_sigma(Character::trivial(), Character::kronecker(12), n);
}

inline constexpr std::array<std::string_view, 3> closed_form_names = {"N1_1_2_4_4", "N3_1_3_1",
                                                                      "N3_3_3_4_ABCD"};

/// Closed-form evaluation from n = 2^alpha 3^beta N.
inline Rational eval_closed_form(std::string_view name, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("closed form: n must be positive");
  const SmoothSplit s = split_2_3(n);
  if (name == "N1_1_2_4_4") {
    // (2^{alpha+1} - (1 + (-1)^n) (8/N)) S(N), N the odd part of n.
    const std::int64_t odd = n >> s.alpha;
    const Rational parity_term = (n % 2 == 0) ? Rational(2 * kronecker_symbol(8, odd)) : Rational(0);
    return (Rational(Integer(1) << (s.alpha + 1)) - parity_term) * S_function(odd);
  }
  if (name == "N3_1_3_1") {
    const Rational sn = sigma(s.rest);
    if (s.alpha == 0) return Rational(8) * sn;
    return Rational(12) * Rational((Integer(1) << s.alpha) - 1) * sn;
  }
  if (name == "N3_3_3_4_ABCD") {
    return -D_function(n) + A_function(n) - C_function(n) + B_function(n);
  }
  throw std::invalid_argument("unknown closed form '" + std::string(name) + "'");
}

/// The open form each closed form rewrites.
inline Rational eval_open_form(std::string_view name, std::int64_t n) {
  if (name == "N1_1_2_4_4") return eval_sample("N1_1_2_4_4", n);
  if (name == "N3_1_3_1") return eval_sample("N3_1_3_1", n);
  if (name == "N3_3_3_4_ABCD") return eval_sample("N3_3_3_4", n);
  throw std::invalid_argument("unknown closed form '" + std::string(name) + "'");
}

inline QuadraticForm closed_form_quadratic_form(std::string_view name) {
  if (name == "N1_1_2_4_4") return parse_form("q1:1,2,4,4");
  if (name == "N3_1_3_1") return parse_form("q3:1,3,1");
  if (name == "N3_3_3_4_ABCD") return parse_form("q3:3,3,4");
  throw std::invalid_argument("unknown closed form '" + std::string(name) + "'");
}

}  // namespace qf48
