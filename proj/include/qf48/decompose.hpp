#pragma once

// Exact decomposition of a series in one of the level-48 bases.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qf48/basis.hpp"
#include "qf48/linalg.hpp"
#include "qf48/theta.hpp"

namespace qf48 {

struct Decomposition {
  Space space = Space::chi0;
  std::vector<Rational> coefficients;
  std::size_t verified_to = 0;  // identity checked on indices 0..verified_to-1
};

class DecompositionError : public std::runtime_error {
 public:
  enum class Kind { inconsistent, underdetermined };
  DecompositionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// sum_i c_i f_i at the smallest precision among the f_i.
inline QSeries reconstruct(const std::vector<Rational>& coefficients, const std::vector<QSeries>& basis) {
  if (coefficients.size() != basis.size() || basis.empty())
    throw std::invalid_argument("reconstruct: coefficient count does not match the basis");
  std::size_t p = basis.front().precision();
  for (const auto& f : basis) p = std::min(p, f.precision());
  std::vector<Rational> out(p);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    for (std::size_t n = 0; n < p; ++n)
      if (!basis[i][n].is_zero()) out[n].add_product(coefficients[i], basis[i][n]);
  }
  return QSeries(std::move(out));
}

/// Solves target = sum c_i basis_i on coefficient rows 0..P-1, then checks the
/// identity on every one of those rows.
inline std::vector<Rational> solve_in_basis(const QSeries& target, const std::vector<QSeries>& basis,
                                            std::size_t precision) {
  if (target.precision() < precision)
    throw std::invalid_argument("decompose: target precision is below the requested precision");
  for (const auto& f : basis)
    if (f.precision() < precision)
      throw std::invalid_argument("decompose: basis precision is below the requested precision");

  Matrix a(precision, std::vector<Rational>(basis.size()));
  std::vector<Rational> b(precision);
  for (std::size_t n = 0; n < precision; ++n) {
    for (std::size_t i = 0; i < basis.size(); ++i) a[n][i] = basis[i][n];
    b[n] = target[n];
  }
  SolveResult r = solve_exact(a, b);
  switch (r.status) {
    case SolveStatus::inconsistent:
      throw DecompositionError(DecompositionError::Kind::inconsistent,
                               "target is not in the span of the basis (first failing coefficient q^" +
                                   std::to_string(*r.failing_row) + ")");
    case SolveStatus::underdetermined:
      throw DecompositionError(DecompositionError::Kind::underdetermined,
                               "basis has rank " + std::to_string(r.rank) + " < " +
                                   std::to_string(basis.size()) + " on the first " +
                                   std::to_string(precision) + " coefficients");
    case SolveStatus::unique:
      break;
  }

  std::vector<QSeries> cut;
  for (const auto& f : basis) cut.push_back(f.truncated(precision));
  const QSeries residual = target.truncated(precision) - reconstruct(r.solution, cut);
  if (!residual.is_zero())
    throw DecompositionError(DecompositionError::Kind::inconsistent, "nonzero residual after solve");
  return r.solution;
}

inline Decomposition decompose(const QSeries& target, Space space, std::size_t precision) {
  check_basis_precision(precision);
  const auto basis = build_basis_shared(space, precision);
  return {space, solve_in_basis(target, *basis, precision), precision};
}

inline Decomposition decompose_form(const FormSpec& form, std::size_t precision) {
  return decompose(form_theta_product(form, precision), form.space, precision);
}

/// sum_i c_i A_i(n), the n-th coefficient predicted by a decomposition.
inline Rational coefficient_at(const Decomposition& d, std::size_t n) {
  // Round the precision up so nearby n share one cached basis.
  const std::size_t p = std::max<std::size_t>((n / 100 + 1) * 100, minimum_basis_precision);
  const auto basis = build_basis_shared(d.space, p);
  Rational out;
  for (std::size_t i = 0; i < d.coefficients.size(); ++i)
    if (!d.coefficients[i].is_zero()) out.add_product(d.coefficients[i], (*basis)[i][n]);
  return out;
}

}  // namespace qf48
