#pragma once

// Exact Gauss-Jordan elimination over the rationals.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qf48/rational.hpp"

namespace qf48 {

using Matrix = std::vector<std::vector<Rational>>;

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rational> solution;  // filled only when unique
  std::size_t rank = 0;
  std::optional<std::size_t> failing_row;  // first row violating the system, if inconsistent
};

/// Row-reduces `m` in place and returns the pivot column of each pivot row.
/// The pivot for a column is the first row (in order) with a nonzero entry.
inline std::vector<std::size_t> row_reduce(Matrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col].is_zero()) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row])
      if (!v.is_zero()) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        if (!m[row][c].is_zero()) m[r][c].sub_product(factor, m[row][c]);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Rank of a matrix given as rows.
inline std::size_t matrix_rank(Matrix m) {
  if (m.empty()) return 0;
  return row_reduce(m, m.front().size()).size();
}

/// Solves A x = b where A is given by its rows. Reports whether the solution
/// is unique, the system is inconsistent, or it has free variables.
inline SolveResult solve_exact(const Matrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_exact: row count mismatch");
  const std::size_t unknowns = a.empty() ? 0 : a.front().size();
  Matrix aug;
  aug.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != unknowns) throw std::invalid_argument("solve_exact: ragged matrix");
    auto row = a[r];
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  // Track original row numbers so an inconsistency can be reported.
  std::vector<std::size_t> origin(aug.size());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;

  SolveResult out;
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < unknowns && row < aug.size(); ++col) {
    std::size_t pick = row;
    while (pick < aug.size() && aug[pick][col].is_zero()) ++pick;
    if (pick == aug.size()) continue;
    std::swap(aug[row], aug[pick]);
    std::swap(origin[row], origin[pick]);
    const Rational inv = Rational(1) / aug[row][col];
    for (auto& v : aug[row])
      if (!v.is_zero()) v *= inv;
    for (std::size_t r = 0; r < aug.size(); ++r) {
      if (r == row || aug[r][col].is_zero()) continue;
      const Rational factor = aug[r][col];
      for (std::size_t c = col; c <= unknowns; ++c)
        if (!aug[row][c].is_zero()) aug[r][c].sub_product(factor, aug[row][c]);
    }
    pivots.push_back(col);
    ++row;
  }
  out.rank = pivots.size();

  for (std::size_t r = row; r < aug.size(); ++r) {
    if (!aug[r][unknowns].is_zero()) {
      out.status = SolveStatus::inconsistent;
      out.failing_row = origin[r];
      return out;
    }
  }
  if (pivots.size() < unknowns) {
    out.status = SolveStatus::underdetermined;
    return out;
  }
  out.status = SolveStatus::unique;
  out.solution.resize(unknowns);
  for (std::size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = aug[i][unknowns];
  return out;
}

}  // namespace qf48
