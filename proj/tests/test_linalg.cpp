#include <gtest/gtest.h>

#include <random>

#include "qf48/linalg.hpp"

using namespace qf48;

namespace {

Matrix ints(std::vector<std::vector<int>> rows) {
  Matrix m;
  for (const auto& r : rows) {
    m.emplace_back();
    for (int v : r) m.back().emplace_back(v);
  }
  return m;
}

std::vector<Rational> vec(std::vector<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Solve, Unique) {
  const auto r = solve_exact(ints({{2, 1}, {1, 3}, {3, 4}}), vec({3, 5, 8}));
  ASSERT_EQ(r.status, SolveStatus::unique);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.solution[0], Rational::parse("4/5"));
  EXPECT_EQ(r.solution[1], Rational::parse("7/5"));
}

TEST(Solve, Inconsistent) {
  const auto r = solve_exact(ints({{1, 0}, {0, 1}, {0, 0}, {1, 1}}), vec({1, 1, 0, 3}));
  EXPECT_EQ(r.status, SolveStatus::inconsistent);
  ASSERT_TRUE(r.failing_row.has_value());
  EXPECT_EQ(*r.failing_row, 3u);
  EXPECT_TRUE(r.solution.empty());
}

TEST(Solve, Underdetermined) {
  const auto r = solve_exact(ints({{1, 2}, {2, 4}}), vec({1, 2}));
  EXPECT_EQ(r.status, SolveStatus::underdetermined);
  EXPECT_EQ(r.rank, 1u);
}

TEST(Solve, RejectsShapeErrors) {
  EXPECT_THROW(solve_exact(ints({{1, 2}}), vec({1, 2})), std::invalid_argument);
  EXPECT_THROW(solve_exact(ints({{1, 2}, {1}}), vec({1, 2})), std::invalid_argument);
}

TEST(Rank, Examples) {
  EXPECT_EQ(matrix_rank(ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2u);
  EXPECT_EQ(matrix_rank(Matrix{}), 0u);
  EXPECT_EQ(matrix_rank(ints({{0, 0}, {0, 0}})), 0u);
}

TEST(SolveProperty, RecoversRandomSolutions) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> entry(-5, 5), den(1, 6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t cols = 2 + static_cast<std::size_t>(trial % 5), rows = cols + 3;
    Matrix a(rows, std::vector<Rational>(cols));
    for (auto& row : a)
      for (auto& v : row) v = entry(rng);
    if (matrix_rank(a) < cols) continue;
    std::vector<Rational> x(cols);
    for (auto& v : x) v = Rational(Integer(entry(rng)), Integer(den(rng)));
    std::vector<Rational> b(rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) b[r] += a[r][c] * x[c];
    const auto s = solve_exact(a, b);
    ASSERT_EQ(s.status, SolveStatus::unique);
    EXPECT_EQ(s.solution, x);
    // Perturbing one right-hand side entry makes the system inconsistent.
    b[rows - 1] += Rational(1);
    EXPECT_EQ(solve_exact(a, b).status, SolveStatus::inconsistent);
  }
}
