#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "qf48/decompose.hpp"
#include "qf48/oracle.hpp"
#include "qf48/printed_tables.hpp"

using namespace qf48;

namespace {

std::vector<Rational> rats(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  for (const auto& s : v) out.push_back(Rational::parse(s));
  return out;
}

const std::vector<std::string> chi0_printed_1114 = {"0", "0", "5/8", "0", "-7/8", "0", "5/4", "0", "0", "2",
                                                    "0", "0", "0", "0"};

}  // namespace

TEST(Decompose, BasisElementsAreUnitVectors) {
  for (Space s : all_spaces) {
    const auto basis = build_basis(s, 200);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto d = decompose(basis[i], s, 200);
      for (std::size_t j = 0; j < basis.size(); ++j)
        EXPECT_EQ(d.coefficients[j], Rational(i == j ? 1 : 0)) << space_name(s) << " " << i << " " << j;
    }
  }
}

TEST(Decompose, KnownRows) {
  const auto d = decompose_form(catalogued_form(parse_form("q1:1,1,1,4")), 200);
  EXPECT_EQ(d.coefficients, rats(chi0_printed_1114));
  EXPECT_EQ(d.verified_to, 200u);
  const auto c = decompose_form(catalogued_form(parse_form("q2:1,2")), 200);
  EXPECT_EQ(c.coefficients, rats({"1/4", "-1/2", "0", "5/4", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}));
}

TEST(Decompose, ErrorKinds) {
  // A series outside the span: only q^1.
  std::vector<Rational> c(200);
  c[1] = 1;
  try {
    decompose(QSeries(c), Space::chi0, 200);
    FAIL() << "expected an inconsistent decomposition";
  } catch (const DecompositionError& e) {
    EXPECT_EQ(e.kind(), DecompositionError::Kind::inconsistent);
  }
  // A degenerate basis: two equal columns.
  auto basis = build_basis(Space::chi8, 50);
  basis[1] = basis[0];
  try {
    solve_in_basis(basis[0], basis, 50);
    FAIL() << "expected an underdetermined decomposition";
  } catch (const DecompositionError& e) {
    EXPECT_EQ(e.kind(), DecompositionError::Kind::underdetermined);
  }
  EXPECT_THROW(decompose(QSeries(20), Space::chi0, 30), std::invalid_argument);
  EXPECT_THROW(decompose(QSeries(50), Space::chi0, 20), std::invalid_argument);
}

TEST(DecomposeProperty, ResidualZeroAndOracleAgreementForEveryForm) {
  for (const auto& spec : form_catalogue()) {
    const QSeries target = form_theta_product(spec, 201);
    const auto d = decompose(target, spec.space, 200);
    const QSeries rebuilt = reconstruct(d.coefficients, build_basis(spec.space, 201));
    EXPECT_TRUE((target - rebuilt).is_zero()) << spec.str();
    for (std::int64_t n = 1; n <= 200; ++n)
      ASSERT_EQ(coefficient_at(d, static_cast<std::size_t>(n)), Rational(count_representations(spec.form, n)))
          << spec.str() << " n=" << n;
  }
}

TEST(DecomposeProperty, BasisPermutationInvariance) {
  std::mt19937 rng(9);
  for (const char* text : {"q1:1,2,3,4", "q3:1,1,1", "q1:1,1,2,4", "q3:1,3,16"}) {
    const FormSpec spec = catalogued_form(parse_form(text));
    const QSeries target = form_theta_product(spec, 200);
    const auto basis = build_basis(spec.space, 200);
    const auto base = solve_in_basis(target, basis, 200);
    std::vector<std::size_t> perm(basis.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<QSeries> shuffled;
    for (auto i : perm) shuffled.push_back(basis[i]);
    const auto sol = solve_in_basis(target, shuffled, 200);
    for (std::size_t j = 0; j < perm.size(); ++j) EXPECT_EQ(sol[j], base[perm[j]]) << text;
    EXPECT_EQ(reconstruct(sol, shuffled), reconstruct(base, basis));
  }
}

TEST(PrintedTables, TranscriptionShape) {
  const auto& rows = printed_tables();
  EXPECT_EQ(rows.size(), 124u);
  std::size_t printed = 0;
  for (const auto& r : rows) printed += r.entries.has_value();
  EXPECT_EQ(printed, 123u);
  EXPECT_EQ(printed_row(parse_form("q3:2,12,1"))->entries, std::nullopt);
  EXPECT_THROW(parse_printed_tables("2 q1 chi8 1,1,1,4 : 0"), std::invalid_argument);
  EXPECT_THROW(parse_printed_tables("2 q1 chi0 1,1,1,4 : 0 1"), std::invalid_argument);
  EXPECT_THROW(parse_printed_tables("2 q1 chi0 1,1,1,4 0 1"), std::invalid_argument);
}

TEST(PrintedTables, SpotRowsAndTableCConfirmed) {
  for (const char* text : {"q1:1,1,1,4", "q1:1,1,2,4", "q2:1,2", "q2:1,4", "q2:1,8", "q2:1,16"}) {
    const auto cmp = compare_printed_row(*printed_row(parse_form(text)), 200);
    EXPECT_TRUE(cmp.confirmed()) << text;
  }
  const auto c14 = compare_printed_row(*printed_row(parse_form("q2:1,4")), 200);
  EXPECT_EQ(c14.computed[0], Rational::parse("3/8"));
  EXPECT_EQ(c14.computed[2], Rational::parse("-3/4"));
  EXPECT_EQ(c14.computed[5], Rational::parse("11/4"));
  const auto r1124 = compare_printed_row(*printed_row(parse_form("q1:1,1,2,4")), 200);
  EXPECT_EQ(r1124.computed, rats({"0", "-2", "0", "0", "4", "0", "0", "0", "0", "0", "0", "0"}));
}

TEST(PrintedTables, PerturbedRowGivesOneDiff) {
  PrintedRow row = *printed_row(parse_form("q1:1,1,1,4"));
  (*row.entries)[4] += Rational(1);
  const auto cmp = compare_printed_row(row, 200);
  ASSERT_EQ(cmp.diffs.size(), 1u);
  EXPECT_EQ(cmp.diffs[0].index, 5u);
  EXPECT_EQ(cmp.diffs[0].computed, Rational::parse("-7/8"));
  EXPECT_EQ(cmp.diffs[0].printed, Rational::parse("1/8"));
}

TEST(PrintedTables, FullComparison) {
  const auto rows = compare_with_paper_tables({"2", "3", "C"}, 200, 2);
  ASSERT_EQ(rows.size(), 124u);
  std::size_t confirmed = 0;
  for (const auto& r : rows) confirmed += r.confirmed();
  EXPECT_EQ(confirmed, 98u);

  const auto single = compare_with_paper_tables({"C"}, 200, 1);
  ASSERT_EQ(single.size(), 4u);
  for (const auto& r : single) EXPECT_TRUE(r.confirmed()) << r.form.str();

  for (const auto& r : rows) {
    if (r.form.form == parse_form("q1:1,12,12,12")) {
      ASSERT_EQ(r.diffs.size(), 1u);
      EXPECT_EQ(r.diffs[0].index, 3u);
      EXPECT_EQ(r.diffs[0].computed, -r.diffs[0].printed);
    }
  }

  std::vector<RowComparison> chi24;
  for (const auto& r : rows)
    if (r.form.space == Space::chi24) chi24.push_back(r);
  const auto perm = column_permutation(chi24);
  ASSERT_TRUE(perm.has_value());
  EXPECT_EQ(*perm, (std::vector<std::size_t>{0, 1, 2, 3, 6, 7, 4, 5, 8, 9, 10, 11}));
}
