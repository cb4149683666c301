#pragma once

// Printed coefficient tables and their comparison with computed
// decompositions. Differences are reported, not treated as errors.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qf48/decompose.hpp"
#include "qf48/printed_tables_data.hpp"
#include "qf48/theta.hpp"

namespace qf48 {

struct PrintedRow {
  std::string table;  // "2", "3" or "C"
  FormSpec form;
  std::optional<std::vector<Rational>> entries;  // empty when the row is not printed
};

inline std::vector<PrintedRow> parse_printed_tables(std::string_view text) {
  std::vector<PrintedRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto fail = [&](const std::string& why) {
      return std::invalid_argument("printed tables line " + std::to_string(line_no) + ": " + why);
    };
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw fail("missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::string table, family, space, coeffs;
    if (!(head >> table >> family >> space >> coeffs)) throw fail("expected table, family, space, form");
    PrintedRow row;
    row.table = table;
    row.form.form = parse_form(family + ":" + coeffs);
    row.form.space = parse_space(space);
    if (classify_character(row.form.form) != row.form.space) throw fail("space disagrees with the catalogue");

    std::istringstream tail(line.substr(colon + 1));
    std::vector<std::string> tokens;
    for (std::string tok; tail >> tok;) tokens.push_back(tok);
    if (tokens.size() == 1 && tokens[0] == "-") {
      rows.push_back(std::move(row));
      continue;
    }
    std::vector<Rational> entries;
    for (const auto& tok : tokens) entries.push_back(Rational::parse(tok));
    if (entries.size() != space_dimension(row.form.space)) throw fail("wrong number of entries");
    row.entries = std::move(entries);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline const std::vector<PrintedRow>& printed_tables() {
  static const auto rows = parse_printed_tables(printed_tables_text);
  return rows;
}

/// The printed row for a form, if the form appears in the tables at all.
inline const PrintedRow* printed_row(const QuadraticForm& form) {
  for (const auto& r : printed_tables())
    if (r.form.form == form) return &r;
  return nullptr;
}

struct EntryDiff {
  std::size_t index = 0;  // 1-based basis index
  Rational computed;
  Rational printed;
};

struct RowComparison {
  std::string table;
  FormSpec form;
  std::vector<Rational> computed;
  std::optional<std::vector<Rational>> printed;
  std::vector<EntryDiff> diffs;

  bool confirmed() const { return printed.has_value() && diffs.empty(); }
};

inline std::vector<EntryDiff> compare_row(const std::vector<Rational>& computed,
                                          const std::vector<Rational>& printed) {
  if (computed.size() != printed.size()) throw std::invalid_argument("compare_row: length mismatch");
  std::vector<EntryDiff> diffs;
  for (std::size_t i = 0; i < computed.size(); ++i)
    if (computed[i] != printed[i]) diffs.push_back({i + 1, computed[i], printed[i]});
  return diffs;
}

inline RowComparison compare_printed_row(const PrintedRow& row, std::size_t precision) {
  RowComparison out;
  out.table = row.table;
  out.form = row.form;
  out.computed = decompose_form(row.form, precision).coefficients;
  out.printed = row.entries;
  if (row.entries) out.diffs = compare_row(out.computed, *row.entries);
  return out;
}

/// Compares every printed row of the selected tables ("2", "3", "C") with
/// the computed decomposition. Output order is the table order regardless
/// of `jobs`.
inline std::vector<RowComparison> compare_with_paper_tables(const std::vector<std::string>& tables,
                                                            std::size_t precision, unsigned jobs = 1) {
  std::vector<const PrintedRow*> selected;
  for (const auto& r : printed_tables())
    if (std::find(tables.begin(), tables.end(), r.table) != tables.end()) selected.push_back(&r);

  // Build the shared bases once before fanning out.
  for (Space s : all_spaces) build_basis_shared(s, precision);

  std::vector<RowComparison> out(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < selected.size(); i += stride) {
      try {
        out[i] = compare_printed_row(*selected[i], precision);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// For rows of one space whose diffs could be a relabelling of columns:
/// returns perm with printed[j] == computed[perm[j]] for every row, if a
/// unique such permutation exists that moves at least one column.
inline std::optional<std::vector<std::size_t>> column_permutation(const std::vector<RowComparison>& rows) {
  std::vector<const RowComparison*> usable;
  for (const auto& r : rows)
    if (r.printed) usable.push_back(&r);
  if (usable.empty()) return std::nullopt;
  const std::size_t width = usable.front()->computed.size();
  for (const auto* r : usable)
    if (r->computed.size() != width) return std::nullopt;

  std::vector<std::size_t> perm(width);
  std::vector<bool> used(width, false);
  bool moved = false;
  for (std::size_t j = 0; j < width; ++j) {
    std::optional<std::size_t> match;
    for (std::size_t k = 0; k < width; ++k) {
      const bool all = std::all_of(usable.begin(), usable.end(),
                                   [&](const RowComparison* r) { return (*r->printed)[j] == r->computed[k]; });
      if (!all) continue;
      if (k == j) {  // prefer the identity when it works
        match = k;
        break;
      }
      if (!match) match = k;
      else return std::nullopt;  // ambiguous
    }
    if (!match || used[*match]) return std::nullopt;
    used[*match] = true;
    perm[j] = *match;
    moved = moved || *match != j;
  }
  if (!moved) return std::nullopt;
  return perm;
}

}  // namespace qf48
