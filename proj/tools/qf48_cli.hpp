#pragma once

// Command-line front end. Kept in a header so the test suite can drive
// run() directly.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qf48/basis.hpp"
#include "qf48/decompose.hpp"
#include "qf48/eisenstein.hpp"
#include "qf48/eta.hpp"
#include "qf48/formulas.hpp"
#include "qf48/oracle.hpp"
#include "qf48/printed_tables.hpp"
#include "qf48/theta.hpp"

namespace qf48::cli {

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
  std::string command;
  std::size_t precision = default_precision;
  std::int64_t nmax = 300;
  bool json_output = false;
  std::string out_path;
  std::string form;
  std::string name;
  std::string eta;
  std::string space;
  std::string tables = "2,3,C";
  std::string variant = "printed";
  std::int64_t n = -1;
  unsigned jobs = 1;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

/// {"precision": P, "coeffs": ["1", "2", ...]}
inline json series_json(const QSeries& f) {
  json a = json::array();
  for (const auto& c : f.coefficients()) a.push_back(c.str());
  return {{"precision", f.precision()}, {"coeffs", a}};
}

inline std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& r : v) {
    if (!s.empty()) s += ' ';
    s += r.str();
  }
  return s;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

// Result of one command: a JSON payload, the text rendering, and whether a
// hard failure occurred.
struct Outcome {
  json payload;
  std::string text;
  bool failed = false;
};

inline FormSpec require_form(const RunConfig& c) {
  if (c.form.empty()) throw UsageError("--form is required");
  return catalogued_form(parse_form(c.form));
}

// ---------------------------------------------------------------------------

inline Outcome cmd_expand(const RunConfig& c) {
  QSeries f(1);
  std::string label;
  if (!c.form.empty()) {
    const QuadraticForm q = parse_form(c.form);
    f = theta_product(q, c.precision);
    label = q.str();
  } else if (!c.eta.empty()) {
    const EtaQuotient e = EtaQuotient::parse(c.eta);
    f = eta_quotient_expansion(e, c.precision);
    label = e.str();
  } else if (c.name == "theta") {
    f = theta_series(c.precision);
    label = "theta";
  } else if (c.name == "hexagonal") {
    f = hexagonal_series(c.precision);
    label = "hexagonal";
  } else if (c.name == "E2") {
    f = e2_series(c.precision);
    label = "E2";
  } else if (!c.name.empty()) {
    const BasisElement e = parse_basis_element(c.name);
    f = build_element(e, c.precision);
    label = e.descriptor();
  } else {
    throw UsageError("expand needs --form, --eta or --name");
  }
  Outcome o;
  o.payload["name"] = label;
  o.payload["series"] = series_json(f);
  std::ostringstream t;
  t << label << " (precision " << c.precision << ")\n";
  for (std::size_t i = 0; i < f.precision(); ++i) t << i << ' ' << f[i] << '\n';
  o.text = t.str();
  return o;
}

inline Outcome cmd_basis(const RunConfig& c) {
  if (c.space.empty()) throw UsageError("--space is required");
  const Space s = parse_space(c.space);
  const auto elements = basis_elements(s);
  const auto series = build_basis(s, c.precision);
  Outcome o;
  o.payload["space"] = space_name(s);
  o.payload["precision"] = c.precision;
  o.payload["rank"] = basis_rank(s, c.precision);
  json list = json::array();
  std::ostringstream t;
  t << "space " << space_name(s) << ", " << elements.size() << " elements, rank "
    << basis_rank(s, c.precision) << " at precision " << c.precision << '\n';
  for (std::size_t i = 0; i < elements.size(); ++i) {
    json e;
    e["id"] = i + 1;
    e["descriptor"] = elements[i].descriptor();
    e["series"] = series_json(series[i]);
    list.push_back(e);
    t << "f" << i + 1 << " " << elements[i].descriptor() << ":";
    for (std::size_t n = 0; n < std::min<std::size_t>(series[i].precision(), 12); ++n) t << ' ' << series[i][n];
    t << " ...\n";
  }
  o.payload["elements"] = list;
  o.text = t.str();
  return o;
}

inline Outcome cmd_count(const RunConfig& c) {
  if (c.form.empty()) throw UsageError("--form is required");
  if (c.n < 0) throw UsageError("--n is required and must be non-negative");
  const QuadraticForm q = parse_form(c.form);
  const std::int64_t count = count_representations(q, c.n);
  Outcome o;
  o.payload["form"] = q.str();
  o.payload["n"] = c.n;
  o.payload["count"] = count;
  o.text = std::to_string(count) + "\n";
  return o;
}

inline json diffs_json(const std::vector<EntryDiff>& diffs) {
  json a = json::array();
  for (const auto& d : diffs) {
    json e;
    e["index"] = d.index;
    e["computed"] = d.computed.str();
    e["paper"] = d.printed.str();
    a.push_back(e);
  }
  return a;
}

inline Outcome cmd_decompose(const RunConfig& c) {
  const FormSpec spec = require_form(c);
  const Decomposition d = decompose_form(spec, c.precision);
  Outcome o;
  o.payload["form"] = spec.str();
  o.payload["space"] = space_name(spec.space);
  o.payload["verified_to"] = d.verified_to;
  o.payload["computed"] = rationals(d.coefficients);
  std::ostringstream t;
  t << spec.str() << " in " << space_name(spec.space) << " (verified through q^" << d.verified_to - 1 << ")\n";
  t << join(d.coefficients) << '\n';
  if (const PrintedRow* row = printed_row(spec.form); row && row->entries) {
    const auto diffs = compare_row(d.coefficients, *row->entries);
    o.payload["paper"] = rationals(*row->entries);
    o.payload["diffs"] = diffs_json(diffs);
    t << "printed table " << row->table << ": " << (diffs.empty() ? "matches" : "differs") << '\n';
    for (const auto& df : diffs)
      t << "  entry " << df.index << ": computed " << df.computed << ", printed " << df.printed << '\n';
  } else {
    o.payload["paper"] = nullptr;
    o.payload["diffs"] = json::array();
    t << "no printed row\n";
  }
  o.text = t.str();
  return o;
}

// Resolves a formula name to an evaluator and the form it counts.
struct ResolvedFormula {
  std::string name;
  QuadraticForm form;
  std::function<Rational(std::int64_t)> eval;
  std::string terms;  // empty for closed forms
};

inline ResolvedFormula resolve_formula(const std::string& name, Variant v) {
  auto strip = [&](const std::string& suffix) -> std::optional<std::string> {
    if (name.size() > suffix.size() && name.ends_with(suffix)) return name.substr(0, name.size() - suffix.size());
    return std::nullopt;
  };
  if (auto base = strip("_closed")) {
    const std::string id = *base;
    const auto form = closed_form_quadratic_form(id);
    return {name, form, [id](std::int64_t n) { return eval_closed_form(id, n); }, ""};
  }
  if (name == "N3_3_3_4_ABCD") {
    return {name, closed_form_quadratic_form(name), [](std::int64_t n) { return eval_closed_form("N3_3_3_4_ABCD", n); },
            ""};
  }
  const std::string id = strip("_sample").value_or(name);
  for (const auto* list : {&q2_formulas(), &sample_formulas()}) {
    for (const auto& f : *list) {
      if (f.id != id) continue;
      auto terms = formula_terms(f, v);
      const std::string rendered = terms_str(terms);
      return {name, f.form, [terms = std::move(terms)](std::int64_t n) { return eval_terms(terms, n); }, rendered};
    }
  }
  throw UsageError("unknown formula '" + name + "'");
}

inline Variant parse_variant(const std::string& s) {
  if (s == "printed") return Variant::printed;
  if (s == "recomputed") return Variant::recomputed;
  throw UsageError("--variant must be printed or recomputed");
}

inline Outcome cmd_formula(const RunConfig& c) {
  if (c.name.empty()) throw UsageError("--name is required");
  if (c.n < 1) throw UsageError("--n is required and must be positive");
  const ResolvedFormula f = resolve_formula(c.name, parse_variant(c.variant));
  const Rational value = f.eval(c.n);
  const std::int64_t count = count_representations(f.form, c.n);
  Outcome o;
  o.payload["name"] = f.name;
  o.payload["variant"] = c.variant;
  if (!f.terms.empty()) o.payload["terms"] = f.terms;
  o.payload["n"] = c.n;
  o.payload["value"] = value.str();
  o.payload["oracle"] = count;
  o.payload["agrees"] = value == Rational(count);
  std::ostringstream t;
  t << value << "\n";
  if (value != Rational(count)) t << "oracle count is " << count << "\n";
  o.text = t.str();
  return o;
}

inline Outcome cmd_verify_tables(const RunConfig& c) {
  std::vector<std::string> tables = split_list(c.tables);
  for (const auto& tb : tables)
    if (tb != "2" && tb != "3" && tb != "C") throw UsageError("--tables takes a list drawn from 2,3,C");
  const auto rows = compare_with_paper_tables(tables, c.precision, c.jobs);

  Outcome o;
  json list = json::array();
  json discrepancies = json::array();
  std::size_t confirmed = 0, not_printed = 0;
  std::ostringstream t;
  for (const auto& r : rows) {
    json e;
    e["table"] = r.table;
    e["form"] = r.form.str();
    e["space"] = space_name(r.form.space);
    e["computed"] = rationals(r.computed);
    e["paper"] = r.printed ? rationals(*r.printed) : json(nullptr);
    e["diffs"] = diffs_json(r.diffs);
    list.push_back(e);
    if (!r.printed) {
      ++not_printed;
      discrepancies.push_back({{"form", r.form.str()}, {"kind", "row not printed"}});
      t << "table " << r.table << " " << r.form.str() << ": not printed; computed " << join(r.computed) << '\n';
    } else if (r.diffs.empty()) {
      ++confirmed;
    } else {
      json d = {{"form", r.form.str()}, {"kind", "entries differ"}};
      json idx = json::array();
      for (const auto& df : r.diffs) idx.push_back(df.index);
      d["indices"] = idx;
      discrepancies.push_back(d);
      t << "table " << r.table << " " << r.form.str() << ": " << r.diffs.size() << " entries differ";
      for (const auto& df : r.diffs) t << " [" << df.index << ": " << df.computed << " vs " << df.printed << "]";
      t << '\n';
    }
  }
  // Column relabellings that explain every differing row of a space.
  json perms = json::array();
  for (Space s : all_spaces) {
    std::vector<RowComparison> same;
    bool any_diff = false;
    for (const auto& r : rows)
      if (r.form.space == s) {
        same.push_back(r);
        any_diff = any_diff || !r.diffs.empty();
      }
    if (!any_diff) continue;
    if (auto p = column_permutation(same)) {
      json m = json::array();
      for (std::size_t j = 0; j < p->size(); ++j)
        if ((*p)[j] != j) m.push_back({{"printed_column", j + 1}, {"computed_column", (*p)[j] + 1}});
      perms.push_back({{"space", space_name(s)}, {"columns", m}});
      t << space_name(s) << ": all printed rows match after relabelling columns";
      for (const auto& x : m) t << ' ' << x["printed_column"].get<int>() << "<-" << x["computed_column"].get<int>();
      t << '\n';
    }
  }
  o.payload["precision"] = c.precision;
  o.payload["tables"] = tables;
  o.payload["rows"] = list;
  o.payload["summary"] = {{"rows", rows.size()}, {"confirmed", confirmed}, {"not_printed", not_printed},
                          {"differing", rows.size() - confirmed - not_printed}};
  o.payload["paper_discrepancies"] = discrepancies;
  o.payload["column_permutations"] = perms;
  t << rows.size() << " rows: " << confirmed << " confirmed, " << rows.size() - confirmed - not_printed
    << " differ, " << not_printed << " not printed\n";
  o.text = t.str();
  return o;
}

// Checks of formulas against the oracle. Disagreement of a transcribed
// expression is reported under paper_discrepancies; disagreement of anything computed here
// is a failure.
inline Outcome cmd_verify_formulas(const RunConfig& c) {
  Outcome o;
  json checks = json::array();
  json discrepancies = json::array();
  std::ostringstream t;

  const auto sweep = [&](const std::string& name, const QuadraticForm& form, auto&& f, std::int64_t nmax,
                         bool printed) {
    std::vector<std::int64_t> bad;
    for (std::int64_t n = 1; n <= nmax; ++n)
      if (f(n) != Rational(count_representations(form, n))) bad.push_back(n);
    json e = {{"name", name}, {"source", printed ? "printed" : "computed"}, {"nmax", nmax},
              {"mismatches", bad.size()}};
    json first = json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(bad.size(), 8); ++i) first.push_back(bad[i]);
    e["first_mismatches"] = first;
    checks.push_back(e);
    t << (bad.empty() ? "ok   " : (printed ? "DIFF " : "FAIL ")) << name << " vs oracle, n <= " << nmax;
    if (!bad.empty()) t << " (" << bad.size() << " mismatches, first n = " << bad.front() << ")";
    t << '\n';
    if (!bad.empty()) {
      if (printed) discrepancies.push_back({{"name", name}, {"first_mismatch", bad.front()}});
      else o.failed = true;
    }
  };

  for (const auto& f : q2_formulas()) {
    const auto printed = parse_terms(f.printed);
    const auto recomputed = recomputed_terms(f.form, c.precision);
    sweep(f.id, f.form, [&](std::int64_t n) { return eval_terms(printed, n); }, c.nmax, true);
    sweep(f.id + "_recomputed", f.form, [&](std::int64_t n) { return eval_terms(recomputed, n); }, c.nmax, false);
  }
  for (const auto& f : sample_formulas()) {
    const auto printed = parse_terms(f.printed);
    const auto recomputed = recomputed_terms(f.form, c.precision);
    sweep(f.id + "_sample", f.form, [&](std::int64_t n) { return eval_terms(printed, n); }, c.nmax, true);
    sweep(f.id + "_sample_recomputed", f.form, [&](std::int64_t n) { return eval_terms(recomputed, n); }, c.nmax,
          false);
  }
  for (auto name : closed_form_names) {
    const std::string id(name);
    const auto form = closed_form_quadratic_form(id);
    sweep(id + "_closed", form, [&](std::int64_t n) { return eval_closed_form(id, n); }, c.nmax, true);
    std::vector<std::int64_t> bad;
    for (std::int64_t n = 1; n <= c.nmax; ++n)
      if (eval_closed_form(id, n) != eval_open_form(id, n)) bad.push_back(n);
    checks.push_back({{"name", id + "_closed_vs_open"}, {"source", "printed"}, {"nmax", c.nmax},
                      {"mismatches", bad.size()}});
    t << (bad.empty() ? "ok   " : "DIFF ") << id << " closed form vs open form, n <= " << c.nmax << '\n';
    if (!bad.empty()) discrepancies.push_back({{"name", id + "_closed_vs_open"}, {"first_mismatch", bad.front()}});
  }
  // Identities used by the (1,2,4,4) rewriting.
  {
    std::vector<std::int64_t> bad;
    for (std::int64_t n = 1; n <= c.nmax; ++n) {
      const SmoothSplit s = split_2_3(n);
      const std::int64_t odd = n >> s.alpha;
      const bool r_ok = R_function(n) == Rational(kronecker_symbol(8, odd)) * S_function(odd);
      const bool s_ok = S_function(n) == Rational(Integer(1) << s.alpha) * S_function(odd);
      if (!r_ok || !s_ok) bad.push_back(n);
    }
    checks.push_back({{"name", "R_S_identities"}, {"source", "printed"}, {"nmax", c.nmax},
                      {"mismatches", bad.size()}});
    t << (bad.empty() ? "ok   " : "DIFF ") << "R(n) = (8/N) S(N) and S(n) = 2^a S(N), n <= " << c.nmax << '\n';
    if (!bad.empty()) discrepancies.push_back({{"name", "R_S_identities"}, {"first_mismatch", bad.front()}});
  }
  o.payload["nmax"] = c.nmax;
  o.payload["checks"] = checks;
  o.payload["paper_discrepancies"] = discrepancies;
  o.text = t.str();
  return o;
}

inline Outcome cmd_verify_all(const RunConfig& c) {
  Outcome o;
  std::ostringstream t;
  const std::size_t deep = std::max<std::size_t>(c.precision, static_cast<std::size_t>(c.nmax) + 1);

  json ranks = json::object();
  for (Space s : all_spaces) {
    const std::size_t r = basis_rank(s, c.precision);
    ranks[space_name(s)] = r;
    if (r != space_dimension(s)) o.failed = true;
    t << (r == space_dimension(s) ? "ok   " : "FAIL ") << "rank " << space_name(s) << " = " << r << '\n';
  }

  const auto& forms = form_catalogue();
  std::size_t q1 = 0, q2 = 0, q3 = 0;
  for (const auto& f : forms) {
    if (f.form.family == Family::q1) ++q1;
    else if (f.form.family == Family::q2) ++q2;
    else ++q3;
  }
  if (q1 != 55 || q2 != 4 || q3 != 65) o.failed = true;

  for (Space s : all_spaces) build_basis_shared(s, deep);
  struct FormResult {
    json entry;
    bool failed = false;
    std::string line;
  };
  std::vector<FormResult> results(forms.size());
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < forms.size(); i += stride) {
      const FormSpec& spec = forms[i];
      FormResult& r = results[i];
      r.entry["form"] = spec.str();
      r.entry["space"] = space_name(spec.space);
      try {
        const QSeries theta = form_theta_product(spec, deep);
        const Decomposition d = decompose(theta, spec.space, c.precision);
        const QSeries rebuilt = reconstruct(d.coefficients, *build_basis_shared(spec.space, deep));
        const bool residual_zero = (theta - rebuilt).is_zero();
        std::int64_t theta_bad = 0, formula_bad = 0;
        for (std::int64_t n = 1; n <= c.nmax; ++n) {
          const Rational count(count_representations(spec.form, n));
          if (theta[static_cast<std::size_t>(n)] != count) ++theta_bad;
          if (rebuilt[static_cast<std::size_t>(n)] != count) ++formula_bad;
        }
        r.entry["computed"] = rationals(d.coefficients);
        r.entry["residual_zero_through"] = residual_zero ? json(deep) : json(nullptr);
        r.entry["theta_vs_oracle_mismatches"] = theta_bad;
        r.entry["formula_vs_oracle_mismatches"] = formula_bad;
        r.failed = !residual_zero || theta_bad != 0 || formula_bad != 0;
      } catch (const DecompositionError& e) {
        r.entry["error"] = e.what();
        r.failed = true;
      }
      r.line = std::string(r.failed ? "FAIL " : "ok   ") + spec.str();
    }
  };
  const unsigned jobs = std::max(1u, c.jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& th : pool) th.join();
  }
  json list = json::array();
  std::size_t failed_forms = 0;
  for (const auto& r : results) {
    list.push_back(r.entry);
    if (r.failed) {
      ++failed_forms;
      t << r.line << '\n';
    }
  }
  if (failed_forms) o.failed = true;
  t << "forms: " << q1 << " Q1 + " << q2 << " Q2 + " << q3 << " Q3, " << forms.size() - failed_forms
    << " verified through q^" << deep - 1 << " and against the oracle for n <= " << c.nmax << '\n';

  RunConfig tc = c;
  tc.tables = "2,3,C";
  const Outcome tables = cmd_verify_tables(tc);
  const Outcome formulas = cmd_verify_formulas(c);
  o.failed = o.failed || tables.failed || formulas.failed;
  t << tables.text << formulas.text;

  o.payload["precision"] = c.precision;
  o.payload["nmax"] = c.nmax;
  o.payload["ranks"] = ranks;
  o.payload["form_counts"] = {{"q1", q1}, {"q2", q2}, {"q3", q3}};
  o.payload["forms"] = list;
  o.payload["tables"] = tables.payload;
  o.payload["formulas"] = formulas.payload;
  json discrepancies = json::array();
  for (const auto& d : tables.payload["paper_discrepancies"]) discrepancies.push_back(d);
  for (const auto& d : formulas.payload["paper_discrepancies"]) discrepancies.push_back(d);
  o.payload["paper_discrepancies"] = discrepancies;
  o.text = t.str();
  return o;
}

// ---------------------------------------------------------------------------

inline std::size_t precision_from_env(std::size_t fallback) {
  const char* v = std::getenv("QF48_PRECISION");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long p = std::strtoul(v, &end, 10);
  if (*end != '\0') throw UsageError("QF48_PRECISION must be an integer");
  return p;
}

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weight-2 level-48 modular forms and quaternary quadratic form counts", "qf48"};
  app.require_subcommand(1);
  RunConfig c;
  std::optional<std::size_t> prec;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--prec", prec, "number of q-expansion coefficients (default 200)");
    sub->add_flag("--json", c.json_output, "emit JSON");
    sub->add_option("--out", c.out_path, "write output to a file instead of stdout");
  };
  auto* expand = app.add_subcommand("expand", "print a q-expansion");
  common(expand);
  expand->add_option("--form", c.form, "theta product of a form, e.g. q1:1,1,1,4");
  expand->add_option("--name", c.name, "basis descriptor, theta, hexagonal or E2");
  expand->add_option("--eta", c.eta, "eta quotient, e.g. \"2^1 4^1 6^1 12^1\"");

  auto* basis = app.add_subcommand("basis", "print the basis of a space");
  common(basis);
  basis->add_option("--space", c.space, "chi0, chi8, chi12 or chi24")->required();

  auto* count = app.add_subcommand("count", "brute-force representation count");
  common(count);
  count->add_option("--form", c.form, "form, e.g. q3:1,3,16")->required();
  count->add_option("--n", c.n, "target")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose a theta product in its basis");
  common(decompose_cmd);
  decompose_cmd->add_option("--form", c.form, "catalogued form")->required();

  auto* formula = app.add_subcommand("formula", "evaluate a named formula");
  common(formula);
  formula->add_option("--name", c.name, "e.g. N2_1_16, N3_1_3_16_sample, N3_1_3_1_closed")->required();
  formula->add_option("--n", c.n, "argument")->required();
  formula->add_option("--variant", c.variant, "printed or recomputed");

  auto* vtables = app.add_subcommand("verify-tables", "compare decompositions with the printed tables");
  common(vtables);
  vtables->add_option("--tables", c.tables, "comma-separated subset of 2,3,C");
  vtables->add_option("--jobs", c.jobs, "worker threads");

  auto* vformulas = app.add_subcommand("verify-formulas", "check formulas against the oracle");
  common(vformulas);
  vformulas->add_option("--nmax", c.nmax, "largest n checked (default 300)");

  auto* vall = app.add_subcommand("verify-all", "run every check");
  common(vall);
  vall->add_option("--nmax", c.nmax, "largest n checked (default 300)");
  vall->add_option("--jobs", c.jobs, "worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    c.precision = prec ? *prec : precision_from_env(default_precision);
    if (c.precision < minimum_basis_precision) throw UsageError("precision must be at least 30");
    if (c.nmax < 1) throw UsageError("--nmax must be at least 1");
    if (c.jobs < 1) throw UsageError("--jobs must be at least 1");

    Outcome o;
    if (c.command == "expand") o = cmd_expand(c);
    else if (c.command == "basis") o = cmd_basis(c);
    else if (c.command == "count") o = cmd_count(c);
    else if (c.command == "decompose") o = cmd_decompose(c);
    else if (c.command == "formula") o = cmd_formula(c);
    else if (c.command == "verify-tables") o = cmd_verify_tables(c);
    else if (c.command == "verify-formulas") o = cmd_verify_formulas(c);
    else o = cmd_verify_all(c);

    json doc;
    doc["schema"] = 1;
    doc["command"] = c.command;
    for (auto& [k, v] : o.payload.items()) doc[k] = v;
    doc["status"] = o.failed ? "failed" : "ok";
    const std::string rendered = c.json_output ? doc.dump(2) + "\n" : o.text;

    if (!c.out_path.empty()) {
      std::ofstream f(c.out_path);
      if (!f) {
        err << "qf48: cannot write " << c.out_path << '\n';
        return exit_failure;
      }
      f << rendered;
    } else {
      out << rendered;
    }
    return o.failed ? exit_failure : exit_ok;
  } catch (const DecompositionError& e) {
    err << "qf48: " << e.what() << '\n';
    return exit_failure;
  } catch (const std::invalid_argument& e) {
    err << "qf48: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "qf48: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace qf48::cli
