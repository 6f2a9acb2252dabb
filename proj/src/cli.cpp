#include "eco/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eco/asymptotics.hpp"
#include "eco/closed_forms.hpp"
#include "eco/cross_check.hpp"
#include "eco/error.hpp"
#include "eco/io.hpp"
#include "eco/oracles.hpp"
#include "eco/rule_catalog.hpp"
#include "eco/series_catalog.hpp"
#include "eco/tree_engine.hpp"

namespace eco::cli {
namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw Error(ErrorKind::InvalidArgument,
                "bad " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

bool is_builtin_rule(std::string_view name) {
  const auto names = builtin_rule_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

// "name" or "name:b" for parameterized catalog series
TruncatedSeries series_arg(std::string_view spec, int order) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return named_series(spec, order);
  return named_series(spec.substr(0, colon), order, parse_int(spec.substr(colon + 1), "series parameter"));
}

std::pair<Label, Label> parse_axiom_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const Label b = parse_int(text, "axiom");
    return {b, b};
  }
  return {parse_int(text.substr(0, dots), "axiom"), parse_int(text.substr(dots + 2), "axiom")};
}

void emit_sequence(std::ostream& out, const std::string& format, Json payload, const Sequence& s,
                   const std::optional<EcoMatrix>& rows) {
  if (format == "bfile") {
    out << to_bfile(s);
  } else if (format == "csv") {
    out << (rows ? to_csv(eco_matrix_export(*rows)) : sequence_csv(s));
  } else {
    payload["sequence"] = to_json(s);
    if (rows) {
      Json levels = Json::array();
      for (const auto& r : rows->rows) levels.push_back(to_json(r));
      payload["levels"] = levels;
    }
    out << payload.dump(2) << '\n';
  }
}

Json error_json(const Error& e) {
  Json j{{"error_kind", std::string(kind_name(e.kind()))}, {"detail", e.what()}};
  if (e.witness()) j["witness"] = *e.witness();
  return j;
}

}  // namespace

ProductionRule resolve_rule(std::string_view spec) {
  if (is_builtin_rule(spec)) return builtin_rule(spec);
  const std::filesystem::path path{std::string(spec)};
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::UnknownName,
                "'" + std::string(spec) + "' is neither a shipped rule nor a readable file");
  std::ostringstream text;
  text << in.rdbuf();
  ProductionRule rule = parse_rule(text.str());
  if (rule.name.empty()) rule.name = path.stem().string();
  return rule;
}

RuleOperator resolve_operator(std::string_view spec) {
  if (is_builtin_rule(spec)) return from_rule(builtin_rule(spec));
  if (spec.starts_with("L_bracket:"))
    return builtin("L_bracket", {parse_int(spec.substr(10), "L_bracket parameter")});
  const auto names = builtin_operator_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return builtin(spec);
  return from_rule(resolve_rule(spec));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Succession rules, generating trees and their closed forms", "eco"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "bfile"};

  std::string rule_spec, omega, sigma, method = "engine", format = "json", axioms = "1";
  std::string name, d_name, h_name, entry, case_name_arg, family;
  Label axiom = 1, max_label = 50;
  std::optional<Label> label_bound;
  int levels = 0, order = 10, n = 0;
  std::optional<int> row_sums;
  std::int64_t b = 1;
  bool labels = false, as_integers = false, stretched = false;

  auto* parse = app.add_subcommand("parse", "Parse a rule and print its canonical JSON");
  parse->add_option("--rule", rule_spec, "Shipped rule name or rule file")->required();

  auto* expand = app.add_subcommand("expand", "Expand a generating tree level by level");
  expand->add_option("--rule", rule_spec, "Shipped rule name or rule file")->required();
  expand->add_option("--axiom", axiom, "Root label")->check(CLI::NonNegativeNumber);
  expand->add_option("--levels", levels, "Deepest level")->required()->check(CLI::NonNegativeNumber);
  expand->add_flag("--labels", labels, "Include the level polynomials");
  expand->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* mixed = app.add_subcommand("mixed", "Sequence of the doubled rule (axiom) omega^{+1} sigma^{+2}");
  mixed->add_option("--omega", omega, "Operator for sons one level down")->required();
  mixed->add_option("--sigma", sigma, "Operator for sons two levels down")->required();
  mixed->add_option("--axiom", axiom)->check(CLI::NonNegativeNumber);
  mixed->add_option("--levels", levels)->required()->check(CLI::NonNegativeNumber);
  mixed->add_option("--method", method)->check(CLI::IsMember({"engine", "formula"}));
  mixed->add_option("--max-label", label_bound, "Commutation check bound for the formula");
  mixed->add_flag("--labels", labels, "Include the level polynomials (engine)");
  mixed->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* fam = app.add_subcommand("family", "Sequences of one production rule for several axioms");
  fam->add_option("--rule", rule_spec)->required();
  fam->add_option("--axioms", axioms, "B or A..B");
  fam->add_option("--levels", levels)->required()->check(CLI::NonNegativeNumber);
  fam->add_option("--method", method)->check(CLI::IsMember({"engine", "recursion"}));
  fam->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* commute = app.add_subcommand("commute", "Check [omega, sigma] = 0 on labels 1..max-label");
  commute->add_option("--omega", omega)->required();
  commute->add_option("--sigma", sigma)->required();
  commute->add_option("--max-label", max_label)->check(CLI::PositiveNumber);

  auto* series = app.add_subcommand("series", "Coefficients of a catalog power series");
  series->add_option("--name", name, "Catalog series name")->required();
  series->add_option("--b", b, "Axiom parameter")->check(CLI::PositiveNumber);
  series->add_option("--order", order)->required()->check(CLI::NonNegativeNumber);
  series->add_flag("--as-integers", as_integers, "Counting sequence (n! c_n for EGFs)");

  auto* riordan = app.add_subcommand("riordan", "Entries or row sums of the Riordan array (d, h)");
  riordan->set_help_flag("--help", "Print this help message and exit");
  riordan->add_option("--d", d_name, "Catalog series, optionally name:b")->required();
  riordan->add_option("--h", h_name, "Catalog series, optionally name:b")->required();
  auto* entry_opt = riordan->add_option("--entry", entry, "n,k");
  auto* sums_opt = riordan->add_option("--row-sums", row_sums, "Number of rows")->check(CLI::PositiveNumber);
  entry_opt->excludes(sums_opt);
  riordan->add_flag("--stretched", stretched, "Shift column k down by k rows");

  auto* asym = app.add_subcommand("asymptotic", "Exact count against its asymptotic estimate");
  asym->add_option("--case", case_name_arg)->required()->check(CLI::IsMember({"a128720", "a090344"}));
  asym->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "Count objects by exhaustive enumeration");
  oracle->add_option("--family", family)->required();
  oracle->add_option("--n", n)->required();

  auto* check = app.add_subcommand("check", "Run the cross-validation matrix");
  check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (riordan->parsed() && !*entry_opt && !*sums_opt)
      throw CLI::ValidationError("riordan", "one of --entry or --row-sums is required");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, err, err);
    return 2;
  }

  try {
    if (parse->parsed()) {
      out << to_json(resolve_rule(rule_spec)).dump(2) << '\n';
    } else if (expand->parsed()) {
      const RuleOperator op = resolve_operator(rule_spec);
      const EcoMatrix m = expand_levels(op, axiom, levels);
      Json payload{{"rule", op.description()}, {"axiom", axiom}, {"levels", levels}};
      emit_sequence(out, format, payload, m.row_sums(), labels ? std::optional(m) : std::nullopt);
    } else if (mixed->parsed()) {
      const RuleOperator l = resolve_operator(omega), s = resolve_operator(sigma);
      Json payload{{"omega", l.description()}, {"sigma", s.description()}, {"axiom", axiom},
                   {"levels", levels}, {"method", method}};
      if (method == "formula") {
        emit_sequence(out, format, payload, mixed_formula(l, s, axiom, levels, label_bound), std::nullopt);
      } else {
        const EcoMatrix m = mixed_levels(doubled_rule(axiom, l, s), levels);
        emit_sequence(out, format, payload, m.row_sums(), labels ? std::optional(m) : std::nullopt);
      }
    } else if (fam->parsed()) {
      const auto [lo, hi] = parse_axiom_range(axioms);
      if (lo < 1 || hi < lo) throw Error(ErrorKind::InvalidArgument, "axioms must satisfy 1 <= A <= B");
      FamilySequences table;
      if (method == "recursion") {
        static const std::map<std::string, FamilySequences (*)(Label, int), std::less<>> recursions{
            {"bell", bell_family}, {"catalan", catalan_family}, {"motzkin", motzkin_family}};
        auto it = recursions.find(rule_spec);
        if (it == recursions.end())
          throw Error(ErrorKind::UnknownName, "no family recursion for '" + rule_spec + "'");
        table = it->second(hi, levels);
      } else {
        table = family_from_engine(resolve_operator(rule_spec), hi, levels);
      }
      if (format == "csv") {
        out << "b,n,f\n";
        for (Label a = lo; a <= hi; ++a) {
          const Sequence& s = table.at(a);
          for (std::size_t i = 0; i < s.size(); ++i) out << a << ',' << i << ',' << to_string(s[i]) << '\n';
        }
      } else {
        Json families = Json::object();
        for (Label a = lo; a <= hi; ++a) families[std::to_string(a)] = to_json(table.at(a));
        out << Json{{"rule", rule_spec}, {"method", method}, {"families", families}}.dump(2) << '\n';
      }
    } else if (commute->parsed()) {
      const RuleOperator l = resolve_operator(omega), s = resolve_operator(sigma);
      const CommutationCheck c = commutes_up_to(l, s, max_label);
      Json j{{"commutes", c.commutes}, {"witness", nullptr}};
      if (c.witness) {
        j["witness"] = *c.witness;
        j["commutator"] = to_json(commutator_action(l, s, *c.witness));
      }
      out << j.dump(2) << '\n';
    } else if (series->parsed()) {
      const NamedSeriesInfo& info = named_series_info(name);
      const TruncatedSeries s = named_series(name, order, b);
      Json j{{"name", name}, {"order", order}};
      if (info.takes_b) j["b"] = b;
      if (as_integers) {
        Json values = Json::array();
        for (const auto& c : info.egf ? egf_to_counts(s) : s.coefficients()) {
          if (c.get_den() != 1)
            throw Error(ErrorKind::InvalidArgument, "coefficient " + to_string(c) + " is not an integer");
          values.push_back(to_string(c));
        }
        j["values"] = values;
      } else {
        j["egf"] = info.egf;
        j["coefficients"] = to_json(s);
      }
      out << j.dump(2) << '\n';
    } else if (riordan->parsed()) {
      Json j{{"d", d_name}, {"h", h_name}, {"stretched", stretched}};
      if (row_sums) {
        const int ord = *row_sums - 1;
        const RiordanArray r(series_arg(d_name, ord + 1), series_arg(h_name, ord + 1));
        const TruncatedSeries s = (stretched ? stretched_row_sums(r) : riordan_row_sums(r)).truncated(ord);
        j["row_sums"] = to_json(s);
      } else {
        const auto comma = entry.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::InvalidArgument, "--entry expects n,k");
        const int row = static_cast<int>(parse_int(std::string_view(entry).substr(0, comma), "row"));
        const int col = static_cast<int>(parse_int(std::string_view(entry).substr(comma + 1), "column"));
        if (row < 0 || col < 0) throw Error(ErrorKind::InvalidArgument, "entry indices must be >= 0");
        const RiordanArray r(series_arg(d_name, row + 1), series_arg(h_name, row + 1));
        j["entry"] = {row, col};
        j["value"] = to_string(stretched ? stretched_entry(r, row, col) : riordan_entry(r, row, col));
      }
      out << j.dump(2) << '\n';
    } else if (asym->parsed()) {
      const AsymptoticCase c = parse_asymptotic_case(case_name_arg);
      const BigInt exact = exact_value(c, n);
      const double est = estimate(c, n);
      Json j{{"case", case_name_arg}, {"n", n}, {"exact", to_string(exact)}, {"estimate", est},
             {"relative_error", relative_error(exact, est)}};
      out << j.dump(2) << '\n';
    } else if (oracle->parsed()) {
      const CountedFamily& f = oracle_family(family);
      out << Json{{"family", f.name}, {"n", n}, {"count", to_string(f.counter(n))}}.dump(2) << '\n';
    } else if (check->parsed()) {
      const auto results = run_cross_checks();
      const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      if (format == "text") {
        for (const auto& r : results)
          out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
        out << (all ? "all checks passed" : "some checks failed") << '\n';
      } else {
        Json checks = Json::array();
        for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << Json{{"passed", all}, {"checks", checks}}.dump(2) << '\n';
      }
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    out << error_json(e).dump(2) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace eco::cli
