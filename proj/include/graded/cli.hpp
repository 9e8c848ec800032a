#pragma once

// Command-line front end.  Exit codes: 0 success, 1 usage error, 2 domain
// error (bad values, malformed files, unbound variables, ...).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graded/connectives.hpp"
#include "graded/dsl.hpp"
#include "graded/laws.hpp"
#include "graded/mvl.hpp"
#include "graded/plot.hpp"
#include "graded/serialize.hpp"
#include "graded/set_core.hpp"

namespace graded::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError(path + ": cannot write file");
  out << content;
  if (!out) throw DomainError(path + ": write failed");
}

inline FuzzySet load_curve(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return fuzzy_set_from_json_text(text);
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

/// "classical" | "nvalued:N" | "fuzzy:LAMBDA"
inline dsl::Semantics parse_semantics(const std::string& spec) {
  if (spec == "classical") return dsl::Semantics::classical();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("unknown semantics '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  std::size_t used = 0;
  try {
    if (head == "nvalued") {
      const int n = std::stoi(arg, &used);
      if (used != arg.size()) throw UsageError("bad arity in '" + spec + "'");
      return dsl::Semantics::nvalued(n);
    }
    if (head == "fuzzy") {
      const double lambda = std::stod(arg, &used);
      if (used != arg.size()) throw UsageError("bad lambda in '" + spec + "'");
      return dsl::Semantics::fuzzy(NegationFamily{lambda});
    }
  } catch (const std::invalid_argument&) {
    throw UsageError("bad number in semantics '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw UsageError("number out of range in semantics '" + spec + "'");
  }
  throw UsageError("unknown semantics '" + spec + "'");
}

/// "k=v,k=v,..."; empty string binds nothing.
inline dsl::Environment parse_environment(const std::string& text) {
  dsl::Environment env;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("binding '" + item + "' is not of the form name=value");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (!dsl::valid_identifier(name)) throw UsageError("invalid variable name '" + name + "'");
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError("binding '" + item + "' has a non-numeric value");
    }
    env.insert_or_assign(name, TruthDegree{v});
  }
  return env;
}

inline std::string render_table(const mvl::TruthTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  if (mvl::is_unary(t.connective)) {
    header = {"a", "not a"};
  } else {
    header.push_back(std::string("a ") + std::string(mvl::to_string(t.connective)) + " b");
    for (int j = 0; j < t.n; ++j) header.push_back(mvl::MvlValue{j, t.n}.fraction());
  }
  cells.push_back(header);
  for (int i = 0; i < t.n; ++i) {
    std::vector<std::string> row{mvl::MvlValue{i, t.n}.fraction()};
    for (const auto& v : t.rows[i]) row.push_back(v.fraction());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << "  ";
      os << std::setw(static_cast<int>(widths[c])) << row[c];
    }
    os << '\n';
  }
  return os.str();
}

inline std::string label_for(const std::string& path) { return std::filesystem::path(path).stem().string(); }

/// Runs one command.  `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graded-logic toolkit: fuzzy sets, negations, classical-law checks, n-valued logic"};
  app.name("graded");
  app.require_subcommand(1);

  // set eval / set combine
  auto* set_cmd = app.add_subcommand("set", "Evaluate or combine membership curves");
  set_cmd->require_subcommand(1);
  std::string curve_path, curve2_path, out_path, op;
  double x = 0.0;
  double lambda = 0.0;
  double tol = kDefaultComplementTolerance;
  bool json = false;

  auto* set_eval = set_cmd->add_subcommand("eval", "Membership value at a point");
  set_eval->add_option("--curve", curve_path, "Curve JSON file")->required();
  set_eval->add_option("--x", x, "Point in the universe")->required();
  set_eval->add_flag("--json", json, "Single-line JSON output");

  auto* set_combine = set_cmd->add_subcommand("combine", "Pointwise min/max or complement");
  set_combine->add_option("--op", op, "min | max | complement")
      ->required()
      ->check(CLI::IsMember({"min", "max", "complement"}));
  set_combine->add_option("--lambda", lambda, "Negation parameter (complement)");
  set_combine->add_option("--curve", curve_path, "First operand")->required();
  set_combine->add_option("--curve2", curve2_path, "Second operand (min/max)");
  set_combine->add_option("--out", out_path, "Output curve file")->required();
  set_combine->add_option("--tol", tol, "Complement approximation tolerance");
  set_combine->add_flag("--json", json, "Single-line JSON output");

  // laws check
  auto* laws_cmd = app.add_subcommand("laws", "Classical-law checks");
  laws_cmd->require_subcommand(1);
  auto* laws_check = laws_cmd->add_subcommand("check", "Contradiction / excluded-middle defects");
  laws_check->add_option("--curve", curve_path, "Curve JSON file")->required();
  laws_check->add_option("--lambda", lambda, "Negation parameter")->required();
  laws_check->add_option("--tol", tol, "Complement approximation tolerance");
  laws_check->add_flag("--json", json, "Single-line JSON output");

  // mvl table
  auto* mvl_cmd = app.add_subcommand("mvl", "n-valued logic");
  mvl_cmd->require_subcommand(1);
  auto* mvl_table = mvl_cmd->add_subcommand("table", "Print a truth table");
  int n = 0;
  bool csv = false;
  mvl_table->add_option("--op", op, "not | and | or | implies")
      ->required()
      ->check(CLI::IsMember({"not", "and", "or", "implies"}));
  mvl_table->add_option("--n", n, "Number of truth values")->required();
  auto* csv_flag = mvl_table->add_flag("--csv", csv, "CSV output");
  mvl_table->add_flag("--json", json, "Single-line JSON output")->excludes(csv_flag);

  // expr eval
  auto* expr_cmd = app.add_subcommand("expr", "Propositional formulas");
  expr_cmd->require_subcommand(1);
  auto* expr_eval = expr_cmd->add_subcommand("eval", "Evaluate a formula");
  std::string formula_text, env_text, semantics_text = "classical";
  expr_eval->add_option("--formula", formula_text, "Formula text")->required();
  expr_eval->add_option("--env", env_text, "Bindings name=value,...");
  expr_eval->add_option("--semantics", semantics_text, "classical | nvalued:N | fuzzy:LAMBDA");
  expr_eval->add_flag("--json", json, "Single-line JSON output");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Sample curves to CSV or SVG");
  std::vector<std::string> curve_paths;
  int samples = plot::kDefaultSamples;
  int width = 640, height = 400;
  plot_cmd->add_option("--curve", curve_paths, "Curve JSON files")->required()->expected(1, -1);
  plot_cmd->add_option("--out", out_path, "Output .csv or .svg")->required();
  plot_cmd->add_option("--samples", samples, "Uniform samples in addition to breakpoints");
  plot_cmd->add_option("--width", width, "SVG width");
  plot_cmd->add_option("--height", height, "SVG height");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (set_eval->parsed()) {
      const FuzzySet set = load_curve(curve_path);
      const TruthDegree v = mf_eval(set, x);
      if (json) {
        out << Json{{"x", x}, {"value", v.value()}}.dump() << "\n";
      } else {
        out << plot::format_number(v.value()) << "\n";
      }
    } else if (set_combine->parsed()) {
      const FuzzySet a = load_curve(curve_path);
      std::optional<FuzzySet> result;
      if (op == "complement") {
        result = complement(a, NegationFamily{lambda}, tol);
      } else {
        if (curve2_path.empty()) throw UsageError("--op " + op + " needs --curve2");
        const FuzzySet b = load_curve(curve2_path);
        result = op == "min" ? pointwise_min(a, b) : pointwise_max(a, b);
      }
      write_file(out_path, to_json(*result).dump() + "\n");
      const auto count = result->curve().breakpoints().size();
      if (json) {
        out << Json{{"out", out_path}, {"breakpoints", count}}.dump() << "\n";
      } else {
        out << "wrote " << out_path << " (" << count << " breakpoints)\n";
      }
    } else if (laws_check->parsed()) {
      const FuzzySet a = load_curve(curve_path);
      const NegationFamily neg{lambda};
      const LawReport contradiction = contradiction_defect(a, neg, tol);
      const LawReport excluded = excluded_middle_defect(a, neg, tol);
      const SelfComplementCheck self = self_complementary(a, neg, tol);
      if (json) {
        out << Json{{"lambda", lambda},
                    {"laws", Json::array({to_json(contradiction), to_json(excluded)})},
                    {"self_complementary", to_json(self)}}
                   .dump()
            << "\n";
      } else {
        for (const LawReport* r : {&contradiction, &excluded}) {
          out << std::left << std::setw(16) << to_string(r->law) << " defect=" << plot::format_number(r->defect.value())
              << " witness_x=" << plot::format_number(r->witness_x)
              << " holds=" << (r->holds_classically ? "true" : "false") << "\n";
        }
        out << std::left << std::setw(16) << "self_complement"
            << " holds=" << (self.holds ? "true" : "false")
            << " max_deviation=" << plot::format_number(self.max_deviation) << "\n";
      }
    } else if (mvl_table->parsed()) {
      const mvl::TruthTable t = mvl::truth_table(mvl::connective_from_string(op), n);
      if (csv) {
        out << mvl::to_csv(t);
      } else if (json) {
        out << mvl::to_json(t).dump() << "\n";
      } else {
        out << render_table(t);
      }
    } else if (expr_eval->parsed()) {
      const dsl::Semantics sem = parse_semantics(semantics_text);
      const dsl::Environment env = parse_environment(env_text);
      const dsl::Formula f = dsl::parse(formula_text);
      const TruthDegree v = dsl::evaluate(f, env, sem);
      if (json) {
        out << Json{{"formula", dsl::print_formula(f)}, {"semantics", semantics_text}, {"value", v.value()}}.dump()
            << "\n";
      } else {
        out << plot::format_number(v.value()) << "\n";
      }
    } else if (plot_cmd->parsed()) {
      const std::string ext = std::filesystem::path(out_path).extension().string();
      if (ext != ".csv" && ext != ".svg") throw UsageError("--out must end in .csv or .svg");
      std::vector<FuzzySet> sets;
      for (const auto& p : curve_paths) sets.push_back(load_curve(p));
      std::vector<const FuzzySet*> ptrs;
      for (const auto& s : sets) ptrs.push_back(&s);
      const std::vector<double> grid = plot::sample_grid(ptrs, samples);
      std::vector<plot::PlotSeries> series;
      for (std::size_t i = 0; i < sets.size(); ++i) series.push_back(plot::sample(sets[i], label_for(curve_paths[i]), grid));
      write_file(out_path, ext == ".csv" ? plot::emit_csv(series) : plot::emit_svg(series, width, height));
      out << "wrote " << out_path << " (" << series.size() << " series, " << grid.size() << " samples)\n";
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace graded::cli
