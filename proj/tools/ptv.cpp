// Command-line surface: analysis and classification of the deformed
// multiplication on partial transformation semigroups.
//
// Exit codes: 0 success, 1 parse failure, 2 verification failure, 3 budget
// exceeded.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptv/ptv.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitParse = 1;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 12345;
  int max_degree = ptv::kMaxExhaustiveDegree;
  std::uint64_t node_budget = 100000;
};

nlohmann::json budget_json(const GlobalOptions& g) {
  return {{"max_n", g.max_degree}, {"nodes", g.node_budget}};
}

// One self-contained line per record; nlohmann::json orders keys, so equal
// requests with equal seeds print byte-identical output.
void emit_record(const GlobalOptions& g, const std::string& subcommand, nlohmann::json inputs,
                 nlohmann::json results) {
  const nlohmann::json record{{"subcommand", subcommand},
                              {"inputs", std::move(inputs)},
                              {"results", std::move(results)},
                              {"seed", g.seed},
                              {"budget", budget_json(g)}};
  std::cout << record.dump() << "\n";
}

int inferred_degree(const std::string& literal) {
  return static_cast<int>(std::count(literal.begin(), literal.end(), ',')) + 1;
}

ptv::PartialTransformation parse_literal(const std::string& literal, int n_override) {
  return ptv::parse_transformation(literal,
                                   n_override > 0 ? n_override : inferred_degree(literal));
}

nlohmann::json type_json(const ptv::TypeVector& t) {
  return {{"vector", ptv::format_type(t)},
          {"alpha", t.alpha},
          {"rank", t.rank()},
          {"z", t.z()}};
}

int cmd_type(const GlobalOptions& g, const std::string& literal, int n_override) {
  const ptv::PartialTransformation a = parse_literal(literal, n_override);
  const ptv::TypeVector t = ptv::type_of(a);
  if (g.json) {
    emit_record(g, "type", {{"literal", literal}, {"n", a.degree()}}, type_json(t));
  } else {
    std::cout << "transformation: " << ptv::format_transformation(a) << "  (degree "
              << a.degree() << ")\n"
              << "type: " << ptv::format_type(t) << "\n"
              << "rank: " << t.rank() << "\n"
              << "z: " << t.z() << "\n";
  }
  return kExitSuccess;
}

int cmd_annih(const GlobalOptions& g, const std::string& literal, int n_override) {
  const ptv::PartialTransformation a = parse_literal(literal, n_override);
  const ptv::VariantSemigroup v{a};
  const ptv::AnnihilatorCensus census = ptv::annihilator_census(v, g.max_degree);
  if (g.json) {
    emit_record(g, "annih", {{"literal", literal}, {"n", a.degree()}},
                {{"left", {{"counted", census.left_count}, {"formula", census.left_formula}}},
                 {"right", {{"counted", census.right_count}, {"formula", census.right_formula}}},
                 {"two_sided",
                  {{"counted", census.two_sided_count}, {"formula", census.two_sided_formula}}},
                 {"consistent", census.consistent()}});
  } else {
    std::cout << "sandwich: " << ptv::format_transformation(a) << "  (degree " << a.degree()
              << ", type " << ptv::format_type(ptv::type_of(a)) << ")\n";
    std::cout << std::left << std::setw(12) << "" << std::right << std::setw(10) << "counted"
              << std::setw(10) << "formula" << "\n";
    const auto row = [](const char* name, std::uint64_t counted, std::uint64_t formula) {
      std::cout << std::left << std::setw(12) << name << std::right << std::setw(10) << counted
                << std::setw(10) << formula << "\n";
    };
    row("left", census.left_count, census.left_formula);
    row("right", census.right_count, census.right_formula);
    row("two-sided", census.two_sided_count, census.two_sided_formula);
    std::cout << "agreement: " << (census.consistent() ? "yes" : "NO") << "\n";
  }
  return census.consistent() ? kExitSuccess : kExitVerification;
}

int cmd_classes(const GlobalOptions& g, const std::string& literal, int n_override, bool full) {
  const ptv::PartialTransformation a = parse_literal(literal, n_override);
  const ptv::VariantSemigroup v{a};
  const ptv::SimClassPartition partition = ptv::sim_classes(v, g.max_degree);
  const ptv::Multiset sizes = partition.size_multiset();
  if (g.json) {
    nlohmann::json results{{"count", partition.classes.size()},
                           {"sizes", ptv::format_multiset(sizes)}};
    if (full) {
      nlohmann::json classes = nlohmann::json::array();
      for (const ptv::SimClass& c : partition.classes) {
        nlohmann::json members = nlohmann::json::array();
        for (const ptv::PartialTransformation& x : c.members)
          members.push_back(ptv::format_transformation(x));
        classes.push_back({{"key", ptv::format_transformation(c.key)},
                           {"size", c.members.size()},
                           {"members", std::move(members)}});
      }
      results["classes"] = std::move(classes);
    }
    emit_record(g, "classes", {{"literal", literal}, {"n", a.degree()}}, std::move(results));
  } else {
    std::cout << "sandwich: " << ptv::format_transformation(a) << "  (degree " << a.degree()
              << ")\n"
              << "classes: " << partition.classes.size() << "\n"
              << "sizes: " << ptv::format_multiset(sizes) << "\n";
    if (full)
      for (const ptv::SimClass& c : partition.classes) {
        std::cout << "  key " << ptv::format_transformation(c.key) << " (size "
                  << c.members.size() << "):";
        for (const ptv::PartialTransformation& x : c.members)
          std::cout << ' ' << ptv::format_transformation(x);
        std::cout << "\n";
      }
  }
  return kExitSuccess;
}

int cmd_classify(const GlobalOptions& g, int n) {
  if (n > 15) throw ptv::BudgetError("classify capped at degree 15");
  const std::vector<ptv::TypeVector> types = ptv::enumerate_types(n);
  std::string total_terms = "p(0)";
  for (int k = 1; k <= n; ++k) total_terms += "+p(" + std::to_string(k) + ")";

  if (g.json) {
    int index = 0;
    for (const ptv::TypeVector& t : types) {
      const ptv::AnnihilatorFormulas formulas = ptv::annihilator_formulas(n, t.rank(), t.z());
      emit_record(g, "classify", {{"n", n}},
                  {{"index", ++index},
                   {"type", ptv::format_type(t)},
                   {"canonical", ptv::format_transformation(ptv::canonical_rep(t))},
                   {"class_sizes", ptv::format_multiset(ptv::predicted_class_multiset(t))},
                   {"left", formulas.left},
                   {"right", formulas.right},
                   {"two_sided", formulas.two_sided}});
    }
    emit_record(g, "classify", {{"n", n}},
                {{"total", types.size()}, {"terms", total_terms}});
    return kExitSuccess;
  }

  std::vector<std::vector<std::string>> rows;
  for (const ptv::TypeVector& t : types) {
    const ptv::AnnihilatorFormulas formulas = ptv::annihilator_formulas(n, t.rank(), t.z());
    rows.push_back({std::to_string(rows.size() + 1), ptv::format_type(t),
                    ptv::format_transformation(ptv::canonical_rep(t)),
                    ptv::format_multiset(ptv::predicted_class_multiset(t)),
                    std::to_string(formulas.left), std::to_string(formulas.right),
                    std::to_string(formulas.two_sided)});
  }
  const std::vector<std::string> header{"#",    "type",  "canonical", "class sizes",
                                        "left", "right", "two-sided"};
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  const auto print_row = [&widths](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
      std::cout << (c ? "  " : "") << std::left << std::setw(static_cast<int>(widths[c]))
                << row[c];
    std::cout << "\n";
  };
  print_row(header);
  for (const auto& row : rows) print_row(row);
  std::cout << types.size() << " = " << total_terms << "\n";
  return kExitSuccess;
}

int cmd_iso(const GlobalOptions& g, const std::string& lit_a, const std::string& lit_b,
            int n_override, bool force_oracle) {
  const ptv::PartialTransformation a = parse_literal(lit_a, n_override);
  const ptv::PartialTransformation b = parse_literal(lit_b, n_override);
  const ptv::TypeVector ta = ptv::type_of(a);
  const ptv::TypeVector tb = ptv::type_of(b);
  const std::optional<ptv::IsoWitness> witness = ptv::build_isomorphism(a, b);

  std::string oracle_verdict = "SKIPPED";
  if (witness && (force_oracle || a.degree() <= 2)) {
    const ptv::CayleyTable table_a = ptv::cayley_table(ptv::VariantSemigroup{a});
    const ptv::CayleyTable table_b = ptv::cayley_table(ptv::VariantSemigroup{b});
    std::vector<int> index_map(table_a.order());
    for (int i = 0; i < table_a.order(); ++i)
      index_map[i] = static_cast<int>(
          ptv::index_of(ptv::apply_iso(*witness, ptv::nth_transformation(a.degree(), i))));
    oracle_verdict = ptv::verify_isomorphism(table_a, table_b, index_map) ? "PASS" : "FAIL";
  }

  if (g.json) {
    nlohmann::json results{{"verdict", witness ? "ISOMORPHIC" : "NOT_ISOMORPHIC"},
                           {"type_a", ptv::format_type(ta)},
                           {"type_b", ptv::format_type(tb)},
                           {"oracle", oracle_verdict}};
    if (witness) {
      results["tau"] = ptv::format_permutation(witness->tau);
      results["pi"] = ptv::format_permutation(witness->pi);
      results["tau_images"] = witness->tau.images();
      results["pi_images"] = witness->pi.images();
    }
    emit_record(g, "iso", {{"a", lit_a}, {"b", lit_b}, {"n", a.degree()}}, std::move(results));
  } else {
    std::cout << "a: " << ptv::format_transformation(a) << "  type " << ptv::format_type(ta)
              << "\n"
              << "b: " << ptv::format_transformation(b) << "  type " << ptv::format_type(tb)
              << "\n";
    if (!witness) {
      std::cout << "verdict: NOT_ISOMORPHIC (types differ: " << ptv::format_type(ta) << " vs "
                << ptv::format_type(tb) << ")\n";
    } else {
      std::cout << "verdict: ISOMORPHIC\n"
                << "tau: " << ptv::format_permutation(witness->tau) << "\n"
                << "pi: " << ptv::format_permutation(witness->pi) << "\n"
                << "oracle: " << oracle_verdict << "\n";
    }
  }
  return oracle_verdict == "FAIL" ? kExitVerification : kExitSuccess;
}

int cmd_verify(const GlobalOptions& g, int n) {
  ptv::VerifyOptions options;
  options.seed = g.seed;
  options.max_exhaustive_degree = g.max_degree;
  options.node_budget = g.node_budget;
  const std::vector<ptv::CheckResult> results = ptv::run_verification(n, options);
  int passed = 0, failed = 0, skipped = 0;
  for (const ptv::CheckResult& r : results) {
    if (!r.applicable)
      ++skipped;
    else if (r.passed)
      ++passed;
    else
      ++failed;
  }
  if (g.json) {
    for (const ptv::CheckResult& r : results)
      emit_record(g, "verify", {{"n", n}},
                  {{"check", r.name},
                   {"applicable", r.applicable},
                   {"passed", r.applicable && r.passed},
                   {"detail", r.detail}});
    emit_record(g, "verify", {{"n", n}},
                {{"passed", passed}, {"failed", failed}, {"skipped", skipped}});
  } else {
    std::cout << "verification at degree " << n << ", seed " << g.seed << "\n";
    for (const ptv::CheckResult& r : results) {
      const char* status = !r.applicable ? "SKIP" : r.passed ? "PASS" : "FAIL";
      std::cout << status << " " << r.name << ": " << r.detail << "\n";
    }
    std::cout << "result: " << (failed == 0 ? "PASS" : "FAIL") << " (" << passed << " passed, "
              << failed << " failed, " << skipped << " skipped)\n";
  }
  return failed == 0 ? kExitSuccess : kExitVerification;
}

int cmd_cayley(const GlobalOptions& g, const std::string& literal, int n_override,
               const std::string& out_file, const std::string& labels_file) {
  const ptv::PartialTransformation a = parse_literal(literal, n_override);
  const ptv::CayleyTable table = ptv::cayley_table(ptv::VariantSemigroup{a});
  const std::string table_text = ptv::serialize_table(table);
  const std::string labels_text = ptv::serialize_labels(table);

  const auto write_file = [](const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
  };
  if (!labels_file.empty()) write_file(labels_file, labels_text);
  if (g.json) {
    emit_record(g, "cayley", {{"literal", literal}, {"n", a.degree()}},
                {{"order", table.order()},
                 {"table", table_text},
                 {"labels", table.labels()}});
  } else if (!out_file.empty()) {
    write_file(out_file, table_text);
  } else {
    std::cout << table_text;
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed (sandwich) multiplication on partial transformation semigroups"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json, "emit line-delimited JSON records instead of tables");
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--max-n", g.max_degree, "cap for exhaustive sweeps of the carrier");
  app.add_option("--nodes", g.node_budget, "node budget for the isomorphism search");

  std::string literal, literal_b, out_file, labels_file;
  int n_override = 0;
  int degree = 0;
  bool full = false;
  bool force_oracle = false;

  CLI::App* type_cmd = app.add_subcommand("type", "type vector, rank, and z of a transformation");
  type_cmd->add_option("literal", literal, "transformation literal, e.g. 2,2,-")->required();
  type_cmd->add_option("--n", n_override, "degree override (default: token count)");

  CLI::App* annih_cmd =
      app.add_subcommand("annih", "annihilator census: counted vs closed-form columns");
  annih_cmd->add_option("literal", literal, "sandwich element literal")->required();
  annih_cmd->add_option("--n", n_override, "degree override");

  CLI::App* classes_cmd =
      app.add_subcommand("classes", "similarity classes of the variant by this sandwich");
  classes_cmd->add_option("literal", literal, "sandwich element literal")->required();
  classes_cmd->add_option("--n", n_override, "degree override");
  classes_cmd->add_flag("--full", full, "list every class with its members");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "catalogue of all variant types at a degree");
  classify_cmd->add_option("n", degree, "degree")->required();

  CLI::App* iso_cmd =
      app.add_subcommand("iso", "construct an isomorphism between two variants, or refuse");
  iso_cmd->add_option("a", literal, "first sandwich literal")->required();
  iso_cmd->add_option("b", literal_b, "second sandwich literal")->required();
  iso_cmd->add_option("--n", n_override, "degree override");
  iso_cmd->add_flag("--oracle", force_oracle,
                    "confirm against the full multiplication table (automatic for degree <= 2)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suite at a degree");
  verify_cmd->add_option("n", degree, "degree")->required();

  CLI::App* cayley_cmd =
      app.add_subcommand("cayley", "export the variant's multiplication table");
  cayley_cmd->add_option("literal", literal, "sandwich element literal")->required();
  cayley_cmd->add_option("--n", n_override, "degree override");
  cayley_cmd->add_option("--out", out_file, "write the table text here instead of stdout");
  cayley_cmd->add_option("--labels", labels_file, "write the element label sidecar here");

  for (CLI::App* sub : {type_cmd, annih_cmd, classes_cmd, classify_cmd, iso_cmd, verify_cmd,
                        cayley_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }

  try {
    if (app.got_subcommand(type_cmd)) return cmd_type(g, literal, n_override);
    if (app.got_subcommand(annih_cmd)) return cmd_annih(g, literal, n_override);
    if (app.got_subcommand(classes_cmd)) return cmd_classes(g, literal, n_override, full);
    if (app.got_subcommand(classify_cmd)) return cmd_classify(g, degree);
    if (app.got_subcommand(iso_cmd)) return cmd_iso(g, literal, literal_b, n_override, force_oracle);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(g, degree);
    if (app.got_subcommand(cayley_cmd))
      return cmd_cayley(g, literal, n_override, out_file, labels_file);
  } catch (const ptv::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ptv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
