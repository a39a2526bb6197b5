#include "fuzzymine/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fuzzymine/error.hpp"
#include "fuzzymine/paper_fixture.hpp"
#include "fuzzymine/report.hpp"
#include "fuzzymine/taxonomy.hpp"
#include "fuzzymine/transactions.hpp"
#include "text_util.hpp"

namespace fuzzymine::cli {

namespace {

template <typename Load>
auto load_with_context(const std::filesystem::path& path, Load&& load) {
  try {
    return load();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::IoError) throw;
    throw Error(e.kind(), std::string(e.what()) + " [" + path.string() + "]", e.line());
  }
}

void emit(const RunSpec& spec, const RunOutput& output, std::ostream& os) {
  if (spec.trace) {
    write_trace(os, output);
    return;
  }
  switch (spec.format) {
    case OutputFormat::Json: write_json(os, output); break;
    case OutputFormat::Csv: write_csv(os, output); break;
    case OutputFormat::Table: write_table(os, output); break;
  }
}

/// `v` sets the global threshold, `k=v` a per-level one.
void apply_min_confidence(MiningConfig& cfg, std::string_view spec) {
  for (auto entry : detail::split_fields(spec)) {
    if (entry.empty()) continue;
    auto eq = entry.find('=');
    if (eq == std::string_view::npos) {
      cfg.min_confidence = Fraction::parse(entry);
      continue;
    }
    auto key = detail::trim(entry.substr(0, eq));
    int level = 0;
    for (char c : key) {
      if (c < '0' || c > '9') throw Error(ErrorKind::ConfigError, "bad confidence level '" + std::string(key) + "'");
      level = level * 10 + (c - '0');
    }
    if (key.empty() || level < 1) throw Error(ErrorKind::ConfigError, "bad confidence level '" + std::string(key) + "'");
    cfg.min_confidence_per_level[level] = Fraction::parse(entry.substr(eq + 1));
  }
}

}  // namespace

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    auto taxonomy = load_with_context(spec.taxonomy_path, [&] { return load_taxonomy_file(spec.taxonomy_path); });
    auto raw = load_with_context(spec.transactions_path,
                                 [&] { return load_transactions_file(spec.transactions_path, taxonomy); });
    auto result = mine(spec.config, taxonomy, raw);
    auto rules = generate_rules(result, result.qualified, spec.config.min_confidence,
                                spec.config.min_confidence_per_level, spec.rule_mode);
    RunOutput output{result, rules, taxonomy, spec.rule_mode};

    // render fully before touching the destination so failures leave no partial file
    std::ostringstream buffer;
    emit(spec, output, buffer);
    if (spec.out) {
      std::ofstream file(*spec.out, std::ios::binary);
      if (!file) throw Error(ErrorKind::IoError, "cannot write " + spec.out->string());
      file << buffer.str();
      if (!file) throw Error(ErrorKind::IoError, "failed writing " + spec.out->string());
    } else {
      out << buffer.str();
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mine multilevel fuzzy association rules from encoded transactions"};
  app.set_config("--config", "", "key = value file; command-line flags take precedence");

  RunSpec spec;
  std::string taxonomy, transactions;
  std::optional<int> gamma, max_p, max_level;
  std::vector<std::string> min_support;
  std::string min_confidence;
  bool no_parent_filter = false, dedupe = false, paper_mode = false;
  std::string format = "table", rule_mode = "single-consequent", out_path;

  app.add_option("--taxonomy", taxonomy, "code,name taxonomy file")->required();
  app.add_option("--transactions", transactions, "id, code, code... transaction file")->required();
  app.add_option("--gamma", gamma, "maximum items per qualified transaction");
  app.add_option("--min-support", min_support, "k=v, k.p=v or v (all levels); repeatable")->delimiter(';');
  app.add_option("--min-confidence", min_confidence, "v or k=v (per level); default 0.5");
  app.add_option("--max-p", max_p, "largest itemset size");
  app.add_option("--max-level", max_level, "deepest level to mine");
  app.add_flag("--no-parent-filter", no_parent_filter, "consider every level-k group, not only children of frequent parents");
  app.add_flag("--dedupe-items", dedupe, "count a repeated item once per transaction");
  app.add_option("--rule-mode", rule_mode, "single-consequent or all-partitions")
      ->check(CLI::IsMember({"single-consequent", "all-partitions"}));
  app.add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--trace", spec.trace, "print the step-by-step report instead of the result");
  app.add_flag("--paper-mode", paper_mode,
               "grocery example preset: gamma 5, alpha 1:2/1.1, 2:1, 3:0.33, max-p 3, three levels, reference diff");
  app.add_option("--out", out_path, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (paper_mode) spec.config = paper::mining_config();
    if (gamma) spec.config.gamma = *gamma;
    else if (!paper_mode) throw Error(ErrorKind::ConfigError, "--gamma is required unless --paper-mode is given");
    for (const auto& entry : min_support) spec.config.min_support.apply(entry);
    if (!min_confidence.empty()) apply_min_confidence(spec.config, min_confidence);
    if (max_p) spec.config.max_p = *max_p;
    if (max_level) spec.config.max_level = *max_level;
    if (no_parent_filter) spec.config.parent_filter = false;
    if (dedupe) spec.config.dedupe_items = true;
    spec.config.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  spec.taxonomy_path = taxonomy;
  spec.transactions_path = transactions;
  spec.rule_mode = rule_mode == "all-partitions" ? RuleMode::AllPartitions : RuleMode::SingleConsequent;
  spec.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Table;
  if (!out_path.empty()) spec.out = out_path;
  return run(spec, out, err);
}

}  // namespace fuzzymine::cli
