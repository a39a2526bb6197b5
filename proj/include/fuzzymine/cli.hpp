#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "fuzzymine/miner.hpp"
#include "fuzzymine/rules.hpp"

namespace fuzzymine::cli {

enum class OutputFormat { Table, Json, Csv };

struct RunSpec {
  std::filesystem::path taxonomy_path;
  std::filesystem::path transactions_path;
  MiningConfig config;
  OutputFormat format = OutputFormat::Table;
  /// Replaces the formatted output with the step-by-step report.
  bool trace = false;
  RuleMode rule_mode = RuleMode::SingleConsequent;
  std::optional<std::filesystem::path> out;
};

/// Loads, mines, derives rules and writes the result. Returns 0 on success;
/// otherwise prints one `error: ...` diagnostic to `err` and returns 1.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Parses command-line flags (and an optional --config file) and calls
/// run(). Flag errors return CLI11's non-zero exit code; --help returns 0.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fuzzymine::cli
