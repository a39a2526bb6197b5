#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzymine/miner.hpp"
#include "fuzzymine/rules.hpp"
#include "fuzzymine/taxonomy.hpp"

namespace fuzzymine {

/// Everything a run produces, as handed to the renderers.
struct RunOutput {
  const MiningResult& result;
  const std::vector<AssociationRule>& rules;
  const Taxonomy& taxonomy;
  RuleMode rule_mode = RuleMode::SingleConsequent;
};

/// Numbers appear twice: "support" is the 2-decimal rendering and
/// "support_exact" the reduced "num/den" string.
nlohmann::ordered_json to_json(const RunOutput& run);
nlohmann::ordered_json to_json(const AssociationRule& rule);

void write_json(std::ostream& os, const RunOutput& run);
void write_table(std::ostream& os, const RunOutput& run);
void write_csv(std::ostream& os, const RunOutput& run);

/// Step-by-step report: qualified set, grouped transactions per level, each
/// (level, size) stage with fuzzy sets and pruning, rule confidences and
/// divergence notes.
void write_trace(std::ostream& os, const RunOutput& run);

/// One grouped transaction: `T7<TAB>(2**, 1) (3**, 3) (4**, 1)`.
std::string render_grouped(const GroupedTransaction& g);

}  // namespace fuzzymine
