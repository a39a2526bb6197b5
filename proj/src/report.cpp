#include "fuzzymine/report.hpp"

#include <algorithm>
#include <ostream>

namespace fuzzymine {

using nlohmann::ordered_json;

namespace {

ordered_json codes(const Itemset& s) {
  ordered_json out = ordered_json::array();
  for (const auto& c : s.members()) out.push_back(c.str());
  return out;
}

std::string_view mode_name(RuleMode mode) {
  return mode == RuleMode::SingleConsequent ? "single-consequent" : "all-partitions";
}

std::string space_joined(const Itemset& s) {
  std::string out;
  for (const auto& c : s.members()) {
    if (!out.empty()) out += ' ';
    out += c.str();
  }
  return out;
}

std::string row_list(const std::vector<SupportRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    if (!out.empty()) out += ", ";
    out += row.itemset.str() + "=" + row.support.to_decimal(2);
  }
  return out;
}

}  // namespace

ordered_json to_json(const AssociationRule& rule) {
  return ordered_json{
      {"level", rule.level},
      {"antecedent", codes(rule.antecedent)},
      {"consequent", codes(rule.consequent)},
      {"support", rule.support.to_decimal(2)},
      {"support_exact", rule.support.exact_string()},
      {"confidence", rule.confidence.to_decimal(2)},
      {"confidence_exact", rule.confidence.exact_string()},
  };
}

ordered_json to_json(const RunOutput& run) {
  const auto& result = run.result;
  const auto& cfg = result.config;

  ordered_json config{{"gamma", cfg.gamma}};
  ordered_json alphas = ordered_json::object();
  for (const auto& [key, alpha] : cfg.min_support.entries()) alphas[key] = alpha.exact_string();
  config["min_support"] = alphas;
  config["max_p"] = cfg.max_p ? ordered_json(*cfg.max_p) : ordered_json(nullptr);
  config["max_level"] = cfg.max_level ? ordered_json(*cfg.max_level) : ordered_json(nullptr);
  config["parent_filter"] = cfg.parent_filter;
  config["dedupe_items"] = cfg.dedupe_items;
  config["min_confidence"] = cfg.min_confidence.exact_string();
  ordered_json per_level = ordered_json::object();
  for (const auto& [level, c] : cfg.min_confidence_per_level) per_level[std::to_string(level)] = c.exact_string();
  config["min_confidence_per_level"] = per_level;
  config["rule_mode"] = mode_name(run.rule_mode);

  ordered_json qualified = ordered_json::array();
  for (const auto& t : result.qualified.transactions) qualified.push_back(t.id);

  ordered_json tables = ordered_json::array();
  for (const auto& [key, table] : result.tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows)
      rows.push_back({{"itemset", codes(row.itemset)},
                      {"support", row.support.to_decimal(2)},
                      {"support_exact", row.support.exact_string()}});
    tables.push_back({{"level", key.first},
                      {"size", key.second},
                      {"alpha", table.alpha.to_decimal(2)},
                      {"alpha_exact", table.alpha.exact_string()},
                      {"rows", rows}});
  }

  ordered_json rules = ordered_json::array();
  for (const auto& rule : run.rules) rules.push_back(to_json(rule));

  return ordered_json{{"qualified_count", result.qualified_count},
                      {"qualified", qualified},
                      {"config", config},
                      {"tables", tables},
                      {"rules", rules},
                      {"divergence_notes", result.divergence_notes}};
}

void write_json(std::ostream& os, const RunOutput& run) { os << to_json(run).dump(2) << '\n'; }

void write_table(std::ostream& os, const RunOutput& run) {
  const auto& result = run.result;
  os << "qualified transactions: " << result.qualified_count << " (gamma " << result.config.gamma << ")\n";
  for (const auto& [key, table] : result.tables) {
    os << "\nlevel " << key.first << ", " << key.second << "-itemsets (alpha " << table.alpha.to_decimal(2)
       << ")\n";
    for (const auto& row : table.rows) os << "  " << row.itemset.str() << "  " << row.support.to_decimal(2) << '\n';
  }
  os << "\nrules (" << mode_name(run.rule_mode) << "): " << run.rules.size() << '\n';
  for (const auto& rule : run.rules)
    os << "  [" << rule.level << "] " << render_rule(rule, run.taxonomy, RuleStyle::Codes) << '\n';
  if (!result.divergence_notes.empty()) {
    os << "\ndivergence notes:\n";
    for (const auto& note : result.divergence_notes) os << "  " << note << '\n';
  }
}

void write_csv(std::ostream& os, const RunOutput& run) {
  os << "kind,level,size,itemset,antecedent,consequent,support,support_exact,confidence,confidence_exact\n";
  for (const auto& [key, table] : run.result.tables)
    for (const auto& row : table.rows)
      os << "itemset," << key.first << ',' << key.second << ',' << space_joined(row.itemset) << ",,,"
         << row.support.to_decimal(2) << ',' << row.support.exact_string() << ",,\n";
  for (const auto& rule : run.rules)
    os << "rule," << rule.level << ',' << rule.antecedent.size() + rule.consequent.size() << ','
       << space_joined(united(rule.antecedent, rule.consequent)) << ',' << space_joined(rule.antecedent) << ','
       << space_joined(rule.consequent) << ',' << rule.support.to_decimal(2) << ',' << rule.support.exact_string()
       << ',' << rule.confidence.to_decimal(2) << ',' << rule.confidence.exact_string() << '\n';
}

std::string render_grouped(const GroupedTransaction& g) {
  std::string out = g.id + "\t";
  for (std::size_t i = 0; i < g.groups.size(); ++i) {
    if (i) out += ' ';
    out += "(" + g.groups[i].first.str() + ", " + std::to_string(g.groups[i].second) + ")";
  }
  return out;
}

void write_trace(std::ostream& os, const RunOutput& run) {
  const auto& result = run.result;
  const auto& m = result.qualified;

  os << "== Qualified transactions (gamma " << result.config.gamma << "): |M| = " << result.qualified_count << '\n';
  for (const auto& t : m.transactions) {
    os << t.id << '\t';
    for (std::size_t i = 0; i < t.items.size(); ++i) os << (i ? ", " : "") << t.items[i].str();
    os << '\n';
  }

  int current_level = 0;
  std::vector<GroupedTransaction> grouped;
  for (const auto& stage : result.stages) {
    if (stage.level != current_level) {
      current_level = stage.level;
      grouped = group_all(m, current_level);
      os << "\n== Level " << current_level << " grouped transactions\n";
      for (const auto& g : grouped) os << render_grouped(g) << '\n';
    }

    os << "\n-- level " << stage.level << ", " << stage.size << "-itemsets, alpha=" << stage.alpha.to_decimal(2)
       << '\n';
    std::vector<SupportRow> all = stage.frequent;
    all.insert(all.end(), stage.pruned.begin(), stage.pruned.end());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.itemset < b.itemset; });
    for (const auto& row : all) {
      os << "  " << row.itemset.str() << " = {";
      auto members = fuzzy_set(row.itemset, grouped);
      for (std::size_t i = 0; i < members.size(); ++i)
        os << (i ? ", " : "") << members[i].second.to_decimal(2) << '/' << members[i].first;
      os << "} = " << row.support.to_decimal(2) << " (" << row.support.exact_string() << ")\n";
    }
    os << "frequent: " << (stage.frequent.empty() ? "none" : row_list(stage.frequent)) << '\n';
    if (!stage.pruned.empty())
      os << "pruned (below alpha=" << stage.alpha.to_decimal(2) << "): " << row_list(stage.pruned) << '\n';
  }

  if (!run.rules.empty()) {
    os << "\n== Confidence (" << mode_name(run.rule_mode) << ")\n";
    for (const auto& rule : run.rules) {
      auto whole = united(rule.antecedent, rule.consequent);
      os << "Conf(" << rule.antecedent.str() << " => " << rule.consequent.str() << ") = Support" << whole.str()
         << " / Support" << rule.antecedent.str() << " = " << rule.support.to_decimal(2) << " / "
         << rule.antecedent_support.to_decimal(2) << " = " << rule.confidence.to_decimal(2) << " ("
         << rule.confidence.exact_string() << ")\n";
    }
  }

  if (!result.divergence_notes.empty()) {
    os << "\n== Divergence notes\n";
    for (const auto& note : result.divergence_notes) os << note << '\n';
  }
}

}  // namespace fuzzymine
