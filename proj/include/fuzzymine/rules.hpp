#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuzzymine/fraction.hpp"
#include "fuzzymine/membership.hpp"
#include "fuzzymine/miner.hpp"
#include "fuzzymine/taxonomy.hpp"

namespace fuzzymine {

struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  /// Support of antecedent and consequent together.
  Fraction support;
  Fraction antecedent_support;
  Fraction confidence;
  int level = 0;
};

enum class RuleMode { SingleConsequent, AllPartitions };
enum class RuleStyle { Codes, Names };

/// support(a u b) / support(a). Throws InvalidCode when a and b overlap or
/// sit at different levels, ZeroAntecedentSupport when support(a) is 0.
Fraction confidence(const Itemset& a, const Itemset& b, const TransactionSet& m);

/// Rules from every frequent itemset with two or more members, keeping those
/// with confidence >= min_conf. Ordered by level, itemset size, itemset and
/// antecedent.
std::vector<AssociationRule> generate_rules(const MiningResult& result, const TransactionSet& m,
                                            const Fraction& min_conf, RuleMode mode);
/// Per-level thresholds: `per_level` entries override `min_conf`.
std::vector<AssociationRule> generate_rules(const MiningResult& result, const TransactionSet& m,
                                            const Fraction& min_conf, const std::map<int, Fraction>& per_level,
                                            RuleMode mode);

/// `{21*, 22*} => {41*}  sup=1.03 conf=1.00`, or with names joined by " ∧ ".
/// Throws UnknownCode when a member is missing from the taxonomy.
std::string render_rule(const AssociationRule& rule, const Taxonomy& taxonomy, RuleStyle style);

}  // namespace fuzzymine
