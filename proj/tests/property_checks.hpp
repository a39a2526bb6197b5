#pragma once

// Randomised invariant checks shared by the gtest property suite and the
// acceptance binary. Each returns the list of violations found (empty on
// success) so callers can report them however they like.

#include <random>
#include <string>
#include <vector>

#include "fuzzymine/miner.hpp"
#include "fuzzymine/rules.hpp"
#include "test_support.hpp"

namespace fuzzymine::testing {

using Violations = std::vector<std::string>;

inline Fraction random_alpha(std::mt19937& rng) {
  static const Fraction choices[] = {Fraction(1, 5), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2),
                                     Fraction(2, 3), Fraction(1),    Fraction(3, 2), Fraction(2)};
  return choices[std::uniform_int_distribution<std::size_t>(0, std::size(choices) - 1)(rng)];
}

/// Random gamma, one random alpha per level (shared by all sizes).
inline MiningConfig random_config(std::mt19937& rng, bool parent_filter) {
  MiningConfig cfg;
  cfg.gamma = std::uniform_int_distribution<int>(1, 7)(rng);
  for (int k = 1; k <= 3; ++k) cfg.min_support.set_level(k, random_alpha(rng));
  cfg.parent_filter = parent_filter;
  return cfg;
}

inline std::string describe_rows(const FrequentItemsetTable* t) {
  if (!t) return "(none)";
  std::string out;
  for (const auto& row : t->rows) out += row.itemset.str() + "=" + row.support.exact_string() + " ";
  return out;
}

/// Level-wise mining with parent filtering off must equal exhaustive
/// enumeration for every (level, size) the level-wise search visits.
inline Violations check_oracle_equivalence(const RandomDataset& data, const MiningConfig& cfg) {
  Violations bad;
  auto result = mine(cfg, data.taxonomy, data.raw);
  int deepest = 0;
  for (const auto& s : result.stages) deepest = std::max(deepest, s.level);

  for (int k = 1; k <= deepest; ++k) {
    auto universe = data.taxonomy.codes_at_level(k);
    auto alpha = cfg.min_support.at(k, 1);
    for (int p = 1; p <= static_cast<int>(universe.size()); ++p) {
      auto brute = brute_force_frequent(result.qualified, k, p, alpha, universe);
      const auto* mined = result.table(k, p);
      bool same = brute.empty() ? mined == nullptr : mined && mined->rows.size() == brute.rows.size();
      if (same && mined) {
        for (std::size_t i = 0; i < brute.rows.size(); ++i)
          same = same && mined->rows[i].itemset == brute.rows[i].itemset &&
                 mined->rows[i].support == brute.rows[i].support;
      }
      if (!same)
        bad.push_back("level " + std::to_string(k) + " size " + std::to_string(p) + ": mined " +
                      describe_rows(mined) + "vs brute " + describe_rows(&brute));
      if (brute.empty() && !mined) break;
    }
  }
  // the level that stopped the descent really had no frequent singleton
  if (deepest > 0 && !result.table(deepest, 1)) {
    auto universe = data.taxonomy.codes_at_level(deepest);
    if (!brute_force_frequent(result.qualified, deepest, 1, cfg.min_support.at(deepest, 1), universe).empty())
      bad.push_back("descent stopped at level " + std::to_string(deepest) + " with frequent items left");
  }
  return bad;
}

/// support agrees with the raw-string oracle, and adding a member never
/// raises support.
inline Violations check_support_laws(const RandomDataset& data, int gamma, std::mt19937& rng) {
  Violations bad;
  auto m = qualify(data.raw, gamma);
  for (int k = 1; k <= 3; ++k) {
    auto codes = data.taxonomy.codes_at_level(k);
    std::shuffle(codes.begin(), codes.end(), rng);
    std::vector<ItemCode> members;
    Fraction previous(static_cast<std::int64_t>(m.size()));
    for (const auto& c : codes) {
      members.push_back(c);
      Itemset s(members);
      auto value = support(s, m);
      std::vector<std::string> texts;
      for (const auto& x : s.members()) texts.push_back(x.str());
      if (value != naive_support(texts, m)) bad.push_back("support mismatch for " + s.str());
      if (value > previous) bad.push_back("support grew when extending to " + s.str());
      if (value < Fraction(0) || value > Fraction(static_cast<std::int64_t>(m.size())))
        bad.push_back("support out of range for " + s.str());
      previous = value;
      if (members.size() == 4) break;
    }
  }
  return bad;
}

/// For every level, the supports of all occurring groups add up to |M|.
inline Violations check_normalization(const TransactionSet& m, const Taxonomy& taxonomy) {
  Violations bad;
  for (int k = 1; k <= taxonomy.depth(); ++k) {
    Fraction total;
    for (const auto& c : taxonomy.codes_at_level(k)) total += support(Itemset{c}, m);
    if (total != Fraction(static_cast<std::int64_t>(m.size())))
      bad.push_back("level " + std::to_string(k) + " sums to " + total.exact_string() + ", |M| = " +
                    std::to_string(m.size()));
  }
  return bad;
}

/// Every row's (p-1)-subsets sit in the (p-1) table with at least its support.
inline Violations check_downward_closure(const MiningResult& result) {
  Violations bad;
  for (const auto& [key, table] : result.tables) {
    if (key.second < 2) continue;
    const auto* below = result.table(key.first, key.second - 1);
    for (const auto& row : table.rows) {
      for (std::size_t drop = 0; drop < row.itemset.size(); ++drop) {
        std::vector<ItemCode> subset;
        for (std::size_t i = 0; i < row.itemset.size(); ++i)
          if (i != drop) subset.push_back(row.itemset.members()[i]);
        const auto* hit = below ? below->find(Itemset(subset)) : nullptr;
        if (!hit) bad.push_back(row.itemset.str() + " has an infrequent subset");
        else if (hit->support < row.support) bad.push_back(row.itemset.str() + " outweighs its subset");
      }
    }
  }
  return bad;
}

/// Stored confidence equals a from-scratch recomputation, lies in [0, 1],
/// and every rule comes from a frequent itemset.
inline Violations check_rules(const MiningResult& result) {
  Violations bad;
  const auto& m = result.qualified;
  auto all = generate_rules(result, m, Fraction(0), RuleMode::AllPartitions);
  for (const auto& r : all) {
    auto whole = united(r.antecedent, r.consequent);
    if (r.confidence * support(r.antecedent, m) != support(whole, m))
      bad.push_back("confidence identity fails for " + whole.str());
    if (r.confidence != confidence(r.antecedent, r.consequent, m)) bad.push_back("recomputed confidence differs");
    if (r.confidence < Fraction(0) || r.confidence > Fraction(1)) bad.push_back("confidence out of [0,1]");
    const auto* t = result.table(r.level, static_cast<int>(whole.size()));
    if (!t || !t->find(whole)) bad.push_back(whole.str() + " is not a frequent itemset");
  }
  for (const Fraction& threshold : {Fraction(0), Fraction(1, 2), Fraction(1)}) {
    auto all_at = generate_rules(result, m, threshold, RuleMode::AllPartitions);
    for (const auto& r : generate_rules(result, m, threshold, RuleMode::SingleConsequent)) {
      bool found = std::any_of(all_at.begin(), all_at.end(), [&](const AssociationRule& x) {
        return x.antecedent == r.antecedent && x.consequent == r.consequent;
      });
      if (!found) bad.push_back("single-consequent rule missing from all-partitions output");
    }
  }
  return bad;
}

/// qualify is idempotent and monotone in gamma; grouping conserves card.
inline Violations check_transaction_laws(const TransactionSet& raw) {
  Violations bad;
  auto ids = [](const TransactionSet& s) {
    std::vector<std::string> out;
    for (const auto& t : s.transactions) out.push_back(t.id);
    return out;
  };
  for (int gamma = 1; gamma <= 7; ++gamma) {
    auto once = qualify(raw, gamma);
    if (ids(qualify(once, gamma)) != ids(once)) bad.push_back("qualify not idempotent at " + std::to_string(gamma));
    auto wider = ids(qualify(raw, gamma + 1));
    for (const auto& id : ids(once))
      if (std::find(wider.begin(), wider.end(), id) == wider.end())
        bad.push_back("qualify not monotone at " + std::to_string(gamma));
  }
  for (const auto& t : raw.transactions) {
    for (int k = 1; k <= 3; ++k) {
      auto g = group_at_level(t, k);
      int sum = 0;
      for (const auto& [group, v] : g.groups) sum += v;
      if (sum != g.card || g.card != static_cast<int>(card(t))) bad.push_back(t.id + " loses items at level " + std::to_string(k));
    }
    auto unique = deduplicate_items(TransactionSet{{t}, SetRole::Raw, std::nullopt}).transactions.front();
    for (const auto& [group, v] : group_at_level(unique, 3).groups)
      if (v != 1) bad.push_back(t.id + " has a repeated leaf after dedupe");
  }
  return bad;
}

}  // namespace fuzzymine::testing
