#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzymine/fraction.hpp"
#include "fuzzymine/membership.hpp"
#include "fuzzymine/taxonomy.hpp"
#include "fuzzymine/transactions.hpp"

namespace fuzzymine {

/// Minimum support per level, with optional per-(level, size) overrides.
/// Lookup order: (k, p) override, then level k, then the all-levels fallback.
class MinSupport {
 public:
  void set_level(int level, Fraction alpha);
  void set(int level, int size, Fraction alpha);
  void set_fallback(Fraction alpha);

  /// Applies a comma-separated list of `k=v`, `k.p=v` or bare `v` entries.
  /// Throws Error(ConfigError) on malformed input.
  void apply(std::string_view spec);

  std::optional<Fraction> find(int level, int size) const;
  /// Throws Error(ConfigError) when no value covers (level, size).
  Fraction at(int level, int size) const;

  /// Every configured value, for validation and echoing.
  std::vector<std::pair<std::string, Fraction>> entries() const;

 private:
  std::map<int, Fraction> per_level_;
  std::map<std::pair<int, int>, Fraction> per_size_;
  std::optional<Fraction> fallback_;
};

/// Expected frequent rows to diff a run against (e.g. published tables).
struct ReferenceTable {
  int level = 0;
  int size = 0;
  std::vector<std::pair<Itemset, Fraction>> rows;
};

struct MiningConfig {
  int gamma = 1;
  MinSupport min_support;
  std::optional<int> max_p;
  std::optional<int> max_level;
  bool parent_filter = true;
  bool dedupe_items = false;
  Fraction min_confidence{1, 2};
  std::map<int, Fraction> min_confidence_per_level;
  /// When set, mine() records every disagreement in divergence_notes.
  std::optional<std::vector<ReferenceTable>> reference;

  /// Throws Error(ConfigError) on gamma < 1, alpha <= 0, confidence outside
  /// [0, 1], or non-positive caps.
  void validate() const;
  Fraction min_confidence_for(int level) const;
};

struct SupportRow {
  Itemset itemset;
  Fraction support;
};

/// L_p^k: frequent p-itemsets at level k, sorted by itemset.
struct FrequentItemsetTable {
  int level = 0;
  int size = 0;
  Fraction alpha;
  std::vector<SupportRow> rows;

  bool empty() const noexcept { return rows.empty(); }
  const SupportRow* find(const Itemset& s) const;
};

/// One (level, size) pass: every candidate evaluated, frequent or not.
struct MiningStage {
  int level = 0;
  int size = 0;
  Fraction alpha;
  std::vector<SupportRow> frequent;
  std::vector<SupportRow> pruned;
};

struct MiningResult {
  MiningConfig config;
  TransactionSet qualified;
  std::size_t qualified_count = 0;
  /// Non-empty tables keyed by (level, size).
  std::map<std::pair<int, int>, FrequentItemsetTable> tables;
  /// Every stage in execution order, including ones that ended empty.
  std::vector<MiningStage> stages;
  std::vector<std::string> divergence_notes;

  const FrequentItemsetTable* table(int level, int size) const;
};

/// Candidate 1-itemsets at level k: the level-k groups occurring in `m`,
/// restricted to children of `previous` rows when parent filtering is on
/// and k > 1. Throws MissingParentTable when that table is needed but null.
std::vector<Itemset> level_candidates_1(const TransactionSet& m, int k,
                                        const FrequentItemsetTable* previous,
                                        const MiningConfig& cfg);

/// Apriori join of l_prev with itself, keeping only p-itemsets whose every
/// (p-1)-subset is a row of l_prev.
std::vector<Itemset> generate_candidates(const FrequentItemsetTable& l_prev);

/// Rows with support >= alpha. Rejected candidates go to `pruned` if given.
FrequentItemsetTable filter_frequent(std::span<const Itemset> candidates,
                                     std::span<const GroupedTransaction> grouped, const Fraction& alpha,
                                     std::vector<SupportRow>* pruned = nullptr);
FrequentItemsetTable filter_frequent(std::span<const Itemset> candidates, const TransactionSet& m,
                                     const Fraction& alpha);

MiningResult mine(const MiningConfig& cfg, const Taxonomy& taxonomy, const TransactionSet& raw);

/// Exhaustive reference path: scores every p-subset of `universe`.
/// Throws UniverseTooLarge when C(|universe|, p) exceeds kBruteForceLimit.
inline constexpr std::uint64_t kBruteForceLimit = 1'000'000;
FrequentItemsetTable brute_force_frequent(const TransactionSet& m, int k, int p, const Fraction& alpha,
                                          std::span<const ItemCode> universe);

/// Compares `result` with reference tables; one human-readable line per
/// missing, extra or mismatched row.
std::vector<std::string> diff_against_reference(const MiningResult& result,
                                                std::span<const ReferenceTable> reference);

}  // namespace fuzzymine
