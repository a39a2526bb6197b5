#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzymine/fraction.hpp"
#include "fuzzymine/taxonomy.hpp"
#include "fuzzymine/transactions.hpp"

namespace fuzzymine {

/// Non-empty set of distinct codes sharing one taxonomy level, kept sorted.
class Itemset {
 public:
  /// Throws Error(InvalidCode) on an empty list, repeated members or mixed levels.
  explicit Itemset(std::vector<ItemCode> members);
  Itemset(std::initializer_list<ItemCode> members) : Itemset(std::vector<ItemCode>(members)) {}

  const std::vector<ItemCode>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  int level() const noexcept { return members_.front().level(); }
  bool contains(const ItemCode& code) const;

  /// "{21*, 22*}"
  std::string str() const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend auto operator<=>(const Itemset& a, const Itemset& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<ItemCode> members_;
};

/// Set union of two same-level itemsets.
Itemset united(const Itemset& a, const Itemset& b);

/// Boolean membership: 1 when some item of `t` falls under `item`.
int eta(const Transaction& t, const ItemCode& item);

/// v / card for `group` in `t`, or 0 when absent.
/// Throws LevelOutOfRange if `group` is not at t's grouping level.
Fraction mu_single(const GroupedTransaction& t, const ItemCode& group);

/// Minimum of mu_single over the members.
Fraction mu_itemset(const GroupedTransaction& t, const Itemset& s);

/// Every transaction of `m` grouped at level k, in order.
std::vector<GroupedTransaction> group_all(const TransactionSet& m, int k);

/// Fuzzy support: the sum of mu_itemset over the grouped transactions.
Fraction support(const Itemset& s, std::span<const GroupedTransaction> grouped);
/// Same, grouping `m` at s.level() on the fly. Throws ConfigError when `m`
/// has not been through qualify().
Fraction support(const Itemset& s, const TransactionSet& m);

/// The itemset as a fuzzy set over transactions: (id, membership) for every
/// transaction with non-zero membership, in input order.
std::vector<std::pair<std::string, Fraction>> fuzzy_set(const Itemset& s,
                                                        std::span<const GroupedTransaction> grouped);

}  // namespace fuzzymine
