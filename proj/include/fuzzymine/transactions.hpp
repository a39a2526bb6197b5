#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzymine/taxonomy.hpp"

namespace fuzzymine {

struct Transaction {
  std::string id;
  /// Leaf codes in purchase order; repeats are kept.
  std::vector<ItemCode> items;
};

/// Number of items, duplicates included.
inline std::size_t card(const Transaction& t) { return t.items.size(); }

enum class SetRole { Raw, Qualified };

struct TransactionSet {
  std::vector<Transaction> transactions;
  SetRole role = SetRole::Raw;
  /// Threshold used by qualify(); empty for a raw set.
  std::optional<int> gamma;

  std::size_t size() const noexcept { return transactions.size(); }
  bool empty() const noexcept { return transactions.empty(); }
  bool is_qualified() const noexcept { return role == SetRole::Qualified; }
};

/// One transaction's items collapsed to their level-k ancestors.
struct GroupedTransaction {
  std::string id;
  int level = 0;
  /// (group, v) pairs sorted by group code; v counts repeats.
  std::vector<std::pair<ItemCode, int>> groups;
  int card = 0;

  /// v for `group`, or 0 when the group does not occur.
  int count_of(const ItemCode& group) const;
};

/// Parses `id, code, code, ...` lines against `taxonomy`. Blank lines and
/// '#' comment lines are skipped; a leading `id,...` header is optional.
/// Throws UnknownItem, DuplicateTransactionId or EmptyTransaction with the
/// offending line number.
TransactionSet load_transactions(std::istream& source, const Taxonomy& taxonomy);
TransactionSet load_transactions_file(const std::filesystem::path& path, const Taxonomy& taxonomy);

/// Keeps transactions with card(T) <= gamma, order preserved. gamma >= 1.
TransactionSet qualify(const TransactionSet& d, int gamma);

/// Collapses repeated codes within each transaction (first occurrence kept).
TransactionSet deduplicate_items(const TransactionSet& d);

/// Throws LevelOutOfRange when k is outside 1..depth of the items.
GroupedTransaction group_at_level(const Transaction& t, int k);

}  // namespace fuzzymine
