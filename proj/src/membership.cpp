#include "fuzzymine/membership.hpp"

#include <algorithm>

#include "fuzzymine/error.hpp"

namespace fuzzymine {

Itemset::Itemset(std::vector<ItemCode> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorKind::InvalidCode, "empty itemset");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw Error(ErrorKind::InvalidCode, "repeated member in itemset " + str());
  for (const auto& m : members_)
    if (m.level() != members_.front().level())
      throw Error(ErrorKind::InvalidCode, "mixed levels in itemset " + str());
}

bool Itemset::contains(const ItemCode& code) const {
  return std::binary_search(members_.begin(), members_.end(), code);
}

std::string Itemset::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += members_[i].str();
  }
  return out + "}";
}

Itemset united(const Itemset& a, const Itemset& b) {
  std::vector<ItemCode> all;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(all));
  return Itemset(std::move(all));
}

int eta(const Transaction& t, const ItemCode& item) {
  for (const auto& i : t.items)
    if (i.level() >= item.level() && ancestor(i, item.level()) == item) return 1;
  return 0;
}

Fraction mu_single(const GroupedTransaction& t, const ItemCode& group) {
  if (group.level() != t.level)
    throw Error(ErrorKind::LevelOutOfRange,
                group.str() + " is not a level-" + std::to_string(t.level) + " group");
  int v = t.count_of(group);
  if (v == 0) return Fraction(0);
  return Fraction(v, t.card);
}

Fraction mu_itemset(const GroupedTransaction& t, const Itemset& s) {
  Fraction lowest = mu_single(t, s.members().front());
  for (std::size_t i = 1; i < s.size() && !lowest.is_zero(); ++i)
    lowest = std::min(lowest, mu_single(t, s.members()[i]));
  return lowest;
}

std::vector<GroupedTransaction> group_all(const TransactionSet& m, int k) {
  std::vector<GroupedTransaction> out;
  out.reserve(m.size());
  for (const auto& t : m.transactions) out.push_back(group_at_level(t, k));
  return out;
}

Fraction support(const Itemset& s, std::span<const GroupedTransaction> grouped) {
  Fraction total;
  for (const auto& t : grouped) total += mu_itemset(t, s);
  return total;
}

Fraction support(const Itemset& s, const TransactionSet& m) {
  if (!m.is_qualified())
    throw Error(ErrorKind::ConfigError, "support needs a qualified transaction set");
  auto grouped = group_all(m, s.level());
  return support(s, grouped);
}

std::vector<std::pair<std::string, Fraction>> fuzzy_set(const Itemset& s,
                                                        std::span<const GroupedTransaction> grouped) {
  std::vector<std::pair<std::string, Fraction>> out;
  for (const auto& t : grouped) {
    auto mu = mu_itemset(t, s);
    if (!mu.is_zero()) out.emplace_back(t.id, std::move(mu));
  }
  return out;
}

}  // namespace fuzzymine
