#include "fuzzymine/rules.hpp"

#include <algorithm>
#include <tuple>

#include "fuzzymine/error.hpp"

namespace fuzzymine {

namespace {

void check_split(const Itemset& a, const Itemset& b) {
  if (a.level() != b.level())
    throw Error(ErrorKind::InvalidCode, a.str() + " and " + b.str() + " are at different levels");
  for (const auto& code : b.members())
    if (a.contains(code)) throw Error(ErrorKind::InvalidCode, a.str() + " and " + b.str() + " overlap");
}

Fraction checked_ratio(const Itemset& a, const Fraction& whole, const Fraction& part) {
  if (part.is_zero()) throw Error(ErrorKind::ZeroAntecedentSupport, a.str());
  return whole / part;
}

/// Non-empty proper subsets of `s` to use as antecedents.
std::vector<Itemset> antecedents(const Itemset& s, RuleMode mode) {
  std::vector<Itemset> out;
  const auto& members = s.members();
  const std::size_t n = members.size();
  if (mode == RuleMode::SingleConsequent) {
    for (std::size_t skip = 0; skip < n; ++skip) {
      std::vector<ItemCode> rest;
      for (std::size_t i = 0; i < n; ++i)
        if (i != skip) rest.push_back(members[i]);
      out.emplace_back(std::move(rest));
    }
  } else {
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      std::vector<ItemCode> part;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) part.push_back(members[i]);
      out.emplace_back(std::move(part));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Itemset complement(const Itemset& whole, const Itemset& part) {
  std::vector<ItemCode> rest;
  for (const auto& code : whole.members())
    if (!part.contains(code)) rest.push_back(code);
  return Itemset(std::move(rest));
}

}  // namespace

Fraction confidence(const Itemset& a, const Itemset& b, const TransactionSet& m) {
  check_split(a, b);
  auto part = support(a, m);
  return checked_ratio(a, support(united(a, b), m), part);
}

std::vector<AssociationRule> generate_rules(const MiningResult& result, const TransactionSet& m,
                                            const Fraction& min_conf, RuleMode mode) {
  return generate_rules(result, m, min_conf, {}, mode);
}

std::vector<AssociationRule> generate_rules(const MiningResult& result, const TransactionSet& m,
                                            const Fraction& min_conf, const std::map<int, Fraction>& per_level,
                                            RuleMode mode) {
  std::vector<AssociationRule> rules;
  std::map<int, std::vector<GroupedTransaction>> grouped;
  for (const auto& [key, table] : result.tables) {
    const auto [level, size] = key;
    if (size < 2) continue;
    auto threshold = per_level.contains(level) ? per_level.at(level) : min_conf;
    auto& level_groups = grouped[level];
    if (level_groups.empty() && !m.empty()) level_groups = group_all(m, level);

    for (const auto& row : table.rows) {
      for (auto& a : antecedents(row.itemset, mode)) {
        auto b = complement(row.itemset, a);
        // row.support was computed over the same M, so it is support(a u b)
        auto a_support = support(a, level_groups);
        auto conf = checked_ratio(a, row.support, a_support);
        if (conf < threshold) continue;
        rules.push_back({std::move(a), std::move(b), row.support, std::move(a_support), std::move(conf), level});
      }
    }
  }
  std::stable_sort(rules.begin(), rules.end(), [](const AssociationRule& x, const AssociationRule& y) {
    auto key = [](const AssociationRule& r) {
      return std::tuple(r.level, r.antecedent.size() + r.consequent.size());
    };
    if (key(x) != key(y)) return key(x) < key(y);
    auto ux = united(x.antecedent, x.consequent);
    auto uy = united(y.antecedent, y.consequent);
    if (ux != uy) return ux < uy;
    return x.antecedent < y.antecedent;
  });
  return rules;
}

namespace {

std::string join_names(const Itemset& s, const Taxonomy& taxonomy) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " ∧ ";
    out += taxonomy.name_of(s.members()[i]);
  }
  return out;
}

}  // namespace

std::string render_rule(const AssociationRule& rule, const Taxonomy& taxonomy, RuleStyle style) {
  std::string body;
  if (style == RuleStyle::Names) {
    body = join_names(rule.antecedent, taxonomy) + " => " + join_names(rule.consequent, taxonomy);
  } else {
    for (const auto* s : {&rule.antecedent, &rule.consequent})
      for (const auto& code : s->members()) taxonomy.name_of(code);
    body = rule.antecedent.str() + " => " + rule.consequent.str();
  }
  return body + "  sup=" + rule.support.to_decimal(2) + " conf=" + rule.confidence.to_decimal(2);
}

}  // namespace fuzzymine
