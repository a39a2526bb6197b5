#include "fuzzymine/miner.hpp"

#include <algorithm>
#include <set>

#include "fuzzymine/error.hpp"
#include "text_util.hpp"

namespace fuzzymine {

// ---------------------------------------------------------------------------
// MinSupport

void MinSupport::set_level(int level, Fraction alpha) { per_level_[level] = std::move(alpha); }

void MinSupport::set(int level, int size, Fraction alpha) { per_size_[{level, size}] = std::move(alpha); }

void MinSupport::set_fallback(Fraction alpha) { fallback_ = std::move(alpha); }

namespace {

int parse_positive_int(std::string_view text, std::string_view what) {
  text = detail::trim(text);
  int value = 0;
  if (text.empty()) throw Error(ErrorKind::ConfigError, "missing " + std::string(what));
  for (char c : text) {
    if (c < '0' || c > '9' || value > 100000)
      throw Error(ErrorKind::ConfigError, "bad " + std::string(what) + " '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  if (value < 1) throw Error(ErrorKind::ConfigError, std::string(what) + " must be at least 1");
  return value;
}

}  // namespace

void MinSupport::apply(std::string_view spec) {
  for (auto entry : detail::split_fields(spec)) {
    if (entry.empty()) continue;
    auto eq = entry.find('=');
    if (eq == std::string_view::npos) {
      set_fallback(Fraction::parse(entry));
      continue;
    }
    auto key = detail::trim(entry.substr(0, eq));
    auto value = Fraction::parse(entry.substr(eq + 1));
    if (auto dot = key.find('.'); dot != std::string_view::npos) {
      set(parse_positive_int(key.substr(0, dot), "level"), parse_positive_int(key.substr(dot + 1), "size"),
          value);
    } else {
      set_level(parse_positive_int(key, "level"), value);
    }
  }
}

std::optional<Fraction> MinSupport::find(int level, int size) const {
  if (auto it = per_size_.find({level, size}); it != per_size_.end()) return it->second;
  if (auto it = per_level_.find(level); it != per_level_.end()) return it->second;
  return fallback_;
}

Fraction MinSupport::at(int level, int size) const {
  if (auto alpha = find(level, size)) return *alpha;
  throw Error(ErrorKind::ConfigError, "no minimum support for level " + std::to_string(level) +
                                          ", size " + std::to_string(size));
}

std::vector<std::pair<std::string, Fraction>> MinSupport::entries() const {
  std::vector<std::pair<std::string, Fraction>> out;
  if (fallback_) out.emplace_back("*", *fallback_);
  for (const auto& [k, a] : per_level_) out.emplace_back(std::to_string(k), a);
  for (const auto& [kp, a] : per_size_)
    out.emplace_back(std::to_string(kp.first) + "." + std::to_string(kp.second), a);
  return out;
}

// ---------------------------------------------------------------------------
// MiningConfig

void MiningConfig::validate() const {
  if (gamma < 1) throw Error(ErrorKind::ConfigError, "gamma must be at least 1");
  for (const auto& [key, alpha] : min_support.entries())
    if (alpha <= Fraction(0))
      throw Error(ErrorKind::ConfigError, "minimum support for " + key + " must be positive");
  if (max_p && *max_p < 1) throw Error(ErrorKind::ConfigError, "max-p must be at least 1");
  if (max_level && *max_level < 1) throw Error(ErrorKind::ConfigError, "max-level must be at least 1");
  auto check_conf = [](const Fraction& c) {
    if (c > Fraction(1)) throw Error(ErrorKind::ConfigError, "minimum confidence must lie in [0, 1]");
  };
  check_conf(min_confidence);
  for (const auto& [level, c] : min_confidence_per_level) check_conf(c);
}

Fraction MiningConfig::min_confidence_for(int level) const {
  if (auto it = min_confidence_per_level.find(level); it != min_confidence_per_level.end())
    return it->second;
  return min_confidence;
}

const SupportRow* FrequentItemsetTable::find(const Itemset& s) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), s,
                             [](const SupportRow& row, const Itemset& key) { return row.itemset < key; });
  return it != rows.end() && it->itemset == s ? &*it : nullptr;
}

const FrequentItemsetTable* MiningResult::table(int level, int size) const {
  auto it = tables.find({level, size});
  return it == tables.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Level-wise search

std::vector<Itemset> level_candidates_1(const TransactionSet& m, int k,
                                        const FrequentItemsetTable* previous,
                                        const MiningConfig& cfg) {
  bool filter = cfg.parent_filter && k > 1;
  if (filter && previous == nullptr)
    throw Error(ErrorKind::MissingParentTable, "level " + std::to_string(k) + " needs the level " +
                                                   std::to_string(k - 1) + " 1-itemset table");
  std::set<ItemCode> groups;
  for (const auto& t : m.transactions)
    for (const auto& item : t.items) groups.insert(ancestor(item, k));

  std::vector<Itemset> out;
  for (const auto& g : groups) {
    if (filter && previous->find(Itemset{ancestor(g, k - 1)}) == nullptr) continue;
    out.push_back(Itemset{g});
  }
  return out;
}

std::vector<Itemset> generate_candidates(const FrequentItemsetTable& l_prev) {
  std::vector<Itemset> out;
  const auto& rows = l_prev.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& a = rows[i].itemset.members();
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& b = rows[j].itemset.members();
      // rows are sorted, so once the shared prefix breaks no later row matches
      if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
      std::vector<ItemCode> joined = a;
      joined.push_back(b.back());
      Itemset candidate(std::move(joined));

      bool closed = true;
      for (std::size_t drop = 0; drop < candidate.size() && closed; ++drop) {
        std::vector<ItemCode> subset;
        for (std::size_t x = 0; x < candidate.size(); ++x)
          if (x != drop) subset.push_back(candidate.members()[x]);
        closed = l_prev.find(Itemset(std::move(subset))) != nullptr;
      }
      if (closed) out.push_back(std::move(candidate));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FrequentItemsetTable filter_frequent(std::span<const Itemset> candidates,
                                     std::span<const GroupedTransaction> grouped, const Fraction& alpha,
                                     std::vector<SupportRow>* pruned) {
  if (alpha <= Fraction(0)) throw Error(ErrorKind::ConfigError, "minimum support must be positive");
  FrequentItemsetTable table;
  table.alpha = alpha;
  if (!candidates.empty()) {
    table.level = candidates.front().level();
    table.size = static_cast<int>(candidates.front().size());
  }
  for (const auto& c : candidates) {
    auto s = support(c, grouped);
    if (s >= alpha) {
      table.rows.push_back({c, std::move(s)});
    } else if (pruned) {
      pruned->push_back({c, std::move(s)});
    }
  }
  auto by_itemset = [](const SupportRow& x, const SupportRow& y) { return x.itemset < y.itemset; };
  std::sort(table.rows.begin(), table.rows.end(), by_itemset);
  if (pruned) std::sort(pruned->begin(), pruned->end(), by_itemset);
  return table;
}

FrequentItemsetTable filter_frequent(std::span<const Itemset> candidates, const TransactionSet& m,
                                     const Fraction& alpha) {
  if (candidates.empty()) return filter_frequent(candidates, std::span<const GroupedTransaction>{}, alpha);
  auto grouped = group_all(m, candidates.front().level());
  return filter_frequent(candidates, grouped, alpha);
}

MiningResult mine(const MiningConfig& cfg, const Taxonomy& taxonomy, const TransactionSet& raw) {
  cfg.validate();
  MiningResult result;
  result.config = cfg;
  result.qualified = qualify(cfg.dedupe_items ? deduplicate_items(raw) : raw, cfg.gamma);
  result.qualified_count = result.qualified.size();
  const auto& m = result.qualified;

  int last_level = taxonomy.depth();
  if (cfg.max_level) last_level = std::min(last_level, *cfg.max_level);

  std::optional<FrequentItemsetTable> parent;
  for (int k = 1; k <= last_level && !m.empty(); ++k) {
    auto grouped = group_all(m, k);
    auto candidates = level_candidates_1(m, k, parent ? &*parent : nullptr, cfg);

    MiningStage first{k, 1, cfg.min_support.at(k, 1), {}, {}};
    auto l1 = filter_frequent(candidates, grouped, first.alpha, &first.pruned);
    l1.level = k;
    l1.size = 1;
    first.frequent = l1.rows;
    result.stages.push_back(std::move(first));
    if (l1.empty()) break;
    result.tables.emplace(std::pair{k, 1}, l1);

    const FrequentItemsetTable* prev = &result.tables.at({k, 1});
    for (int p = 2; !cfg.max_p || p <= *cfg.max_p; ++p) {
      auto next = generate_candidates(*prev);
      if (next.empty()) break;
      MiningStage stage{k, p, cfg.min_support.at(k, p), {}, {}};
      auto lp = filter_frequent(next, grouped, stage.alpha, &stage.pruned);
      lp.level = k;
      lp.size = p;
      stage.frequent = lp.rows;
      result.stages.push_back(std::move(stage));
      if (lp.empty()) break;
      prev = &result.tables.emplace(std::pair{k, p}, std::move(lp)).first->second;
    }
    parent = std::move(l1);
  }

  if (cfg.reference) result.divergence_notes = diff_against_reference(result, *cfg.reference);
  return result;
}

// ---------------------------------------------------------------------------
// Oracle

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t value = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // value * (n - r + i) / i stays exact because value is C(n-r+i-1, i-1)
    value = value * (n - r + i) / i;
    if (value > cap) return cap + 1;
  }
  return value;
}

}  // namespace

FrequentItemsetTable brute_force_frequent(const TransactionSet& m, int k, int p, const Fraction& alpha,
                                          std::span<const ItemCode> universe) {
  std::vector<ItemCode> items(universe.begin(), universe.end());
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  for (const auto& item : items)
    if (item.level() != k)
      throw Error(ErrorKind::LevelOutOfRange, item.str() + " is not a level-" + std::to_string(k) + " code");
  if (p < 1) throw Error(ErrorKind::ConfigError, "itemset size must be at least 1");
  if (binomial_capped(items.size(), static_cast<std::uint64_t>(p), kBruteForceLimit) > kBruteForceLimit)
    throw Error(ErrorKind::UniverseTooLarge, std::to_string(items.size()) + " items choose " + std::to_string(p));

  FrequentItemsetTable table;
  table.level = k;
  table.size = p;
  table.alpha = alpha;
  if (static_cast<std::size_t>(p) > items.size()) return table;

  auto grouped = group_all(m, k);
  std::vector<std::size_t> pick(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
  const std::size_t n = items.size();
  while (true) {
    std::vector<ItemCode> members;
    for (auto i : pick) members.push_back(items[i]);
    Itemset s(std::move(members));
    auto value = support(s, grouped);
    if (value >= alpha) table.rows.push_back({std::move(s), std::move(value)});

    // next combination in lexicographic order
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == n - pick.size() + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return table;
}

// ---------------------------------------------------------------------------
// Reference comparison

std::vector<std::string> diff_against_reference(const MiningResult& result,
                                                std::span<const ReferenceTable> reference) {
  std::vector<std::string> notes;
  auto label = [](int k, int p) {
    return "level " + std::to_string(k) + " " + std::to_string(p) + "-itemsets";
  };
  auto describe = [](const Fraction& f) { return f.to_decimal(2) + " (" + f.exact_string() + ")"; };

  std::set<std::pair<int, int>> covered;
  for (const auto& ref : reference) {
    covered.insert({ref.level, ref.size});
    const auto* table = result.table(ref.level, ref.size);
    std::optional<Fraction> alpha = result.config.min_support.find(ref.level, ref.size);

    for (const auto& [itemset, printed] : ref.rows) {
      const SupportRow* row = table ? table->find(itemset) : nullptr;
      if (row) {
        if (row->support.to_decimal(2) != printed.to_decimal(2))
          notes.push_back(label(ref.level, ref.size) + " " + itemset.str() + ": reference lists " +
                          printed.to_decimal(2) + ", computed " + describe(row->support));
        continue;
      }
      auto actual = result.qualified.empty() ? Fraction(0) : support(itemset, result.qualified);
      std::string why = alpha && actual < *alpha ? ", below alpha " + alpha->to_decimal(2)
                                                 : ", not reached by the level-wise search";
      notes.push_back(label(ref.level, ref.size) + " " + itemset.str() + ": reference lists " +
                      printed.to_decimal(2) + ", computed " + describe(actual) + why);
    }

    if (table) {
      for (const auto& row : table->rows) {
        bool listed = std::any_of(ref.rows.begin(), ref.rows.end(),
                                  [&](const auto& r) { return r.first == row.itemset; });
        if (!listed)
          notes.push_back(label(ref.level, ref.size) + " " + row.itemset.str() + ": frequent with support " +
                          describe(row.support) + " but absent from the reference");
      }
    }
  }
  for (const auto& [key, table] : result.tables)
    if (!covered.contains(key))
      notes.push_back(label(key.first, key.second) + ": " + std::to_string(table.rows.size()) +
                      " frequent rows, no reference table");
  return notes;
}

}  // namespace fuzzymine
