#include "fuzzymine/transactions.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>

#include "fuzzymine/error.hpp"
#include "text_util.hpp"

namespace fuzzymine {

int GroupedTransaction::count_of(const ItemCode& group) const {
  auto it = std::lower_bound(groups.begin(), groups.end(), group,
                             [](const auto& entry, const ItemCode& g) { return entry.first < g; });
  return it != groups.end() && it->first == group ? it->second : 0;
}

namespace {

bool is_header_label(std::string_view field) {
  return detail::iequals(field, "id") || detail::iequals(field, "tid") ||
         detail::iequals(field, "trans_id");
}

}  // namespace

TransactionSet load_transactions(std::istream& source, const Taxonomy& taxonomy) {
  TransactionSet out;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (std::getline(source, raw)) {
    ++line_no;
    auto line = detail::strip_line(raw);
    if (line.empty()) continue;
    auto fields = detail::split_fields(line);
    auto id = fields.front();
    if (header_allowed && is_header_label(id)) {
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    if (id.empty()) throw Error(ErrorKind::EmptyTransaction, "missing transaction id", line_no);

    Transaction t{std::string(id), {}};
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto text = fields[i];
      if (text.empty()) {
        if (i + 1 == fields.size()) break;  // tolerate a trailing comma
        throw Error(ErrorKind::UnknownItem, "empty item in " + t.id, line_no);
      }
      std::optional<ItemCode> code;
      try {
        code = taxonomy.parse(text);
      } catch (const Error&) {
      }
      if (!code || !code->is_leaf() || !taxonomy.contains(*code))
        throw Error(ErrorKind::UnknownItem, "'" + std::string(text) + "' in " + t.id, line_no);
      t.items.push_back(*code);
    }
    if (t.items.empty()) throw Error(ErrorKind::EmptyTransaction, t.id, line_no);
    if (!seen.insert(t.id).second) throw Error(ErrorKind::DuplicateTransactionId, t.id, line_no);
    out.transactions.push_back(std::move(t));
  }
  return out;
}

TransactionSet load_transactions_file(const std::filesystem::path& path, const Taxonomy& taxonomy) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open transactions file " + path.string());
  return load_transactions(in, taxonomy);
}

TransactionSet qualify(const TransactionSet& d, int gamma) {
  if (gamma < 1) throw Error(ErrorKind::ConfigError, "gamma must be at least 1");
  TransactionSet m;
  m.role = SetRole::Qualified;
  m.gamma = gamma;
  for (const auto& t : d.transactions)
    if (card(t) <= static_cast<std::size_t>(gamma)) m.transactions.push_back(t);
  return m;
}

TransactionSet deduplicate_items(const TransactionSet& d) {
  TransactionSet out = d;
  for (auto& t : out.transactions) {
    std::vector<ItemCode> unique;
    for (const auto& item : t.items)
      if (std::find(unique.begin(), unique.end(), item) == unique.end()) unique.push_back(item);
    t.items = std::move(unique);
  }
  return out;
}

GroupedTransaction group_at_level(const Transaction& t, int k) {
  std::map<ItemCode, int> counts;
  for (const auto& item : t.items) ++counts[ancestor(item, k)];
  GroupedTransaction g;
  g.id = t.id;
  g.level = k;
  g.card = static_cast<int>(card(t));
  g.groups.assign(counts.begin(), counts.end());
  return g;
}

}  // namespace fuzzymine
