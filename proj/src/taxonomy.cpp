#include "fuzzymine/taxonomy.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "fuzzymine/error.hpp"
#include "text_util.hpp"

namespace fuzzymine {

ItemCode ItemCode::parse(std::string_view text, int depth) {
  auto fail = [&](const std::string& why) -> ItemCode {
    throw Error(ErrorKind::InvalidCode, "'" + std::string(text) + "': " + why);
  };
  if (text.empty()) return fail("empty code");
  if (depth < 1) return fail("taxonomy depth must be at least 1");
  if (static_cast<int>(text.size()) != depth)
    return fail("expected " + std::to_string(depth) + " symbols, got " + std::to_string(text.size()));

  int level = 0;
  bool seen_star = false;
  for (char c : text) {
    if (c == '*') {
      seen_star = true;
    } else if (c >= '1' && c <= '9') {
      if (seen_star) return fail("digit after '*'");
      ++level;
    } else {
      return fail(std::string("symbol '") + c + "' is not 1-9 or '*'");
    }
  }
  if (level == 0) return fail("all-wildcard code");
  return ItemCode(std::string(text), level);
}

std::ostream& operator<<(std::ostream& os, const ItemCode& code) { return os << code.str(); }

ItemCode ancestor(const ItemCode& code, int k) {
  if (k < 1 || k > code.level())
    throw Error(ErrorKind::LevelOutOfRange,
                "ancestor level " + std::to_string(k) + " of " + code.str());
  std::string text = code.str();
  std::fill(text.begin() + k, text.end(), '*');
  return ItemCode::parse(text, code.depth());
}

bool Taxonomy::contains(const ItemCode& code) const { return by_code_.contains(code); }

const std::string& Taxonomy::name_of(const ItemCode& code) const {
  auto it = by_code_.find(code);
  if (it == by_code_.end()) throw Error(ErrorKind::UnknownCode, code.str());
  return entries_[it->second].name;
}

std::vector<ItemCode> Taxonomy::children(const ItemCode& code) const {
  if (code.level() >= depth_)
    throw Error(ErrorKind::LevelOutOfRange, code.str() + " is at leaf level");
  std::vector<ItemCode> out;
  // by_code_ is ordered, so the result comes out sorted.
  for (const auto& [candidate, idx] : by_code_) {
    if (candidate.level() == code.level() + 1 && ancestor(candidate, code.level()) == code)
      out.push_back(candidate);
  }
  return out;
}

std::vector<ItemCode> Taxonomy::codes_at_level(int level) const {
  std::vector<ItemCode> out;
  for (const auto& [code, idx] : by_code_)
    if (code.level() == level) out.push_back(code);
  return out;
}

Taxonomy load_taxonomy(std::istream& source) {
  struct Row {
    std::size_t line;
    std::string code;
    std::string name;
  };
  std::vector<Row> rows;
  std::string raw;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (std::getline(source, raw)) {
    ++line_no;
    auto line = detail::strip_line(raw);
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorKind::InvalidCode, "expected 'code,name'", line_no);
    auto code = detail::trim(line.substr(0, comma));
    auto name = detail::trim(line.substr(comma + 1));
    if (header_allowed && detail::iequals(code, "code")) {
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    if (name.empty()) throw Error(ErrorKind::InvalidCode, "empty name for " + std::string(code), line_no);
    rows.push_back({line_no, std::string(code), std::string(name)});
  }
  if (rows.empty()) throw Error(ErrorKind::InvalidCode, "taxonomy has no entries");

  Taxonomy tax;
  for (const auto& row : rows) tax.depth_ = std::max(tax.depth_, static_cast<int>(row.code.size()));

  for (const auto& row : rows) {
    ItemCode code = [&] {
      try {
        return ItemCode::parse(row.code, tax.depth_);
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidCode, e.what(), row.line);
      }
    }();
    if (tax.by_code_.contains(code))
      throw Error(ErrorKind::DuplicateCode, code.str(), row.line);
    if (tax.by_name_.contains(row.name))
      throw Error(ErrorKind::DuplicateName, row.name, row.line);
    tax.by_code_.emplace(code, tax.entries_.size());
    tax.by_name_.emplace(row.name, tax.entries_.size());
    tax.entries_.push_back({code, row.name});
  }

  for (std::size_t i = 0; i < tax.entries_.size(); ++i) {
    const auto& code = tax.entries_[i].code;
    if (code.level() == 1) continue;
    auto parent = ancestor(code, code.level() - 1);
    if (!tax.by_code_.contains(parent))
      throw Error(ErrorKind::MissingAncestor, code.str() + " has no entry for " + parent.str(),
                  rows[i].line);
  }
  return tax;
}

Taxonomy load_taxonomy_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open taxonomy file " + path.string());
  return load_taxonomy(in);
}

}  // namespace fuzzymine
