#pragma once

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzymine {

/// A node of the concept hierarchy, written as a fixed-width string of
/// branch digits padded with '*': "2**" is level 1, "41*" level 2, "411"
/// level 3 in a depth-3 taxonomy. The first k digits name the level-k
/// ancestor.
class ItemCode {
 public:
  /// Throws Error(InvalidCode) unless `text` has exactly `depth` symbols,
  /// each 1-9 or '*', prefix-shaped, with at least one digit.
  static ItemCode parse(std::string_view text, int depth);

  const std::string& str() const noexcept { return text_; }
  int level() const noexcept { return level_; }
  int depth() const noexcept { return static_cast<int>(text_.size()); }
  bool is_leaf() const noexcept { return level_ == depth(); }

  friend bool operator==(const ItemCode&, const ItemCode&) = default;
  friend auto operator<=>(const ItemCode& a, const ItemCode& b) { return a.text_ <=> b.text_; }

 private:
  ItemCode(std::string text, int level) : text_(std::move(text)), level_(level) {}
  std::string text_;
  int level_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ItemCode& code);

/// The level-k ancestor: first k symbols kept, the rest replaced by '*'.
/// Throws Error(LevelOutOfRange) unless 1 <= k <= code.level().
ItemCode ancestor(const ItemCode& code, int k);

/// Immutable code <-> name table for every node of the hierarchy.
class Taxonomy {
 public:
  struct Entry {
    ItemCode code;
    std::string name;
  };

  int depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Entries in source order.
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  bool contains(const ItemCode& code) const;
  const std::string& name_of(const ItemCode& code) const;
  /// Entries one level below `code` whose ancestor is `code`, in code order.
  /// Throws Error(LevelOutOfRange) when `code` is a leaf-level code.
  std::vector<ItemCode> children(const ItemCode& code) const;
  std::vector<ItemCode> codes_at_level(int level) const;

  /// Parses a code against this taxonomy's depth.
  ItemCode parse(std::string_view text) const { return ItemCode::parse(text, depth_); }

 private:
  friend Taxonomy load_taxonomy(std::istream& source);

  int depth_ = 0;
  std::vector<Entry> entries_;
  std::map<ItemCode, std::size_t> by_code_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

/// Reads `code,name` lines. Blank lines and '#' comments are skipped and a
/// leading `code,name` header is optional. The depth is the longest code.
Taxonomy load_taxonomy(std::istream& source);
Taxonomy load_taxonomy_file(const std::filesystem::path& path);

}  // namespace fuzzymine
