#include <gtest/gtest.h>

#include <sstream>

#include "fuzzymine/transactions.hpp"
#include "test_support.hpp"

namespace fuzzymine {
namespace {

using testing::code;
using testing::kind_of;

class GroceryTransactions : public ::testing::Test {
 protected:
  Taxonomy tax = testing::grocery_taxonomy();
  TransactionSet raw = testing::grocery_transactions(tax);

  const Transaction& by_id(const TransactionSet& set, const std::string& id) {
    for (const auto& t : set.transactions)
      if (t.id == id) return t;
    throw std::out_of_range(id);
  }

  static std::vector<std::string> ids(const TransactionSet& set) {
    std::vector<std::string> out;
    for (const auto& t : set.transactions) out.push_back(t.id);
    return out;
  }

  TransactionSet parse(const std::string& text) {
    std::istringstream in(text);
    return load_transactions(in, tax);
  }
};

TEST_F(GroceryTransactions, LoadsAllRows) {
  ASSERT_EQ(raw.size(), 12u);
  EXPECT_FALSE(raw.is_qualified());
  const auto& t1 = raw.transactions.front();
  EXPECT_EQ(t1.id, "T1");
  EXPECT_EQ(t1.items, (std::vector{code("222"), code("411"), code("211")}));
  EXPECT_EQ(card(by_id(raw, "T9")), 6u);
}

TEST_F(GroceryTransactions, CardCountsDuplicates) {
  EXPECT_EQ(card(by_id(raw, "T1")), 3u);
  EXPECT_EQ(card(by_id(raw, "T7")), 5u);
  EXPECT_EQ(card(by_id(raw, "T12")), 1u);
}

TEST_F(GroceryTransactions, LoadErrors) {
  EXPECT_EQ(kind_of([&] { parse("TX, 999\n"); }), ErrorKind::UnknownItem);
  EXPECT_EQ(kind_of([&] { parse("TX, 41*\n"); }), ErrorKind::UnknownItem);  // not a leaf
  EXPECT_EQ(kind_of([&] { parse("TX, 12\n"); }), ErrorKind::UnknownItem);
  EXPECT_EQ(kind_of([&] { parse("T1, 111\nT1, 122\n"); }), ErrorKind::DuplicateTransactionId);
  EXPECT_EQ(kind_of([&] { parse("T1\n"); }), ErrorKind::EmptyTransaction);
  EXPECT_EQ(kind_of([&] { parse("T1,\n"); }), ErrorKind::EmptyTransaction);
  try {
    parse("# header comment\nT1, 111\nT2, 111, 998\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST_F(GroceryTransactions, ToleratesHeaderWhitespaceAndTrailingComma) {
  auto set = parse("id, items\n  T1 ,111,  122 ,\n\nT2,111\n");
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set.transactions[0].items.size(), 2u);
}

TEST_F(GroceryTransactions, QualifyAtGammaFive) {
  auto m = qualify(raw, 5);
  EXPECT_TRUE(m.is_qualified());
  EXPECT_EQ(m.gamma, 5);
  EXPECT_EQ(ids(m), (std::vector<std::string>{"T1", "T2", "T3", "T5", "T6", "T7", "T8", "T10", "T11", "T12"}));
}

TEST_F(GroceryTransactions, QualifyExtremes) {
  EXPECT_EQ(ids(qualify(raw, 1)), std::vector<std::string>{"T12"});
  EXPECT_EQ(qualify(raw, 6).size(), 12u);
  EXPECT_EQ(qualify(raw, 100).size(), 12u);
  EXPECT_TRUE(qualify(TransactionSet{}, 3).empty());
  EXPECT_EQ(kind_of([&] { qualify(raw, 0); }), ErrorKind::ConfigError);
}

TEST_F(GroceryTransactions, GroupsAtEachLevel) {
  auto g1 = group_at_level(by_id(raw, "T1"), 1);
  EXPECT_EQ(g1.card, 3);
  EXPECT_EQ(g1.groups, (std::vector<std::pair<ItemCode, int>>{{code("2**"), 2}, {code("4**"), 1}}));

  auto g7 = group_at_level(by_id(raw, "T7"), 1);
  EXPECT_EQ(g7.card, 5);
  EXPECT_EQ(g7.groups,
            (std::vector<std::pair<ItemCode, int>>{{code("2**"), 1}, {code("3**"), 3}, {code("4**"), 1}}));

  // 311 appears twice in T7
  auto g7leaf = group_at_level(by_id(raw, "T7"), 3);
  EXPECT_EQ(g7leaf.card, 5);
  EXPECT_EQ(g7leaf.count_of(code("311")), 2);
  EXPECT_EQ(g7leaf.count_of(code("412")), 1);
  EXPECT_EQ(g7leaf.count_of(code("221")), 1);
  EXPECT_EQ(g7leaf.count_of(code("322")), 1);
  EXPECT_EQ(g7leaf.groups.size(), 4u);
  EXPECT_EQ(g7leaf.count_of(code("111")), 0);
}

TEST_F(GroceryTransactions, DeduplicateCollapsesRepeats) {
  auto deduped = deduplicate_items(raw);
  EXPECT_EQ(card(by_id(deduped, "T7")), 4u);
  EXPECT_EQ(card(by_id(deduped, "T1")), 3u);
  // T7 is the only basket with a repeat; it drops from 5 to 4 items
  EXPECT_EQ(qualify(deduped, 4).size(), qualify(raw, 4).size() + 1);
}

}  // namespace
}  // namespace fuzzymine
