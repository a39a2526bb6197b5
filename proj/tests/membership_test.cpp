#include <gtest/gtest.h>

#include "fuzzymine/membership.hpp"
#include "test_support.hpp"

namespace fuzzymine {
namespace {

using testing::code;
using testing::kind_of;

class GroceryMembership : public ::testing::Test {
 protected:
  Taxonomy tax = testing::grocery_taxonomy();
  TransactionSet raw = testing::grocery_transactions(tax);
  TransactionSet m = qualify(raw, 5);

  const Transaction& tx(const std::string& id) {
    for (const auto& t : raw.transactions)
      if (t.id == id) return t;
    throw std::out_of_range(id);
  }

  Fraction sup(std::initializer_list<const char*> codes) {
    std::vector<ItemCode> members;
    for (auto c : codes) members.push_back(code(c));
    return support(Itemset(members), m);
  }
};

TEST_F(GroceryMembership, ItemsetValidation) {
  Itemset s{code("41*"), code("21*")};
  EXPECT_EQ(s.str(), "{21*, 41*}");
  EXPECT_EQ(s.level(), 2);
  EXPECT_EQ(kind_of([] { Itemset(std::vector<ItemCode>{}); }), ErrorKind::InvalidCode);
  EXPECT_EQ(kind_of([] { Itemset{code("21*"), code("21*")}; }), ErrorKind::InvalidCode);
  EXPECT_EQ(kind_of([] { Itemset{code("21*"), code("4**")}; }), ErrorKind::InvalidCode);
}

TEST_F(GroceryMembership, Eta) {
  EXPECT_EQ(eta(tx("T1"), code("2**")), 1);
  EXPECT_EQ(eta(tx("T1"), code("1**")), 0);
  EXPECT_EQ(eta(tx("T7"), code("311")), 1);
  EXPECT_EQ(eta(tx("T7"), code("31*")), 1);
  EXPECT_EQ(eta(tx("T7"), code("312")), 0);
}

TEST_F(GroceryMembership, MuSingle) {
  EXPECT_EQ(mu_single(group_at_level(tx("T1"), 1), code("2**")), Fraction(2, 3));
  EXPECT_EQ(mu_single(group_at_level(tx("T7"), 1), code("3**")), Fraction(3, 5));
  EXPECT_EQ(mu_single(group_at_level(tx("T12"), 1), code("1**")), Fraction(1));
  EXPECT_EQ(mu_single(group_at_level(tx("T12"), 1), code("2**")), Fraction(0));
  EXPECT_EQ(kind_of([&] { mu_single(group_at_level(tx("T1"), 1), code("21*")); }), ErrorKind::LevelOutOfRange);
}

TEST_F(GroceryMembership, MuItemsetTakesMinimum) {
  auto g = group_at_level(tx("T1"), 1);
  EXPECT_EQ(mu_itemset(g, Itemset{code("2**"), code("4**")}), Fraction(1, 3));
  EXPECT_EQ(mu_itemset(g, Itemset{code("2**")}), mu_single(g, code("2**")));
  for (const auto& t : m.transactions)
    EXPECT_TRUE(mu_itemset(group_at_level(t, 1), Itemset{code("1**"), code("4**")}).is_zero()) << t.id;
}

TEST_F(GroceryMembership, SupportMatchesWorkedValues) {
  EXPECT_EQ(sup({"2**"}), Fraction(49, 15));
  EXPECT_EQ(sup({"2**"}).to_decimal(), "3.27");
  EXPECT_EQ(sup({"1**", "4**"}), Fraction(0));
  EXPECT_EQ(sup({"2**", "3**", "4**"}), Fraction(6, 5));
  EXPECT_EQ(sup({"21*", "22*", "41*"}).to_decimal(), "1.03");
  EXPECT_EQ(sup({"21*", "22*", "41*"}), Fraction(31, 30));
  EXPECT_EQ(sup({"211", "222", "411"}), Fraction(1, 3));
}

TEST_F(GroceryMembership, SupportAgreesWithIndependentOracle) {
  for (int k = 1; k <= 3; ++k)
    for (const auto& c : tax.codes_at_level(k))
      EXPECT_EQ(support(Itemset{c}, m), testing::naive_support({c.str()}, m)) << c;
}

TEST_F(GroceryMembership, LevelSupportsSumToQualifiedCount) {
  for (int k = 1; k <= 3; ++k) {
    Fraction total;
    for (const auto& c : tax.codes_at_level(k)) total += support(Itemset{c}, m);
    EXPECT_EQ(total, Fraction(10)) << "level " << k;
  }
}

TEST_F(GroceryMembership, FuzzySetListsNonZeroMembers) {
  auto grouped = group_all(m, 1);
  auto set = fuzzy_set(Itemset{code("1**")}, grouped);
  ASSERT_EQ(set.size(), 3u);
  EXPECT_EQ(set[0].first, "T10");
  EXPECT_EQ(set[0].second, Fraction(1, 2));
  EXPECT_EQ(set[2].first, "T12");
  EXPECT_EQ(set[2].second, Fraction(1));
}

TEST_F(GroceryMembership, EmptyAndRawSets) {
  TransactionSet empty = qualify(TransactionSet{}, 5);
  EXPECT_EQ(support(Itemset{code("1**")}, empty), Fraction(0));
  EXPECT_EQ(kind_of([&] { support(Itemset{code("1**")}, raw); }), ErrorKind::ConfigError);
}

}  // namespace
}  // namespace fuzzymine
