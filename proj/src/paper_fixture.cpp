#include "fuzzymine/paper_fixture.hpp"

#include <initializer_list>
#include <string_view>

namespace fuzzymine::paper {

namespace {

constexpr int kDepth = 3;

ReferenceTable table(int level, int size,
                     std::initializer_list<std::pair<std::initializer_list<std::string_view>, std::string_view>> rows) {
  ReferenceTable t{level, size, {}};
  for (const auto& [codes, printed] : rows) {
    std::vector<ItemCode> members;
    for (auto c : codes) members.push_back(ItemCode::parse(c, kDepth));
    t.rows.emplace_back(Itemset(std::move(members)), Fraction::parse(printed));
  }
  return t;
}

}  // namespace

MiningConfig mining_config() {
  MiningConfig cfg;
  cfg.gamma = 5;
  cfg.min_support.set_level(1, Fraction(11, 10));
  cfg.min_support.set(1, 1, Fraction(2));
  cfg.min_support.set_level(2, Fraction(1));
  cfg.min_support.set_level(3, Fraction(33, 100));
  cfg.max_p = 3;
  cfg.max_level = 3;
  cfg.parent_filter = true;
  cfg.min_confidence = Fraction(1, 2);
  cfg.reference = reference_tables();
  return cfg;
}

std::vector<ReferenceTable> reference_tables() {
  return {
      table(1, 1, {{{"1**"}, "2"}, {{"2**"}, "3.27"}, {{"3**"}, "2.6"}, {{"4**"}, "2.13"}}),
      table(1, 2, {{{"2**", "3**"}, "1.2"}, {{"2**", "4**"}, "1.93"}, {{"3**", "4**"}, "1.2"}}),
      table(1, 3, {{{"2**", "3**", "4**"}, "1.2"}}),
      table(2, 1, {{{"21*"}, "1.28"}, {{"22*"}, "1.98"}, {{"32*"}, "1.7"}, {{"41*"}, "1.68"}}),
      // printed as "{21*, 22}" and "{21*, 41}"; the star is implied
      table(2, 2, {{{"21*", "22*"}, "1.03"}, {{"21*", "41*"}, "1.03"}, {{"22*", "41*"}, "1.48"}}),
      table(2, 3, {{{"21*", "22*", "41*"}, "1.03"}}),
      table(3, 1,
            {{{"211"}, "0.53"}, {{"212"}, "0.75"}, {{"221"}, "0.65"}, {{"222"}, "1.33"}, {{"411"}, "1.03"},
             {{"412"}, "0.65"}}),
      table(3, 2,
            {{{"211", "212"}, "0.33"},
             {{"211", "222"}, "0.33"},
             {{"211", "411"}, "0.53"},
             {{"212", "222"}, "0.33"},
             {{"212", "411"}, "0.58"},
             {{"221", "412"}, "0.45"},
             {{"222", "411"}, "0.58"}}),
      table(3, 3,
            {{{"211", "212", "222"}, "0.33"}, {{"211", "212", "411"}, "0.33"}, {{"212", "222", "411"}, "0.33"}}),
  };
}

}  // namespace fuzzymine::paper
