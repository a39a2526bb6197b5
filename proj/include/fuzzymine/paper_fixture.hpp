#pragma once

#include <vector>

#include "fuzzymine/miner.hpp"

namespace fuzzymine::paper {

/// The grocery example's settings: gamma 5; alpha 2 for level-1 singletons,
/// 1.1 for larger level-1 itemsets, 1 at level 2, 0.33 at level 3; itemsets
/// up to size 3; three levels; parent filtering; confidence 0.5. The
/// expected tables below are attached as the reference.
MiningConfig mining_config();

/// Expected frequent-itemset tables for the grocery example, two-decimal
/// supports. Several level-3 rows are not reproducible from the grocery
/// transactions (211 and 212 never share a qualified basket); mine()
/// reports them as divergences instead of matching them.
std::vector<ReferenceTable> reference_tables();

}  // namespace fuzzymine::paper
