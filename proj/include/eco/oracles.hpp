#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eco/bigint.hpp"

namespace eco {

// Exhaustive enumerators of combinatorial classes. None of them uses a
// counting formula: every counted object is visited. Each throws
// Error{InfeasibleSize} outside [0, max_feasible_n].

/// Partitions of subsets S of [n] whose complement is a disjoint union of
/// even-length intervals of consecutive integers.
BigInt count_lacunary_partitions(int n);

/// Permutations of [n] with a set of coloured values that is a disjoint
/// union of even-length intervals of consecutive values.
BigInt count_paired_coloured_permutations(int n);

/// First-quadrant paths (0,0) -> (n,0) with steps U=(1,1), D=(1,-1),
/// h=(1,0), H=(2,0).
BigInt count_2generalized_motzkin(int n);

/// Motzkin paths of length n with level steps only at even height.
BigInt count_motzkin_no_odd_h(int n);

/// Ordered trees with n edges in which every branch has length >= 2. A
/// branch is a maximal path between special nodes (the root, leaves and
/// nodes with at least two children) whose inner nodes have one child.
BigInt count_trees_no_unit_branch(int n);

struct CountedFamily {
  std::string name;
  std::function<BigInt(int)> counter;
  int max_feasible_n;
};

const std::vector<CountedFamily>& oracle_families();
const CountedFamily& oracle_family(std::string_view name);

}  // namespace eco
