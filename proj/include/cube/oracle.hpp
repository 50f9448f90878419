#pragma once

#include "cube/border.hpp"
#include "cube/constraint.hpp"
#include "cube/relation.hpp"

#include <cstdint>
#include <functional>
#include <vector>

// Independent brute-force reference. Everything here re-derives
// generalization and aggregation with plain loops and no pruning so
// that the optimized paths can be checked against code that shares
// none of their logic. Single-threaded, deliberately slow.
namespace cube::oracle {

inline constexpr std::uint64_t kDefaultCellBudget = 1'000'000;

struct SolutionSet {
  std::vector<Tuple> tuples;  // canonical order
};

// Filters the full space tuple by tuple. Throws BudgetError when the
// space exceeds `cell_budget` cells.
SolutionSet brute_force_solutions(const CubeSpace& space, const ConstraintConjunction& conj,
                                  std::uint64_t cell_budget = kDefaultCellBudget);

// Same sweep with an arbitrary predicate (used for negative controls).
SolutionSet brute_force_filter(const CubeSpace& space,
                               const std::function<bool(const Tuple&)>& keep,
                               std::uint64_t cell_budget = kDefaultCellBudget);

// Exact minima and maxima by pairwise comparison.
Border extract_borders(const SolutionSet& solutions);

// Order-convexity of the solution set within the space: no outside
// tuple sits between two inside tuples.
bool is_convex(const SolutionSet& solutions, const CubeSpace& space);

}  // namespace cube::oracle
