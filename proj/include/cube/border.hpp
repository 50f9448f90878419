#pragma once

#include "cube/constraint.hpp"
#include "cube/relation.hpp"
#include "cube/tuple.hpp"

#include <span>
#include <vector>

namespace cube {

// Condensed representation of an order-convex tuple set: g holds the
// minimal (most general) solutions, s the maximal (most specific)
// ones. Both are anti-chains in canonical order; an empty solution set
// is represented by two empty borders.
struct Border {
  std::vector<Tuple> g;
  std::vector<Tuple> s;

  friend bool operator==(const Border& a, const Border& b) = default;
};

// Membership from the borders alone: t is a solution iff some g
// element generalizes it and it generalizes some s element. Sound and
// complete because solution sets of monotone/antimonotone conjunctions
// are convex.
bool is_member(const Tuple& t, const Border& b);

// Level-wise sweep of the space, most general tuples first, pruning
// the descendants of tuples that fail the antimonotone part and
// inheriting monotone successes from parents. Returns the exact
// minima/maxima of the solution set.
Border compute_borders(const CubeSpace& space, const ConstraintConjunction& conj);

// Derives the hybrid borders from the antimonotone side's maximal
// border plus the monotone part alone (and dually from the monotone
// side's minimal border plus the antimonotone part). `one_sided_*`
// must be an anti-chain; the conjunction passed must be purely
// monotone (resp. purely antimonotone).
Border borders_from_upper(std::span<const Tuple> s_antimonotone,
                          const ConstraintConjunction& monotone_part,
                          const CubeSpace& space);
Border borders_from_lower(std::span<const Tuple> g_monotone,
                          const ConstraintConjunction& antimonotone_part,
                          const CubeSpace& space);

}  // namespace cube
