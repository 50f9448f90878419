#include "cube/oracle.hpp"

#include "cube/errors.hpp"

#include <algorithm>

namespace cube::oracle {

// Naive re-derivations. These must stay independent of lattice.cpp /
// aggregate.cpp: the whole point of this module is to check those.
namespace {

bool naive_generalizes(const Tuple& u, const Tuple& v) {
  if (v.is_bottom()) return true;
  if (u.is_bottom()) return false;
  for (std::size_t d = 0; d < u.arity(); ++d) {
    if (u.values()[d].is_all()) continue;
    if (v.values()[d].is_all()) return false;
    if (u.values()[d].text() != v.values()[d].text()) return false;
  }
  return true;
}

Rational naive_aggregate(const Tuple& t, const Relation& r, AggregateFunction f) {
  if (t.is_bottom()) return 0;
  Rational total = 0;
  for (const Row& row : r.rows()) {
    bool covered = true;
    for (std::size_t d = 0; d < t.arity(); ++d) {
      if (t.values()[d].is_all()) continue;
      if (t.values()[d].text() != row.labels[d]) {
        covered = false;
        break;
      }
    }
    if (covered) {
      if (f == AggregateFunction::Count) {
        total += 1;
      } else {
        total += row.measure;
      }
    }
  }
  return total;
}

bool naive_satisfies(const Tuple& t, const ConstraintConjunction& conj,
                     const CubeSpace& space) {
  for (const BoundAtom& bound : conj.atoms()) {
    const Relation& rel = space.relation(bound.relation_index);
    Rational value = naive_aggregate(t, rel, bound.atom.function);
    if (bound.atom.mode == Mode::Relative) {
      const Rational whole =
          naive_aggregate(Tuple::top(rel.schema().arity()), rel, bound.atom.function);
      if (whole == 0) throw DataError("relative aggregate over an empty relation");
      value /= whole;
    }
    bool ok = false;
    switch (bound.atom.comparator) {
      case Comparator::Ge: ok = value >= bound.atom.threshold; break;
      case Comparator::Gt: ok = value > bound.atom.threshold; break;
      case Comparator::Le: ok = value <= bound.atom.threshold; break;
      case Comparator::Lt: ok = value < bound.atom.threshold; break;
    }
    if (!ok) return false;
  }
  return true;
}

void check_budget(const CubeSpace& space, std::uint64_t cell_budget) {
  if (space.cell_count() > cell_budget) {
    throw BudgetError("space has " + std::to_string(space.cell_count()) +
                      " cells, beyond the budget of " + std::to_string(cell_budget));
  }
}

}  // namespace

SolutionSet brute_force_solutions(const CubeSpace& space, const ConstraintConjunction& conj,
                                  std::uint64_t cell_budget) {
  return brute_force_filter(
      space, [&](const Tuple& t) { return naive_satisfies(t, conj, space); }, cell_budget);
}

SolutionSet brute_force_filter(const CubeSpace& space,
                               const std::function<bool(const Tuple&)>& keep,
                               std::uint64_t cell_budget) {
  check_budget(space, cell_budget);
  SolutionSet result;
  for (const Tuple& t : space.enumerate()) {
    if (keep(t)) result.tuples.push_back(t);
  }
  return result;
}

Border extract_borders(const SolutionSet& solutions) {
  Border border;
  for (const Tuple& candidate : solutions.tuples) {
    bool has_more_general = false;
    bool has_more_specific = false;
    for (const Tuple& other : solutions.tuples) {
      if (other == candidate) continue;
      if (naive_generalizes(other, candidate)) has_more_general = true;
      if (naive_generalizes(candidate, other)) has_more_specific = true;
    }
    if (!has_more_general) border.g.push_back(candidate);
    if (!has_more_specific) border.s.push_back(candidate);
  }
  std::sort(border.g.begin(), border.g.end(), CanonicalLess{});
  std::sort(border.s.begin(), border.s.end(), CanonicalLess{});
  return border;
}

bool is_convex(const SolutionSet& solutions, const CubeSpace& space) {
  const auto& inside = solutions.tuples;
  for (const Tuple& between : space.enumerate()) {
    if (std::find(inside.begin(), inside.end(), between) != inside.end()) continue;
    bool below_some = false;
    bool above_some = false;
    for (const Tuple& member : inside) {
      if (naive_generalizes(member, between)) below_some = true;
      if (naive_generalizes(between, member)) above_some = true;
      if (below_some && above_some) return false;
    }
  }
  return true;
}

}  // namespace cube::oracle
