#include "cube/border.hpp"

#include "cube/errors.hpp"
#include "cube/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace cube {

bool is_member(const Tuple& t, const Border& b) {
  const bool above_g = std::any_of(b.g.begin(), b.g.end(),
                                   [&](const Tuple& g) { return generalizes(g, t); });
  if (!above_g) return false;
  return std::any_of(b.s.begin(), b.s.end(),
                     [&](const Tuple& s) { return generalizes(t, s); });
}

namespace {

// Immediate generalizations: one non-ALL coordinate turned into ALL.
std::vector<Tuple> parents_of(const Tuple& t) {
  std::vector<Tuple> parents;
  for (std::size_t d = 0; d < t.arity(); ++d) {
    if (t.values()[d].is_all()) continue;
    auto values = t.values();
    values[d] = DimensionValue::all();
    parents.push_back(Tuple::regular(std::move(values)));
  }
  return parents;
}

}  // namespace

Border compute_borders(const CubeSpace& space, const ConstraintConjunction& conj) {
  const ConstraintConjunction camc = conj.antimonotone_part();
  const ConstraintConjunction cmc = conj.monotone_part();

  std::vector<Tuple> solution;
  // Tuples that passed the antimonotone part at the previous level,
  // with the monotone verdict piggybacked so children can inherit it.
  std::unordered_map<Tuple, bool, TupleHash> frontier;

  const Tuple top = space.top();
  if (satisfies(top, camc, space)) {
    const bool cmc_ok = satisfies(top, cmc, space);
    if (cmc_ok) solution.push_back(top);
    frontier.emplace(top, cmc_ok);
  }

  for (std::size_t level = 1; level <= space.arity() && !frontier.empty(); ++level) {
    std::unordered_set<Tuple, TupleHash> candidates;
    for (const auto& [tuple, cmc_ok] : frontier) {
      for (std::size_t d = 0; d < tuple.arity(); ++d) {
        if (!tuple.values()[d].is_all()) continue;
        for (const auto& label : space.domains()[d]) {
          auto values = tuple.values();
          values[d] = DimensionValue::label(label);
          candidates.insert(Tuple::regular(std::move(values)));
        }
      }
    }

    std::unordered_map<Tuple, bool, TupleHash> next;
    for (const Tuple& candidate : candidates) {
      bool inherited_cmc = false;
      bool all_parents_ok = true;
      for (const Tuple& parent : parents_of(candidate)) {
        const auto it = frontier.find(parent);
        if (it == frontier.end()) {
          all_parents_ok = false;  // some generalization failed camc
          break;
        }
        inherited_cmc |= it->second;
      }
      if (!all_parents_ok) continue;
      if (!satisfies(candidate, camc, space)) continue;
      const bool cmc_ok = inherited_cmc || satisfies(candidate, cmc, space);
      if (cmc_ok) solution.push_back(candidate);
      next.emplace(candidate, cmc_ok);
    }
    frontier = std::move(next);
  }

  // Bottom sits below every tuple; its aggregates are all zero, so it
  // is evaluated directly rather than through the sweep.
  const Tuple bottom = Tuple::bottom();
  if (satisfies(bottom, camc, space) && satisfies(bottom, cmc, space)) {
    solution.push_back(bottom);
  }

  return Border{minimal_elements(solution), maximal_elements(solution)};
}

namespace {

void require_antichain(std::span<const Tuple> tuples, const char* role) {
  if (!is_antichain(tuples)) {
    throw ConfigError(std::string(role) + " must be an anti-chain");
  }
}

void require_pure(const ConstraintConjunction& conj, Monotonicity expected,
                  const char* role) {
  for (const auto& bound : conj.atoms()) {
    if (classify(bound.atom) != expected) {
      throw ConfigError(std::string(role) + " mixes monotonicity classes");
    }
  }
}

}  // namespace

Border borders_from_upper(std::span<const Tuple> s_antimonotone,
                          const ConstraintConjunction& monotone_part,
                          const CubeSpace& space) {
  require_antichain(s_antimonotone, "the upper border");
  require_pure(monotone_part, Monotonicity::Monotone, "the residual constraint");

  std::vector<Tuple> inside;
  for (const Tuple& t : space.enumerate()) {
    const bool below_s = std::any_of(s_antimonotone.begin(), s_antimonotone.end(),
                                     [&](const Tuple& s) { return generalizes(t, s); });
    if (below_s && satisfies(t, monotone_part, space)) inside.push_back(t);
  }

  Border border;
  border.g = minimal_elements(inside);
  for (const Tuple& s : s_antimonotone) {
    if (std::any_of(border.g.begin(), border.g.end(),
                    [&](const Tuple& g) { return generalizes(g, s); })) {
      border.s.push_back(s);
    }
  }
  std::sort(border.s.begin(), border.s.end(), CanonicalLess{});
  return border;
}

Border borders_from_lower(std::span<const Tuple> g_monotone,
                          const ConstraintConjunction& antimonotone_part,
                          const CubeSpace& space) {
  require_antichain(g_monotone, "the lower border");
  require_pure(antimonotone_part, Monotonicity::Antimonotone, "the residual constraint");

  std::vector<Tuple> inside;
  for (const Tuple& t : space.enumerate()) {
    const bool above_g = std::any_of(g_monotone.begin(), g_monotone.end(),
                                     [&](const Tuple& g) { return generalizes(g, t); });
    if (above_g && satisfies(t, antimonotone_part, space)) inside.push_back(t);
  }

  Border border;
  border.s = maximal_elements(inside);
  for (const Tuple& g : g_monotone) {
    if (std::any_of(border.s.begin(), border.s.end(),
                    [&](const Tuple& s) { return generalizes(g, s); })) {
      border.g.push_back(g);
    }
  }
  std::sort(border.g.begin(), border.g.end(), CanonicalLess{});
  return border;
}

}  // namespace cube
