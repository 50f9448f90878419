#pragma once

#include "cube/tuple.hpp"

#include <span>
#include <vector>

namespace cube {

// Generalization order u ≼ v ("u is more general than v"): every
// tuple generalizes bottom, and a regular u generalizes a regular v
// when each non-ALL coordinate of u equals v's. This is the Rollup /
// Drilldown order of the cube, reflexive by construction.
bool generalizes(const Tuple& u, const Tuple& v);

// Most specific tuple generalizing both operands: keep coordinates the
// operands agree on, ALL elsewhere. Bottom is the neutral element.
Tuple tuple_sum(const Tuple& u, const Tuple& v);

// Most general tuple specializing both operands: merge non-ALL
// coordinates, or bottom when two distinct concrete labels clash.
// Bottom is absorbing.
Tuple tuple_product(const Tuple& u, const Tuple& v);

// Lattice meet / join: folds of sum / product. Empty input is a
// domain error (std::invalid_argument).
Tuple meet(std::span<const Tuple> tuples);
Tuple join(std::span<const Tuple> tuples);

// No two members comparable under ≼.
bool is_antichain(std::span<const Tuple> tuples);

// Elements of `tuples` with no strict generalization (resp. strict
// specialization) inside `tuples`. Duplicates are collapsed; output is
// in canonical order.
std::vector<Tuple> minimal_elements(std::span<const Tuple> tuples);
std::vector<Tuple> maximal_elements(std::span<const Tuple> tuples);

}  // namespace cube
