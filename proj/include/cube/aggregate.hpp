#pragma once

#include "cube/rational.hpp"
#include "cube/relation.hpp"
#include "cube/tuple.hpp"

namespace cube {

// COUNT(*) or SUM over the schema's measure column. Both are
// antimonotone in the generalization order because measures are
// strictly positive. MIN/MAX are rejected at configuration time.
enum class AggregateFunction { Count, Sum };

// Aggregate of t over the rows of r that specialize t. A tuple
// covering no row yields 0; bottom yields 0.
Rational aggregate(const Tuple& t, const Relation& r, AggregateFunction f);

// aggregate(t) / aggregate(all-ALL tuple), in [0,1]. For COUNT this is
// the frequency of t in r. Empty relation: DataError (zero
// denominator).
Rational relative_aggregate(const Tuple& t, const Relation& r, AggregateFunction f);

}  // namespace cube
