#include "cube/aggregate.hpp"

#include "cube/errors.hpp"
#include "cube/lattice.hpp"

namespace cube {

Rational aggregate(const Tuple& t, const Relation& r, AggregateFunction f) {
  if (t.is_bottom()) return 0;
  if (t.arity() != r.schema().arity()) {
    throw DataError("tuple arity does not match the relation's schema");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < r.rows().size(); ++i) {
    bool covers = true;
    const Row& row = r.rows()[i];
    for (std::size_t d = 0; d < t.arity() && covers; ++d) {
      const auto& v = t.values()[d];
      covers = v.is_all() || v.text() == row.labels[d];
    }
    if (!covers) continue;
    total += f == AggregateFunction::Count ? Rational(1) : row.measure;
  }
  return total;
}

Rational relative_aggregate(const Tuple& t, const Relation& r, AggregateFunction f) {
  const Rational denom = aggregate(Tuple::top(r.schema().arity()), r, f);
  if (denom == 0) {
    throw DataError("relative aggregate over an empty relation");
  }
  return aggregate(t, r, f) / denom;
}

}  // namespace cube
