#include "cube/relation.hpp"

#include "cube/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace cube {

Relation::Relation(Schema schema, std::vector<Row> rows)
    : schema_(std::move(schema)), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.labels.size() != schema_.arity()) {
      throw DataError("row arity does not match the schema");
    }
    for (const auto& label : row.labels) {
      if (label == DimensionValue::kAllToken) {
        throw DataError("row label \"ALL\" collides with the reserved wildcard");
      }
    }
    if (row.measure <= 0) {
      throw DataError("measure values must be strictly positive, got " +
                      format_rational(row.measure));
    }
  }
}

Tuple Relation::row_tuple(std::size_t index) const {
  const Row& row = rows_.at(index);
  std::vector<DimensionValue> values;
  values.reserve(row.labels.size());
  for (const auto& label : row.labels) values.push_back(DimensionValue::label(label));
  return Tuple::regular(std::move(values));
}

namespace {

std::vector<std::vector<std::string>> collect_domains(const Schema& schema,
                                                      const Relation* r1,
                                                      const Relation* r2) {
  std::vector<std::set<std::string>> seen(schema.arity());
  for (const Relation* r : {r1, r2}) {
    if (!r) continue;
    for (const auto& row : r->rows()) {
      for (std::size_t d = 0; d < schema.arity(); ++d) seen[d].insert(row.labels[d]);
    }
  }
  std::vector<std::vector<std::string>> domains(schema.arity());
  for (std::size_t d = 0; d < schema.arity(); ++d) {
    domains[d].assign(seen[d].begin(), seen[d].end());
  }
  return domains;
}

}  // namespace

CubeSpace::CubeSpace(const Relation& r)
    : schema_(r.schema()), domains_(collect_domains(r.schema(), &r, nullptr)) {
  relations_[0] = &r;
}

CubeSpace::CubeSpace(const Relation& r1, const Relation& r2) : schema_(r1.schema()) {
  if (!(r1.schema() == r2.schema())) {
    throw DataError("the two relations do not share a schema");
  }
  domains_ = collect_domains(schema_, &r1, &r2);
  relations_[0] = &r1;
  relations_[1] = &r2;
}

const Relation& CubeSpace::relation(int index) const {
  if (index < 1 || index > 2 || !relations_[index - 1]) {
    throw ConfigError("constraint refers to relation " + std::to_string(index) +
                      " but this space binds " + std::to_string(relation_count()));
  }
  return *relations_[index - 1];
}

std::uint64_t CubeSpace::cell_count() const {
  std::uint64_t total = 1;
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  for (const auto& dom : domains_) {
    const std::uint64_t factor = dom.size() + 1;
    if (total > cap / factor) return cap;
    total *= factor;
  }
  return total == cap ? cap : total + 1;
}

std::vector<Tuple> CubeSpace::enumerate() const {
  std::vector<Tuple> out;
  std::vector<DimensionValue> current;
  current.reserve(arity());

  // Depth-first over (labels..., ALL) per dimension; labels are sorted,
  // so visiting ALL last yields canonical order directly.
  auto descend = [&](auto&& self, std::size_t dim) -> void {
    if (dim == arity()) {
      out.push_back(Tuple::regular(current));
      return;
    }
    for (const auto& label : domains_[dim]) {
      current.push_back(DimensionValue::label(label));
      self(self, dim + 1);
      current.pop_back();
    }
    current.push_back(DimensionValue::all());
    self(self, dim + 1);
    current.pop_back();
  };
  descend(descend, 0);
  out.push_back(Tuple::bottom());
  return out;
}

std::vector<Tuple> enumerate_space(const Relation& r) { return CubeSpace(r).enumerate(); }

}  // namespace cube
