#pragma once

#include "cube/rational.hpp"
#include "cube/tuple.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cube {

// One source row: concrete labels (no ALL) plus a strictly positive
// measure. Strict positivity is what keeps SUM antimonotone under
// specialization.
struct Row {
  std::vector<std::string> labels;
  Rational measure;
};

// A bag of rows over a fixed schema. Duplicate label combinations are
// allowed; an empty bag is a valid relation (only file loading insists
// on at least one row).
class Relation {
 public:
  Relation(Schema schema, std::vector<Row> rows);

  const Schema& schema() const { return schema_; }
  const std::vector<Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  // The row's labels as a fully specific tuple.
  Tuple row_tuple(std::size_t index) const;

 private:
  Schema schema_;
  std::vector<Row> rows_;
};

// The multidimensional space of one relation or of a pair sharing a
// schema: per-dimension active domains (labels actually occurring,
// unioned for a pair) each extended with ALL, plus the bottom tuple.
class CubeSpace {
 public:
  explicit CubeSpace(const Relation& r);
  CubeSpace(const Relation& r1, const Relation& r2);  // domains are unioned

  const Schema& schema() const { return schema_; }
  std::size_t arity() const { return schema_.arity(); }
  // Sorted distinct labels per dimension, ALL excluded.
  const std::vector<std::vector<std::string>>& domains() const { return domains_; }

  // How many relations back this space (1 or 2).
  int relation_count() const { return relations_[1] ? 2 : 1; }
  // index is 1-based; throws ConfigError when the index is not bound.
  const Relation& relation(int index) const;

  Tuple top() const { return Tuple::top(arity()); }

  // Π(|Dim(A)|+1) + 1, saturating instead of overflowing.
  std::uint64_t cell_count() const;

  // Every tuple of the space in canonical order (bottom last).
  std::vector<Tuple> enumerate() const;

 private:
  Schema schema_;
  std::vector<std::vector<std::string>> domains_;
  const Relation* relations_[2] = {nullptr, nullptr};
};

// Space(r) as a plain function: the cartesian product of active
// domains extended with ALL, plus bottom.
std::vector<Tuple> enumerate_space(const Relation& r);

}  // namespace cube
