#include "cube/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace cube {

namespace {

void check_same_arity(const Tuple& u, const Tuple& v) {
  if (!u.is_bottom() && !v.is_bottom() && u.arity() != v.arity()) {
    throw std::invalid_argument("tuple arity mismatch");
  }
}

}  // namespace

bool generalizes(const Tuple& u, const Tuple& v) {
  check_same_arity(u, v);
  if (v.is_bottom()) return true;
  if (u.is_bottom()) return false;
  for (std::size_t i = 0; i < u.arity(); ++i) {
    const auto& uv = u.values()[i];
    if (uv.is_all()) continue;
    if (!(uv == v.values()[i])) return false;
  }
  return true;
}

Tuple tuple_sum(const Tuple& u, const Tuple& v) {
  check_same_arity(u, v);
  if (u.is_bottom()) return v;
  if (v.is_bottom()) return u;
  std::vector<DimensionValue> out;
  out.reserve(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) {
    out.push_back(u.values()[i] == v.values()[i] ? u.values()[i] : DimensionValue::all());
  }
  return Tuple::regular(std::move(out));
}

Tuple tuple_product(const Tuple& u, const Tuple& v) {
  check_same_arity(u, v);
  if (u.is_bottom() || v.is_bottom()) return Tuple::bottom();
  std::vector<DimensionValue> out;
  out.reserve(u.arity());
  for (std::size_t i = 0; i < u.arity(); ++i) {
    const auto& a = u.values()[i];
    const auto& b = v.values()[i];
    if (a.is_all()) {
      out.push_back(b);
    } else if (b.is_all() || a == b) {
      out.push_back(a);
    } else {
      return Tuple::bottom();  // two distinct concrete labels
    }
  }
  return Tuple::regular(std::move(out));
}

Tuple meet(std::span<const Tuple> tuples) {
  if (tuples.empty()) throw std::invalid_argument("meet of an empty set");
  Tuple acc = tuples.front();
  for (std::size_t i = 1; i < tuples.size(); ++i) acc = tuple_sum(acc, tuples[i]);
  return acc;
}

Tuple join(std::span<const Tuple> tuples) {
  if (tuples.empty()) throw std::invalid_argument("join of an empty set");
  Tuple acc = tuples.front();
  for (std::size_t i = 1; i < tuples.size(); ++i) acc = tuple_product(acc, tuples[i]);
  return acc;
}

bool is_antichain(std::span<const Tuple> tuples) {
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      if (i != j && generalizes(tuples[i], tuples[j])) return false;
    }
  }
  return true;
}

namespace {

std::vector<Tuple> extremal(std::span<const Tuple> tuples, bool minimal) {
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < tuples.size() && !dominated; ++j) {
      if (i == j || tuples[i] == tuples[j]) continue;
      dominated = minimal ? generalizes(tuples[j], tuples[i])
                          : generalizes(tuples[i], tuples[j]);
    }
    if (!dominated) out.push_back(tuples[i]);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Tuple> minimal_elements(std::span<const Tuple> tuples) {
  return extremal(tuples, true);
}

std::vector<Tuple> maximal_elements(std::span<const Tuple> tuples) {
  return extremal(tuples, false);
}

}  // namespace cube
