#include "cube/tuple.hpp"

#include "cube/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cube {

DimensionValue DimensionValue::label(std::string text) {
  if (text == kAllToken) {
    throw DataError("the label \"ALL\" is reserved and cannot be a concrete value");
  }
  DimensionValue v;
  v.all_ = false;
  v.label_ = std::move(text);
  return v;
}

Schema::Schema(std::vector<std::string> dimensions, std::string measure)
    : dimensions_(std::move(dimensions)), measure_(std::move(measure)) {
  if (dimensions_.empty()) throw DataError("a schema needs at least one dimension");
  std::unordered_set<std::string> seen;
  for (const auto& d : dimensions_) {
    if (d.empty()) throw DataError("dimension names must be nonempty");
    if (!seen.insert(d).second) throw DataError("duplicate dimension name: " + d);
  }
  if (measure_.empty()) throw DataError("measure name must be nonempty");
}

Tuple Tuple::top(std::size_t arity) {
  return Tuple(false, std::vector<DimensionValue>(arity, DimensionValue::all()));
}

std::size_t Tuple::specificity() const {
  if (bottom_) throw std::logic_error("specificity of the bottom tuple");
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(),
                    [](const DimensionValue& v) { return !v.is_all(); }));
}

bool canonical_less(const Tuple& a, const Tuple& b) {
  if (a.is_bottom() || b.is_bottom()) return !a.is_bottom() && b.is_bottom();
  const auto& av = a.values();
  const auto& bv = b.values();
  if (av.size() != bv.size()) throw std::invalid_argument("tuple arity mismatch");
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (av[i] == bv[i]) continue;
    if (av[i].is_all() != bv[i].is_all()) return !av[i].is_all();  // ALL sorts last
    return av[i].text() < bv[i].text();
  }
  return false;
}

std::size_t TupleHash::operator()(const Tuple& t) const {
  std::size_t h = t.is_bottom() ? 0x9e3779b97f4a7c15ULL : 0x517cc1b727220a95ULL;
  for (const auto& v : t.values()) {
    std::size_t part = v.is_all() ? 1469598103934665603ULL : std::hash<std::string>{}(v.text());
    h ^= part + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace cube
