#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace cube {

// One coordinate of a multidimensional tuple: either a concrete
// categorical label or the wildcard ALL ("aggregated over this
// dimension"). The literal label "ALL" is reserved and may not be used
// as a concrete value.
class DimensionValue {
 public:
  static constexpr const char* kAllToken = "ALL";

  static DimensionValue all() { return DimensionValue(); }
  static DimensionValue label(std::string text);

  bool is_all() const { return all_; }
  const std::string& text() const { return label_; }  // pre: !is_all()

  friend bool operator==(const DimensionValue& a, const DimensionValue& b) {
    return a.all_ == b.all_ && a.label_ == b.label_;
  }

 private:
  DimensionValue() = default;
  std::string label_;
  bool all_ = true;
};

// Ordered dimension names plus the measure column name.
class Schema {
 public:
  Schema(std::vector<std::string> dimensions, std::string measure);

  const std::vector<std::string>& dimensions() const { return dimensions_; }
  const std::string& measure() const { return measure_; }
  std::size_t arity() const { return dimensions_.size(); }

  friend bool operator==(const Schema& a, const Schema& b) {
    return a.dimensions_ == b.dimensions_ && a.measure_ == b.measure_;
  }

 private:
  std::vector<std::string> dimensions_;
  std::string measure_;
};

// A point of the multidimensional space: one value-or-ALL per
// dimension, or the distinguished bottom element (the "empty tuple"
// that closes the lattice from below in generality, i.e. the most
// specific element). Bottom is not representable as a label sequence.
class Tuple {
 public:
  static Tuple bottom() { return Tuple(true, {}); }
  static Tuple regular(std::vector<DimensionValue> values) {
    return Tuple(false, std::move(values));
  }
  // The all-ALL tuple over `arity` dimensions (the most general tuple).
  static Tuple top(std::size_t arity);

  bool is_bottom() const { return bottom_; }
  const std::vector<DimensionValue>& values() const { return values_; }
  std::size_t arity() const { return values_.size(); }  // pre: !is_bottom()

  // Number of non-ALL coordinates; pre: !is_bottom().
  std::size_t specificity() const;

  friend bool operator==(const Tuple& a, const Tuple& b) {
    return a.bottom_ == b.bottom_ && a.values_ == b.values_;
  }

 private:
  Tuple(bool bottom, std::vector<DimensionValue> values)
      : values_(std::move(values)), bottom_(bottom) {}
  std::vector<DimensionValue> values_;
  bool bottom_ = false;
};

// Deterministic output order: dimension by dimension in schema order,
// labels lexicographic (byte-wise), ALL after every concrete label;
// bottom after every regular tuple.
bool canonical_less(const Tuple& a, const Tuple& b);

struct CanonicalLess {
  bool operator()(const Tuple& a, const Tuple& b) const { return canonical_less(a, b); }
};

struct TupleHash {
  std::size_t operator()(const Tuple& t) const;
};

}  // namespace cube
