#pragma once

#include "cube/aggregate.hpp"
#include "cube/border.hpp"
#include "cube/rational.hpp"
#include "cube/relation.hpp"

#include <string>
#include <vector>

namespace cube {

// One materialized cube cell.
struct CubeCell {
  Tuple tuple;
  Rational value;

  friend bool operator==(const CubeCell& a, const CubeCell& b) = default;
};

// Every tuple the rows of r can build (COUNT >= 1) with its aggregate,
// in canonical order. The border form is G = {all-ALL}, S = distinct
// rows.
std::vector<CubeCell> datacube(const Relation& r, AggregateFunction f);
Border datacube_borders(const Relation& r);

// Tuples whose aggregate reaches min_threshold.
Border iceberg_borders(const Relation& r, AggregateFunction f, const Rational& min_threshold);

// Tuples whose aggregate falls inside [min_threshold, max_threshold].
Border range_borders(const Relation& r, AggregateFunction f, const Rational& min_threshold,
                     const Rational& max_threshold);

// Tuples reaching min_threshold in r2 while absent from r1's
// datacube, over the unioned space. The threshold is absolute or a
// share of r2's total.
Border differential_borders(const Relation& r2, const Relation& r1, AggregateFunction f,
                            const Rational& min_threshold, Mode threshold_mode);

// Tuples whose share in r1 stays strictly below min_share1 while their
// share in r2 reaches min_share2 (the strict/non-strict pairing makes
// the first condition the exact complement of "frequent in r1").
Border emerging_borders(const Relation& r2, const Relation& r1, AggregateFunction f,
                        const Rational& min_share1, const Rational& min_share2);

// Share ratio between r2 and r1 with the 0/0 -> 0 and x/0 -> infinity
// conventions.
class EmergenceRate {
 public:
  static EmergenceRate infinite() { return EmergenceRate(true, 0); }
  static EmergenceRate finite(Rational value) { return EmergenceRate(false, std::move(value)); }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const { return value_; }  // pre: !is_infinite()

  std::string str() const;  // exact fraction, or "inf"

  friend bool operator==(const EmergenceRate& a, const EmergenceRate& b) = default;
  friend bool operator<(const EmergenceRate& a, const EmergenceRate& b) {
    if (a.infinite_ || b.infinite_) return !a.infinite_ && b.infinite_;
    return a.value_ < b.value_;
  }

 private:
  EmergenceRate(bool infinite, Rational value) : value_(std::move(value)), infinite_(infinite) {}
  Rational value_;
  bool infinite_;
};

EmergenceRate emergence_rate(const Tuple& t, const Relation& r1, const Relation& r2,
                             AggregateFunction f);

struct EmergenceEntry {
  Tuple tuple;
  EmergenceRate rate;

  friend bool operator==(const EmergenceEntry& a, const EmergenceEntry& b) = default;
};

// Every tuple of the emerging cube with its rate, sorted by descending
// rate then canonical order. Each rate is at least
// min_share2 / min_share1.
std::vector<EmergenceEntry> emergence_report(const Relation& r2, const Relation& r1,
                                             AggregateFunction f, const Rational& min_share1,
                                             const Rational& min_share2);

// The hybrid conjunction behind each variant, exposed so callers (CLI,
// tests, the brute-force reference) can evaluate exactly the same
// constraint. Relation index 1 is the first CubeSpace argument.
ConstraintConjunction datacube_constraint();
ConstraintConjunction iceberg_constraint(AggregateFunction f, const Rational& min_threshold);
ConstraintConjunction range_constraint(AggregateFunction f, const Rational& min_threshold,
                                       const Rational& max_threshold);
ConstraintConjunction differential_constraint(AggregateFunction f, const Rational& min_threshold,
                                              Mode threshold_mode);
ConstraintConjunction emerging_constraint(AggregateFunction f, const Rational& min_share1,
                                          const Rational& min_share2);

}  // namespace cube
