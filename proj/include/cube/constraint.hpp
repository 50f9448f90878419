#pragma once

#include "cube/aggregate.hpp"
#include "cube/rational.hpp"
#include "cube/relation.hpp"

#include <string>
#include <vector>

namespace cube {

enum class Comparator { Ge, Gt, Le, Lt };
enum class Mode { Absolute, Relative };
enum class Monotonicity { Monotone, Antimonotone };

// One aggregate comparison. COUNT and SUM over positive measures only
// ever grow when a tuple is generalized, so the comparator alone
// decides the monotonicity class.
struct AtomicConstraint {
  AggregateFunction function = AggregateFunction::Sum;
  Comparator comparator = Comparator::Ge;
  Rational threshold;
  Mode mode = Mode::Absolute;
};

Monotonicity classify(const AtomicConstraint& atom);

// Thresholds must be nonnegative; relative-mode thresholds must lie in
// the open interval (0,1). Throws ConfigError.
void validate_atom(const AtomicConstraint& atom);

// An atom bound to one of the space's relations (1-based index, so a
// hybrid two-relation constraint can mix sides).
struct BoundAtom {
  AtomicConstraint atom;
  int relation_index = 1;
};

class ConstraintConjunction {
 public:
  ConstraintConjunction() = default;

  void add(AtomicConstraint atom, int relation_index = 1);

  const std::vector<BoundAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

  ConstraintConjunction monotone_part() const;
  ConstraintConjunction antimonotone_part() const;
  bool has_monotone() const;
  bool has_antimonotone() const;

  // Canonical text form, echoed into serialized documents. Thresholds
  // render as exact fractions.
  std::string text(const Schema& schema) const;

 private:
  std::vector<BoundAtom> atoms_;
};

// Literal evaluation of every atom against its bound relation. The
// all-ALL tuple and bottom are evaluated like any other tuple
// (aggregates of bottom are 0); no boundary case is special-cased.
bool satisfies(const Tuple& t, const ConstraintConjunction& conj, const CubeSpace& space);

// Checks the boundary hypotheses a well-posed conjunction is expected
// to meet (all-ALL satisfies the antimonotone part, bottom satisfies
// the monotone part, and neither satisfies the opposite part). Returns
// one human-readable warning per violated hypothesis; evaluation is
// never altered by these.
std::vector<std::string> remark_diagnostics(const ConstraintConjunction& conj,
                                            const CubeSpace& space);

}  // namespace cube
