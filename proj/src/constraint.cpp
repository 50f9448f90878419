#include "cube/constraint.hpp"

#include "cube/errors.hpp"

#include <sstream>

namespace cube {

Monotonicity classify(const AtomicConstraint& atom) {
  switch (atom.comparator) {
    case Comparator::Ge:
    case Comparator::Gt:
      return Monotonicity::Antimonotone;
    case Comparator::Le:
    case Comparator::Lt:
      return Monotonicity::Monotone;
  }
  throw std::logic_error("unreachable comparator");
}

void validate_atom(const AtomicConstraint& atom) {
  if (atom.threshold < 0) {
    throw ConfigError("thresholds must be nonnegative, got " +
                      format_rational(atom.threshold));
  }
  if (atom.mode == Mode::Relative &&
      (atom.threshold <= 0 || atom.threshold >= 1)) {
    throw ConfigError("relative thresholds must lie strictly between 0 and 1, got " +
                      format_rational(atom.threshold));
  }
}

void ConstraintConjunction::add(AtomicConstraint atom, int relation_index) {
  validate_atom(atom);
  if (relation_index != 1 && relation_index != 2) {
    throw ConfigError("constraints can only bind relation 1 or 2");
  }
  atoms_.push_back(BoundAtom{std::move(atom), relation_index});
}

ConstraintConjunction ConstraintConjunction::monotone_part() const {
  ConstraintConjunction part;
  for (const auto& bound : atoms_) {
    if (classify(bound.atom) == Monotonicity::Monotone) part.atoms_.push_back(bound);
  }
  return part;
}

ConstraintConjunction ConstraintConjunction::antimonotone_part() const {
  ConstraintConjunction part;
  for (const auto& bound : atoms_) {
    if (classify(bound.atom) == Monotonicity::Antimonotone) part.atoms_.push_back(bound);
  }
  return part;
}

bool ConstraintConjunction::has_monotone() const {
  return !monotone_part().empty();
}

bool ConstraintConjunction::has_antimonotone() const {
  return !antimonotone_part().empty();
}

namespace {

const char* comparator_text(Comparator c) {
  switch (c) {
    case Comparator::Ge: return ">=";
    case Comparator::Gt: return ">";
    case Comparator::Le: return "<=";
    case Comparator::Lt: return "<";
  }
  return "?";
}

}  // namespace

std::string ConstraintConjunction::text(const Schema& schema) const {
  bool any_second = false;
  for (const auto& bound : atoms_) any_second |= bound.relation_index == 2;

  std::ostringstream out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0) out << " AND ";
    const auto& [atom, rel] = atoms_[i];
    const std::string suffix = any_second ? std::to_string(rel) : "";
    if (atom.mode == Mode::Relative) {
      out << "share" << rel << "("
          << (atom.function == AggregateFunction::Count ? "count" : "sum") << ")";
    } else if (atom.function == AggregateFunction::Count) {
      out << "count" << suffix << "(*)";
    } else {
      out << "sum" << suffix << "(" << schema.measure() << ")";
    }
    out << " " << comparator_text(atom.comparator) << " "
        << format_rational(atom.threshold);
  }
  return out.str();
}

namespace {

bool atom_holds(const Tuple& t, const BoundAtom& bound, const CubeSpace& space) {
  const Relation& rel = space.relation(bound.relation_index);
  const Rational value = bound.atom.mode == Mode::Absolute
                             ? aggregate(t, rel, bound.atom.function)
                             : relative_aggregate(t, rel, bound.atom.function);
  switch (bound.atom.comparator) {
    case Comparator::Ge: return value >= bound.atom.threshold;
    case Comparator::Gt: return value > bound.atom.threshold;
    case Comparator::Le: return value <= bound.atom.threshold;
    case Comparator::Lt: return value < bound.atom.threshold;
  }
  return false;
}

}  // namespace

bool satisfies(const Tuple& t, const ConstraintConjunction& conj, const CubeSpace& space) {
  for (const auto& bound : conj.atoms()) {
    if (!atom_holds(t, bound, space)) return false;
  }
  return true;
}

std::vector<std::string> remark_diagnostics(const ConstraintConjunction& conj,
                                            const CubeSpace& space) {
  std::vector<std::string> warnings;
  const Tuple top = space.top();
  const Tuple bottom = Tuple::bottom();
  const auto camc = conj.antimonotone_part();
  const auto cmc = conj.monotone_part();

  if (!camc.empty() && !satisfies(top, camc, space)) {
    warnings.push_back("the all-ALL tuple fails the antimonotone part; no tuple can satisfy it");
  }
  if (!cmc.empty() && !satisfies(bottom, cmc, space)) {
    warnings.push_back("the empty tuple fails the monotone part; no tuple can satisfy it");
  }
  if (!cmc.empty() && satisfies(top, cmc, space)) {
    warnings.push_back("the all-ALL tuple satisfies the monotone part; it does not restrict the space");
  }
  if (!camc.empty() && satisfies(bottom, camc, space)) {
    warnings.push_back("the empty tuple satisfies the antimonotone part; it does not restrict the space");
  }
  return warnings;
}

}  // namespace cube
