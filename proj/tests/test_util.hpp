#pragma once

#include "cube/relation.hpp"
#include "cube/tuple.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace cube::testing {

// Tuple literal: "ALL" stands for the wildcard.
inline Tuple t(std::initializer_list<std::string> labels) {
  std::vector<DimensionValue> values;
  for (const auto& label : labels) {
    values.push_back(label == "ALL" ? DimensionValue::all()
                                    : DimensionValue::label(label));
  }
  return Tuple::regular(std::move(values));
}

inline Schema bookstore_schema() {
  return Schema({"Type", "Ville", "Éditeur"}, "Quantité");
}

// The five-row bookstore sales relation used across the test suite.
inline Relation document1() {
  return Relation(bookstore_schema(),
                  {{{"Roman", "Marseille", "Gallimard"}, 2},
                   {{"Roman", "Marseille", "Hachette"}, 2},
                   {{"Scolaire", "Paris", "Hachette"}, 1},
                   {{"Essai", "Paris", "Hachette"}, 6},
                   {{"Scolaire", "Marseille", "Hachette"}, 1}});
}

// The seven-row refresh batch compared against document1.
inline Relation document2() {
  return Relation(bookstore_schema(),
                  {{{"Scolaire", "Marseille", "Gallimard"}, 3},
                   {{"Scolaire", "Paris", "Hachette"}, 3},
                   {{"Scolaire", "Marseille", "Hachette"}, 1},
                   {{"Roman", "Marseille", "Gallimard"}, 3},
                   {{"Essai", "Paris", "Hachette"}, 2},
                   {{"Essai", "Paris", "Gallimard"}, 2},
                   {{"Essai", "Marseille", "Hachette"}, 1}});
}

}  // namespace cube::testing
