#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cube/errors.hpp"
#include "cube/lattice.hpp"
#include "cube/relation.hpp"

#include "test_util.hpp"

#include <algorithm>

using namespace cube;
using cube::testing::t;

TEST_CASE("generalization order basics") {
  CHECK(generalizes(t({"Roman", "ALL", "ALL"}), t({"Roman", "Marseille", "Gallimard"})));
  CHECK_FALSE(generalizes(t({"Roman", "Marseille", "Gallimard"}), t({"Roman", "ALL", "ALL"})));
  CHECK_FALSE(generalizes(t({"Roman", "ALL", "ALL"}), t({"Scolaire", "Paris", "ALL"})));

  // every tuple generalizes bottom; bottom generalizes only itself
  CHECK(generalizes(t({"Roman", "ALL", "ALL"}), Tuple::bottom()));
  CHECK(generalizes(Tuple::bottom(), Tuple::bottom()));
  CHECK_FALSE(generalizes(Tuple::bottom(), t({"Roman", "ALL", "ALL"})));

  CHECK_THROWS_AS(generalizes(t({"Roman", "ALL"}), t({"Roman", "ALL", "ALL"})),
                  std::invalid_argument);
}

TEST_CASE("sum keeps common coordinates") {
  CHECK(tuple_sum(t({"Roman", "Marseille", "Gallimard"}), t({"Roman", "Marseille", "Hachette"})) ==
        t({"Roman", "Marseille", "ALL"}));
  CHECK(tuple_sum(t({"Roman", "Marseille", "Gallimard"}), t({"Essai", "Paris", "Hachette"})) ==
        t({"ALL", "ALL", "ALL"}));
  const Tuple u = t({"Scolaire", "Paris", "ALL"});
  CHECK(tuple_sum(u, u) == u);
  CHECK(tuple_sum(u, Tuple::bottom()) == u);
  CHECK(tuple_sum(Tuple::bottom(), Tuple::bottom()) == Tuple::bottom());
}

TEST_CASE("product merges or collapses to bottom") {
  CHECK(tuple_product(t({"Roman", "ALL", "ALL"}), t({"ALL", "Marseille", "ALL"})) ==
        t({"Roman", "Marseille", "ALL"}));
  CHECK(tuple_product(t({"Roman", "ALL", "ALL"}), t({"Scolaire", "ALL", "ALL"})) ==
        Tuple::bottom());
  const Tuple u = t({"Essai", "Paris", "Hachette"});
  CHECK(tuple_product(u, t({"ALL", "ALL", "ALL"})) == u);
  CHECK(tuple_product(u, Tuple::bottom()) == Tuple::bottom());
}

TEST_CASE("meet and join fold sum and product") {
  const std::vector<Tuple> triple = {t({"Roman", "Marseille", "Gallimard"}),
                                     t({"Roman", "Marseille", "Hachette"}),
                                     t({"Scolaire", "Paris", "Hachette"})};
  CHECK(meet(triple) == t({"ALL", "ALL", "ALL"}));

  const std::vector<Tuple> single = {t({"Essai", "Paris", "ALL"})};
  CHECK(join(single) == single[0]);
  CHECK(meet(single) == single[0]);

  const std::vector<Tuple> disjoint = {t({"Roman", "ALL", "ALL"}),
                                       t({"ALL", "Marseille", "ALL"}),
                                       t({"ALL", "ALL", "Gallimard"})};
  CHECK(join(disjoint) == t({"Roman", "Marseille", "Gallimard"}));

  CHECK_THROWS_AS(meet(std::vector<Tuple>{}), std::invalid_argument);
  CHECK_THROWS_AS(join(std::vector<Tuple>{}), std::invalid_argument);
}

TEST_CASE("space enumeration matches the domain product") {
  const Relation doc1 = cube::testing::document1();
  const auto space = enumerate_space(doc1);
  CHECK(space.size() == 37);  // 4 * 3 * 3 + 1
  CHECK(CubeSpace(doc1).cell_count() == 37);

  // every row, read as a tuple, belongs to the space
  for (std::size_t i = 0; i < doc1.rows().size(); ++i) {
    CHECK(std::count(space.begin(), space.end(), doc1.row_tuple(i)) == 1);
  }
  CHECK(std::count(space.begin(), space.end(), Tuple::bottom()) == 1);

  const Relation tiny(Schema({"A", "B"}, "m"), {{{"x", "y"}, 1}});
  CHECK(enumerate_space(tiny).size() == 5);  // 2 * 2 + 1
}

TEST_CASE("enumeration is canonically ordered and duplicate-free") {
  const auto space = enumerate_space(cube::testing::document1());
  CHECK(std::is_sorted(space.begin(), space.end(), CanonicalLess{}));
  CHECK(std::adjacent_find(space.begin(), space.end()) == space.end());
  CHECK(space.back() == Tuple::bottom());
}

TEST_CASE("partial order and lattice laws hold on the whole space") {
  const auto space = enumerate_space(cube::testing::document1());

  for (const Tuple& u : space) {
    CHECK(generalizes(u, u));
    for (const Tuple& v : space) {
      const bool uv = generalizes(u, v);
      const bool vu = generalizes(v, u);
      if (uv && vu) CHECK(u == v);

      // order characterization through the two operators
      CHECK(uv == (tuple_sum(u, v) == u));
      CHECK(uv == (tuple_product(u, v) == v));

      // commutativity, idempotence, absorption
      CHECK(tuple_sum(u, v) == tuple_sum(v, u));
      CHECK(tuple_product(u, v) == tuple_product(v, u));
      CHECK(tuple_sum(u, tuple_product(u, v)) == u);
      CHECK(tuple_product(u, tuple_sum(u, v)) == u);
    }
  }
}

TEST_CASE("sum and product are the tight bounds") {
  const auto space = enumerate_space(cube::testing::document1());
  for (const Tuple& u : space) {
    for (const Tuple& v : space) {
      const Tuple s = tuple_sum(u, v);
      CHECK(generalizes(s, u));
      CHECK(generalizes(s, v));
      const Tuple p = tuple_product(u, v);
      CHECK(generalizes(u, p));
      CHECK(generalizes(v, p));
      for (const Tuple& w : space) {
        if (generalizes(w, u) && generalizes(w, v)) CHECK(generalizes(w, s));
        if (generalizes(u, w) && generalizes(v, w)) CHECK(generalizes(p, w));
      }
    }
  }
}

TEST_CASE("canonical order sorts ALL last and bottom last of all") {
  CHECK(canonical_less(t({"Essai", "ALL", "ALL"}), t({"Roman", "ALL", "ALL"})));
  CHECK(canonical_less(t({"Roman", "Marseille", "ALL"}), t({"Roman", "ALL", "ALL"})));
  CHECK(canonical_less(t({"ALL", "ALL", "ALL"}), Tuple::bottom()));
  CHECK_FALSE(canonical_less(Tuple::bottom(), Tuple::bottom()));
}

TEST_CASE("antichain and extremal element helpers") {
  const std::vector<Tuple> chain = {t({"Roman", "ALL", "ALL"}),
                                    t({"Roman", "Marseille", "ALL"})};
  CHECK_FALSE(is_antichain(chain));
  CHECK(minimal_elements(chain) == std::vector<Tuple>{t({"Roman", "ALL", "ALL"})});
  CHECK(maximal_elements(chain) == std::vector<Tuple>{t({"Roman", "Marseille", "ALL"})});

  const std::vector<Tuple> anti = {t({"Roman", "ALL", "ALL"}), t({"ALL", "Paris", "ALL"})};
  CHECK(is_antichain(anti));
  CHECK(minimal_elements(anti).size() == 2);
}

TEST_CASE("reserved wildcard label is rejected") {
  CHECK_THROWS_AS(DimensionValue::label("ALL"), DataError);
  CHECK_THROWS_AS(Relation(cube::testing::bookstore_schema(), {{{"ALL", "Paris", "Hachette"}, 1}}),
                  DataError);
}

TEST_CASE("relations validate measures and arity") {
  const Schema schema = cube::testing::bookstore_schema();
  CHECK_THROWS_AS(Relation(schema, {{{"Roman", "Paris", "Hachette"}, 0}}), DataError);
  CHECK_THROWS_AS(Relation(schema, {{{"Roman", "Paris", "Hachette"}, -2}}), DataError);
  CHECK_THROWS_AS(Relation(schema, {{{"Roman", "Paris"}, 1}}), DataError);
  CHECK_THROWS_AS(Schema({}, "m"), DataError);
  CHECK_THROWS_AS(Schema({"A", "A"}, "m"), DataError);
}

TEST_CASE("two-relation spaces union the active domains") {
  const Relation doc1 = cube::testing::document1();
  const Relation doc2 = cube::testing::document2();
  const CubeSpace joint(doc1, doc2);
  CHECK(joint.cell_count() == 37);
  CHECK(joint.relation_count() == 2);

  const Relation other(Schema({"X"}, "m"), {{{"a"}, 1}});
  CHECK_THROWS_AS(CubeSpace(doc1, other), DataError);
}
