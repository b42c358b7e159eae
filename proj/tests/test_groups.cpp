#include <algorithm>
#include <map>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "clustergroups/groups.hpp"
#include "test_util.hpp"

using namespace clustergroups;
using testutil::factorial;

namespace {

Permutation cycle3(int degree, int a, int b, int c) {
  Permutation p(degree);
  std::vector<int> images = p.images();
  images[a - 1] = b;
  images[b - 1] = c;
  images[c - 1] = a;
  return Permutation::from_images(images);
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation id(3);
  CHECK(id.is_identity());
  CHECK(id(2) == 2);

  Permutation t = Permutation::transposition(4, 2, 4);
  CHECK(t(2) == 4);
  CHECK(t(4) == 2);
  CHECK(t(1) == 1);
  CHECK(compose(t, t).is_identity());
  CHECK(t.inverse() == t);

  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), Error);
  CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)), DegreeMismatch);
}

TEST_CASE("composition applies the right factor first") {
  Permutation a = Permutation::transposition(3, 1, 2);
  Permutation b = Permutation::transposition(3, 2, 3);
  // (1 2) o (2 3): 1 -> 2, 2 -> 3, 3 -> 1, evaluated pointwise
  Permutation product = compose(a, b);
  CHECK(product(1) == 2);
  CHECK(product(2) == 3);
  CHECK(product(3) == 1);
  CHECK(product == cycle3(3, 1, 2, 3));

  CHECK(compose(Permutation(3), b) == b);
  CHECK(compose(b, b.inverse()).is_identity());
}

TEST_CASE("cycle notation round trip") {
  Permutation p = compose(Permutation::transposition(5, 1, 2),
                          Permutation::transposition(5, 4, 5));
  CHECK(to_cycle_string(p) == "(1 2)(4 5)");
  CHECK(parse_permutation(5, "(1 2)(4 5)") == p);
  CHECK(parse_permutation(5, "(1,2)(4,5)") == p);
  CHECK(to_cycle_string(Permutation(4)) == "()");
  CHECK(parse_permutation(4, "()").is_identity());
  CHECK(parse_permutation(4, "e").is_identity());
  CHECK(to_cycle_string(cycle3(3, 1, 3, 2)) == "(1 3 2)");

  CHECK_THROWS_AS(parse_permutation(3, "(1 4)"), ParseError);
  CHECK_THROWS_AS(parse_permutation(3, "(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(parse_permutation(3, "(1 2"), ParseError);
}

TEST_CASE("generated closure computes exact orders") {
  CHECK(generate(3, {Permutation::transposition(3, 1, 2),
                     Permutation::transposition(3, 2, 3)})
            .order() == factorial(3));

  CHECK(generate(4, {}).order() == 1);

  // spanning star of K_4
  auto star = generate(4, {Permutation::transposition(4, 1, 4),
                           Permutation::transposition(4, 2, 4),
                           Permutation::transposition(4, 3, 4)});
  CHECK(star.order() == factorial(4));
  CHECK(star.contains(cycle3(4, 1, 2, 3)));

  CHECK_THROWS_AS(generate(5,
                           {Permutation::transposition(5, 1, 2),
                            Permutation::transposition(5, 2, 3),
                            Permutation::transposition(5, 3, 4),
                            Permutation::transposition(5, 4, 5)},
                           100),
                  CapExceeded);
  CHECK_THROWS_AS(generate(3, {Permutation(2)}), DegreeMismatch);
}

TEST_CASE("set partition construction and printing") {
  SetPartition p(4, {{3}, {1, 2}, {4}});
  CHECK(p.parts() == std::vector<std::vector<int>>{{1, 2}, {3}, {4}});
  CHECK(to_string(p) == "{1,2}{3}{4}");
  CHECK(parse_set_partition("{1,2}{3}{4}") == p);
  CHECK(parse_set_partition(" {3} {1, 2} {4}") == p);
  CHECK(SetPartition::singletons(3).parts().size() == 3);

  CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), Error);
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(parse_set_partition("{1,3}"), ParseError);
}

TEST_CASE("partition meet and join") {
  SetPartition a(4, {{1, 2}, {3}, {4}});
  SetPartition b(4, {{1}, {2, 3}, {4}});
  CHECK(partition_meet(a, b) == SetPartition::singletons(4));
  CHECK(partition_join(a, b) == SetPartition(4, {{1, 2, 3}, {4}}));

  SetPartition c(4, {{1, 2, 3}, {4}});
  SetPartition d(4, {{1, 2}, {3, 4}});
  CHECK(partition_meet(c, d) == SetPartition(4, {{1, 2}, {3}, {4}}));

  CHECK(partition_meet(a, a) == a);
  CHECK(partition_join(a, a) == a);
  CHECK(partition_join(SetPartition::singletons(4), d) == d);

  CHECK_THROWS_AS(partition_meet(a, SetPartition::singletons(3)),
                  DegreeMismatch);
}

TEST_CASE("partition lattice laws") {
  // all partitions of {1..4}
  std::vector<SetPartition> all;
  std::vector<int> part_of(4);
  auto enumerate = [&](auto&& self, int v, int max_id) -> void {
    if (v == 4) {
      std::map<int, std::vector<int>> groups;
      for (int i = 0; i < 4; ++i) groups[part_of[i]].push_back(i + 1);
      std::vector<std::vector<int>> parts;
      for (auto& [id, part] : groups) parts.push_back(part);
      all.push_back(SetPartition(4, std::move(parts)));
      return;
    }
    for (int id = 0; id <= max_id; ++id) {
      part_of[v] = id;
      self(self, v + 1, std::max(max_id, id + 1));
    }
  };
  part_of[0] = 0;
  enumerate(enumerate, 1, 1);
  REQUIRE(all.size() == 15);  // Bell(4)

  for (const auto& x : all)
    for (const auto& y : all) {
      CHECK(partition_meet(x, y) == partition_meet(y, x));
      CHECK(partition_join(x, y) == partition_join(y, x));
      // absorption
      CHECK(partition_join(x, partition_meet(x, y)) == x);
      CHECK(partition_meet(x, partition_join(x, y)) == x);
      // refines-consistency
      CHECK(refines(partition_meet(x, y), x));
      CHECK(refines(x, partition_join(x, y)));
      CHECK(refines(x, y) == (partition_meet(x, y) == x));
      for (const auto& z : all) {
        CHECK(partition_meet(partition_meet(x, y), z) ==
              partition_meet(x, partition_meet(y, z)));
        CHECK(partition_join(partition_join(x, y), z) ==
              partition_join(x, partition_join(y, z)));
      }
    }
}

TEST_CASE("refinement order") {
  CHECK(refines(SetPartition::singletons(3), SetPartition(3, {{1, 2, 3}})));
  SetPartition p(3, {{1, 2}, {3}});
  CHECK(refines(p, p));
  CHECK_FALSE(refines(p, SetPartition(3, {{1, 3}, {2}})));
}

TEST_CASE("young subgroups") {
  YoungSubgroup whole{SetPartition(5, {{1, 2, 3, 4, 5}})};
  CHECK(young_order(whole) == 120);
  CHECK(young_order(YoungSubgroup{SetPartition::singletons(4)}) == 1);
  YoungSubgroup split{SetPartition(5, {{1, 2, 3}, {4, 5}})};
  CHECK(young_order(split) == 12);

  CHECK(young_contains(split, Permutation(5)));
  CHECK(young_contains(split, Permutation::transposition(5, 4, 5)));
  CHECK_FALSE(young_contains(split, Permutation::transposition(5, 3, 4)));
  CHECK(young_contains(YoungSubgroup{SetPartition(4, {{1, 2}, {3, 4}})},
                       compose(Permutation::transposition(4, 1, 2),
                               Permutation::transposition(4, 3, 4))));
  CHECK_FALSE(young_contains(YoungSubgroup{SetPartition(3, {{1, 2}, {3}})},
                             Permutation::transposition(3, 1, 3)));

  auto elements = young_elements(split);
  CHECK(elements.size() == 12);
  for (const Permutation& p : elements) CHECK(young_contains(split, p));
  CHECK(std::is_sorted(elements.begin(), elements.end()));
  CHECK(std::adjacent_find(elements.begin(), elements.end()) ==
        elements.end());

  // the enumeration agrees with the breadth-first closure of the
  // part-internal adjacent transpositions
  auto generated = generate(5, {Permutation::transposition(5, 1, 2),
                                Permutation::transposition(5, 2, 3),
                                Permutation::transposition(5, 4, 5)});
  CHECK(generated.elements == elements);
}

TEST_CASE("generator images and word evaluation") {
  GeneratorImages images(3, {{1, {1, 2}}, {2, {2, 3}}});
  CHECK(images.image(1) == Permutation::transposition(3, 1, 2));
  CHECK_THROWS_AS(images.image(3), UnknownGenerator);
  CHECK_THROWS_AS(GeneratorImages(3, {{1, {2, 2}}}), Error);

  CHECK(evaluate_word({}, images).is_identity());
  CHECK(evaluate_word({2, 2}, images).is_identity());

  // leftmost first: 1 goes to 2 under t1, then to 3 under t2
  Permutation w = evaluate_word({1, 2, 1}, images);
  CHECK(w == Permutation::transposition(3, 1, 3));

  CHECK_THROWS_AS(evaluate_word({7}, images), UnknownGenerator);
}
