#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "clustergroups/braid_graph.hpp"
#include "clustergroups/presentation.hpp"
#include "test_util.hpp"

using namespace clustergroups;
using testutil::factorial;
using testutil::oriented_triangle;
using testutil::sample_quiver_a4;

namespace {

std::multiset<Word> relator_set(const Presentation& p) {
  return std::multiset<Word>(p.relators.begin(), p.relators.end());
}

}  // namespace

TEST_CASE("cluster presentation of small quivers") {
  Presentation a2 = presentation_from_quiver(Quiver(2, {{1, 2, 1}}));
  CHECK(a2.generator_count == 2);
  CHECK(relator_set(a2) ==
        std::multiset<Word>{{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}});

  Presentation isolated = presentation_from_quiver(Quiver(2, {}));
  CHECK(relator_set(isolated) ==
        std::multiset<Word>{{1, 1}, {2, 2}, {1, 2, 1, 2}});

  Presentation lone = presentation_from_quiver(Quiver(1, {}));
  CHECK(relator_set(lone) == std::multiset<Word>{{1, 1}});

  // a pair joined by a double arrow contributes no braid relator
  Presentation kronecker = presentation_from_quiver(Quiver(2, {{1, 2, 2}}));
  CHECK(relator_set(kronecker) == std::multiset<Word>{{1, 1}, {2, 2}});
}

TEST_CASE("cycle relators equate consecutive cyclic words") {
  Presentation p = presentation_from_quiver(oriented_triangle());
  CHECK(p.relators.size() == 8);  // 3 involutions + 3 braid + 2 cycle
  std::multiset<Word> expected{
      {1, 1},
      {2, 2},
      {3, 3},
      {1, 2, 1, 2, 1, 2},
      {1, 3, 1, 3, 1, 3},
      {2, 3, 2, 3, 2, 3},
      // t1 t2 t3 t1 = t2 t3 t1 t2 and t2 t3 t1 t2 = t3 t1 t2 t3
      {1, 2, 3, 1, 2, 1, 3, 2},
      {2, 3, 1, 2, 3, 2, 1, 3},
  };
  CHECK(relator_set(p) == expected);

  // the sample quiver: one 3-cycle plus the tail vertex 4
  Presentation sample = presentation_from_quiver(sample_quiver_a4());
  // 4 involutions + 6 pair relators + 2 cycle relators
  CHECK(sample.relators.size() == 12);
}

TEST_CASE("a disjoint union presents as components plus commutation") {
  Quiver q1 = oriented_triangle();
  Quiver q2 = Quiver(2, {{1, 2, 1}});
  // union on 5 vertices: q1 on {1,2,3}, q2 on {4,5}
  std::vector<Arrow> arrows = q1.arrows();
  for (const Arrow& a : q2.arrows())
    arrows.push_back({a.source + 3, a.target + 3, a.mult});
  Presentation whole = presentation_from_quiver(Quiver(5, arrows));

  std::multiset<Word> expected;
  for (const Word& r : presentation_from_quiver(q1).relators)
    expected.insert(r);
  for (Word r : presentation_from_quiver(q2).relators) {
    for (int& letter : r) letter += 3;
    expected.insert(r);
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 4; j <= 5; ++j) expected.insert({i, j, i, j});
  CHECK(relator_set(whole) == expected);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce({1, 1}) == Word{});
  CHECK(free_reduce({1, 2, 2, 1}) == Word{});
  CHECK(free_reduce({1, 2, 1}) == Word{1, 2, 1});
  CHECK(free_reduce({}) == Word{});
  CHECK(free_reduce({3, 1, 1, 3, 2}) == Word{2});
}

TEST_CASE("homomorphism checking") {
  Presentation a2 = presentation_from_quiver(Quiver(2, {{1, 2, 1}}));
  CHECK(check_homomorphism(a2,
                           GeneratorImages(3, {{1, {1, 2}}, {2, {2, 3}}})));
  CHECK_FALSE(check_homomorphism(
      a2, GeneratorImages(4, {{1, {1, 2}}, {2, {3, 4}}})));

  Presentation commuting = presentation_from_quiver(Quiver(2, {}));
  CHECK(check_homomorphism(commuting,
                           GeneratorImages(2, {{1, {1, 2}}, {2, {1, 2}}})));

  CHECK_THROWS_AS(check_homomorphism(a2, GeneratorImages(3, {{1, {1, 2}}})),
                  UnknownGenerator);
}

TEST_CASE("coset enumeration computes indices") {
  Presentation a2 = presentation_from_quiver(Quiver(2, {{1, 2, 1}}));
  CHECK(todd_coxeter(a2, {}) == 6);
  CHECK(todd_coxeter(a2, {Word{1}}) == 3);
  CHECK(todd_coxeter(a2, {Word{1}, Word{2}}) == 1);

  CHECK(todd_coxeter(presentation_from_quiver(oriented_triangle()), {}) == 24);

  CHECK(group_order(presentation_from_quiver(linear_quiver(4))) ==
        factorial(5));

  CHECK(group_order(presentation_from_quiver(Quiver(1, {}))) == 2);

  // Klein four group
  CHECK(group_order(presentation_from_quiver(Quiver(2, {}))) == 4);

  // empty presentation: the trivial group
  CHECK(group_order(presentation_from_quiver(Quiver(0, {}))) == 1);
}

TEST_CASE("subgroup index divides the group order") {
  Presentation p = presentation_from_quiver(linear_quiver(3));
  std::uint64_t order = group_order(p);
  CHECK(order == factorial(4));
  for (const std::vector<Word>& subgroup :
       {std::vector<Word>{{1}}, std::vector<Word>{{1}, {2}},
        std::vector<Word>{{1}, {3}}, std::vector<Word>{{1, 2, 1}}}) {
    std::size_t index = todd_coxeter(p, subgroup);
    CAPTURE(index);
    CHECK(order % index == 0);
  }
}

TEST_CASE("complete coset tables have involution columns") {
  Presentation p = presentation_from_quiver(oriented_triangle());
  CosetTable table = coset_enumeration(p, {Word{1}});
  REQUIRE(table.complete);
  CHECK(table.coset_count == 12);
  REQUIRE(table.rows.size() == table.coset_count);
  for (std::size_t c = 0; c < table.rows.size(); ++c)
    for (int g = 0; g < p.generator_count; ++g) {
      int d = table.rows[c][g];
      REQUIRE(d >= 1);
      CHECK(table.rows[d - 1][g] == static_cast<int>(c) + 1);
    }
}

TEST_CASE("capped enumeration is inconclusive") {
  // no braid relator: the infinite dihedral group
  Presentation kronecker = presentation_from_quiver(Quiver(2, {{1, 2, 2}}));
  CHECK_THROWS_AS(todd_coxeter(kronecker, {}, 50), CapExceeded);
  CosetTable capped = coset_enumeration(kronecker, {}, 50);
  CHECK_FALSE(capped.complete);
}

TEST_CASE("presentation order agrees with the permutation realisation") {
  for (const Quiver& q :
       {Quiver(2, {{1, 2, 1}}), oriented_triangle(), sample_quiver_a4()}) {
    BraidGraph graph = braid_graph(triangulation_of_quiver(q));
    GeneratorImages images = pi_q(graph);
    std::vector<Permutation> generators;
    for (int i = 1; i <= q.vertex_count(); ++i)
      generators.push_back(images.image(i));
    std::uint64_t from_permutations =
        generate(images.degree(), generators).order();
    CHECK(group_order(presentation_from_quiver(q)) == from_permutations);
  }
}

TEST_CASE("mutation leaves the presentation order unchanged") {
  std::uint64_t expected = factorial(4);
  for (const Quiver& member : mutation_class(linear_quiver(3)))
    CHECK(group_order(presentation_from_quiver(member)) == expected);
}

TEST_CASE("presentation text export") {
  Presentation a2 = presentation_from_quiver(Quiver(2, {{1, 2, 1}}));
  CHECK(presentation_to_text(a2) == "1 1\n2 2\n1 2 1 2 1 2\n");
  CHECK(word_to_text({1, 2, 1}) == "t1 t2 t1");
  CHECK(word_to_text({}) == "");
}
