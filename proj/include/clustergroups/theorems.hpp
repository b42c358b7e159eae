#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "clustergroups/braid_graph.hpp"
#include "clustergroups/errors.hpp"
#include "clustergroups/groups.hpp"
#include "clustergroups/presentation.hpp"
#include "clustergroups/quiver.hpp"
#include "clustergroups/triangulation.hpp"

namespace clustergroups {

struct Failure {
  std::string instance;
  std::string expected;
  std::string actual;

  friend auto operator<=>(const Failure&, const Failure&) = default;
};

// Outcome of one verification suite. A suite passes when it has no failures;
// inconclusive entries record instances abandoned at a resource cap and are
// reported separately, never as failures.
struct VerificationReport {
  std::string statement;
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  std::vector<std::string> inconclusive;
  std::int64_t ms = 0;

  bool passed() const { return failures.empty(); }
  bool conclusive() const { return inconclusive.empty(); }
};

namespace detail {

struct Outcome {
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
  std::vector<std::string> inconclusive;

  void fail(std::string instance, std::string expected, std::string actual) {
    failures.push_back({std::move(instance), std::move(expected),
                        std::move(actual)});
  }
};

inline void append(VerificationReport& report, Outcome outcome) {
  report.checked += outcome.checked;
  for (auto& f : outcome.failures) report.failures.push_back(std::move(f));
  for (auto& i : outcome.inconclusive)
    report.inconclusive.push_back(std::move(i));
}

// Runs fn(0..count-1) across a small thread pool and merges the outcomes in
// instance order, so reports are deterministic regardless of scheduling.
template <class Fn>
inline void run_instances(std::size_t count, VerificationReport& report,
                          Fn&& fn) {
  if (count == 0) return;
  const unsigned workers = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), count);
  if (workers <= 1 || count < 16) {
    for (std::size_t i = 0; i < count; ++i) append(report, fn(i));
    return;
  }
  std::vector<Outcome> outcomes(count);
  std::vector<std::exception_ptr> errors(workers);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count;
             i = next.fetch_add(1))
          outcomes[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& thread : pool) thread.join();
  for (auto& error : errors)
    if (error) std::rethrow_exception(error);
  for (auto& outcome : outcomes) append(report, std::move(outcome));
}

class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& report) : report_(report) {}
  ~ReportTimer() {
    report_.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start_)
                     .count();
  }

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline std::string subset_to_string(const std::set<int>& subset) {
  std::string out = "{";
  for (int v : subset) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + "}";
}

inline std::set<int> subset_from_mask(int n, unsigned mask) {
  std::set<int> subset;
  for (int i = 1; i <= n; ++i)
    if (mask >> (i - 1) & 1u) subset.insert(i);
  return subset;
}

inline std::set<int> full_generator_set(int n) {
  std::set<int> all;
  for (int i = 1; i <= n; ++i) all.insert(i);
  return all;
}

// Shared prologue of the group-side suites: type, triangulation, braid
// graph, and generator images of a mutation-Dynkin type A quiver.
struct Realization {
  MutationTypeA type;
  MultiTriangulation triangulation;
  BraidGraph graph;
  GeneratorImages images;

  std::uint64_t young_order_of_blocks() const {
    std::uint64_t order = 1;
    for (const auto& block : graph.blocks)
      order *= detail::factorial(block.size());
    return order;
  }
};

inline Realization realize(const Quiver& q, std::size_t class_cap) {
  auto type = mutation_type_a(q, class_cap);
  if (!type)
    throw NotMutationTypeA("quiver " + to_string(q) +
                           " is not of mutation-Dynkin type A");
  MultiTriangulation mt = triangulation_of_quiver(q, class_cap);
  BraidGraph graph = braid_graph(mt);
  GeneratorImages images = pi_q(graph);
  return {std::move(*type), std::move(mt), std::move(graph),
          std::move(images)};
}

}  // namespace detail

// Flip/mutation commutation: for every triangulation of the m-gon and every
// diagonal label, flipping and taking the quiver equals mutating the quiver.
inline VerificationReport verify_flip_mutation(int m) {
  VerificationReport report;
  report.statement = "flip-mutation(m=" + std::to_string(m) + ")";
  detail::ReportTimer timer(report);
  if (m < 4) throw Error("flip-mutation needs a polygon with a diagonal");

  const auto all = enumerate_triangulations(m);
  const int diagonals = m - 3;
  detail::run_instances(
      all.size() * diagonals, report, [&](std::size_t index) {
        detail::Outcome outcome;
        const Triangulation& t = all[index / diagonals];
        const int label = static_cast<int>(index % diagonals) + 1;
        MultiTriangulation mt = MultiTriangulation::single(t);
        Quiver before = quiver_of(mt);
        auto [flipped, created] = flip(t, mt.locate(label).second);
        auto labels = mt.labels();
        labels[label] = {0, created};
        Quiver after = quiver_of(MultiTriangulation({flipped}, labels));
        Quiver expected = mutate(before, label);
        outcome.checked = 1;
        if (after != expected)
          outcome.fail(to_string(t) + " flip t" + std::to_string(label),
                       to_string(expected), to_string(after));
        return outcome;
      });
  return report;
}

// Well-definedness of the braid graph and the rotation/quiver bijection:
// triangulations of the (n+3)-gon with isomorphic quivers have braid graphs
// matching edge-for-edge under the quiver isomorphism, and each quiver
// isomorphism class is a single rotation orbit.
inline VerificationReport verify_braid_graph_well_defined(int n) {
  VerificationReport report;
  detail::ReportTimer timer(report);
  if (n < 2) throw Error("the rotation bijection needs n >= 2");

  const auto all = enumerate_triangulations(n + 3);
  std::vector<Quiver> quivers;
  std::vector<BraidGraph> graphs;
  std::map<Quiver, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < all.size(); ++i) {
    MultiTriangulation mt = MultiTriangulation::single(all[i]);
    quivers.push_back(quiver_of(mt));
    graphs.push_back(braid_graph(mt));
    classes[canonical_form(quivers.back())].push_back(i);
  }
  std::set<std::vector<Diagonal>> orbits;
  for (const Triangulation& t : all) {
    std::vector<Diagonal> least = t.diagonals();
    const int m = t.polygon_size();
    for (int k = 0; k < m; ++k) {
      std::vector<Diagonal> rotated;
      for (const Diagonal& d : t.diagonals())
        rotated.push_back(
            make_diagonal((d.first + k) % m, (d.second + k) % m));
      std::sort(rotated.begin(), rotated.end());
      least = std::min(least, rotated);
    }
    orbits.insert(least);
  }
  report.statement = "braid-graph(n=" + std::to_string(n) + "): " +
                     std::to_string(all.size()) + " triangulations, " +
                     std::to_string(classes.size()) + " quiver classes, " +
                     std::to_string(orbits.size()) + " rotation orbits";
  if (classes.size() != orbits.size())
    report.failures.push_back({"class/orbit census",
                               std::to_string(classes.size()) + " classes",
                               std::to_string(orbits.size()) + " orbits"});

  for (const auto& [canonical, members] : classes) {
    const std::size_t rep = members.front();
    for (std::size_t member : members) {
      if (member == rep) continue;
      report.checked += 2;
      auto sigma = are_isomorphic(quivers[member], quivers[rep]);
      if (!sigma) {
        report.failures.push_back(
            {to_string(all[member]) + " vs " + to_string(all[rep]),
             "isomorphic quivers within a canonical class", "no isomorphism"});
        continue;
      }
      std::map<int, int> rename;
      for (std::size_t i = 0; i < sigma->size(); ++i)
        rename[static_cast<int>(i) + 1] = (*sigma)[i];
      if (!labeled_graph_isomorphic(
              relabel_edges(graphs[member].graph, rename), graphs[rep].graph))
        report.failures.push_back(
            {to_string(all[member]) + " vs " + to_string(all[rep]),
             "braid graphs isomorphic with matching labels", "mismatch"});
      if (!rotation_equivalent(all[member], all[rep]))
        report.failures.push_back(
            {to_string(all[member]) + " vs " + to_string(all[rep]),
             "same rotation orbit", "different orbits"});
    }
  }
  return report;
}

// The cluster group of a type A quiver is the Young subgroup of the blocks:
// the relators hold under pi_Q, the transpositions generate a group of order
// prod (n_j + 1)!, and coset enumeration of the presentation agrees.
inline VerificationReport verify_group_iso(
    const Quiver& q, std::size_t class_cap = kDefaultClassCap,
    std::size_t coset_cap = kDefaultCosetCap,
    std::size_t element_cap = kDefaultElementCap) {
  VerificationReport report;
  report.statement = "group-iso(" + to_string(q) + ")";
  detail::ReportTimer timer(report);
  detail::Realization real = detail::realize(q, class_cap);

  std::uint64_t expected = 1;
  for (int part : real.type.parts) expected *= detail::factorial(part + 1);

  Presentation presentation = presentation_from_quiver(q);
  report.checked += 1;
  if (!check_homomorphism(presentation, real.images))
    report.failures.push_back(
        {"relators under pi_Q", "all evaluate to the identity", "violated"});

  report.checked += 1;
  std::vector<Permutation> generators;
  for (int i = 1; i <= q.vertex_count(); ++i)
    generators.push_back(real.images.image(i));
  try {
    std::uint64_t order =
        generate(real.images.degree(), generators, element_cap).order();
    if (order != expected)
      report.failures.push_back({"generated transposition group",
                                 std::to_string(expected),
                                 std::to_string(order)});
  } catch (const CapExceeded& e) {
    report.inconclusive.push_back(std::string("generate: ") + e.what());
  }

  report.checked += 1;
  try {
    std::uint64_t order = group_order(presentation, coset_cap);
    if (order != expected)
      report.failures.push_back({"coset enumeration order",
                                 std::to_string(expected),
                                 std::to_string(order)});
  } catch (const CapExceeded& e) {
    report.inconclusive.push_back(std::string("todd-coxeter: ") + e.what());
  }
  return report;
}

// Lattice identities of the component partitions: rho_{I cap J} equals
// rho_I meet rho_J and rho_{I cup J} equals rho_I join rho_J over all
// ordered subset pairs.
inline VerificationReport verify_partition_lattice(
    const Quiver& q, std::size_t class_cap = kDefaultClassCap) {
  VerificationReport report;
  report.statement = "partition-lattice(" + to_string(q) + ")";
  detail::ReportTimer timer(report);
  detail::Realization real = detail::realize(q, class_cap);

  const int n = q.vertex_count();
  const unsigned subsets = 1u << n;
  std::vector<SetPartition> rhos;
  rhos.reserve(subsets);
  for (unsigned mask = 0; mask < subsets; ++mask)
    rhos.push_back(rho(real.graph, detail::subset_from_mask(n, mask)));

  detail::run_instances(
      static_cast<std::size_t>(subsets) * subsets, report,
      [&](std::size_t index) {
        detail::Outcome outcome;
        const unsigned i = static_cast<unsigned>(index / subsets);
        const unsigned j = static_cast<unsigned>(index % subsets);
        outcome.checked = 1;
        std::string pair = "I=" +
                           detail::subset_to_string(
                               detail::subset_from_mask(n, i)) +
                           " J=" +
                           detail::subset_to_string(
                               detail::subset_from_mask(n, j));
        if (rhos[i & j] != partition_meet(rhos[i], rhos[j]))
          outcome.fail(pair, "rho(I cap J) = rho(I) meet rho(J)",
                       to_string(rhos[i & j]));
        if (rhos[i | j] != partition_join(rhos[i], rhos[j]))
          outcome.fail(pair, "rho(I cup J) = rho(I) join rho(J)",
                       to_string(rhos[i | j]));
        return outcome;
      });
  return report;
}

// The order isomorphism and the group-side lattice: subset inclusion, the
// refinement order and Young membership of generator images all coincide,
// parabolic element sets intersect as the subset lattice predicts, and every
// generated parabolic equals its Young subgroup elementwise.
inline VerificationReport verify_lattice_isomorphism(
    const Quiver& q, std::size_t class_cap = kDefaultClassCap,
    std::size_t element_cap = kDefaultElementCap) {
  VerificationReport report;
  report.statement = "lattice-iso(" + to_string(q) + ")";
  detail::ReportTimer timer(report);
  detail::Realization real = detail::realize(q, class_cap);

  const int n = q.vertex_count();
  const unsigned subsets = 1u << n;
  std::vector<SetPartition> rhos;
  std::vector<GeneratedGroup> groups;
  for (unsigned mask = 0; mask < subsets; ++mask) {
    std::set<int> subset = detail::subset_from_mask(n, mask);
    rhos.push_back(rho(real.graph, subset));
    std::vector<Permutation> generators;
    for (int i : subset) generators.push_back(real.images.image(i));
    groups.push_back(generate(real.images.degree(), generators, element_cap));
  }

  // each parabolic is exactly its Young subgroup
  for (unsigned mask = 0; mask < subsets; ++mask) {
    report.checked += 1;
    YoungSubgroup young{rhos[mask]};
    bool inside = true;
    for (const Permutation& p : groups[mask].elements)
      inside = inside && young_contains(young, p);
    if (!inside || groups[mask].order() != young_order(young))
      report.failures.push_back(
          {"I=" + detail::subset_to_string(detail::subset_from_mask(n, mask)),
           "G_I = Y(rho_I) with order " + std::to_string(young_order(young)),
           std::to_string(groups[mask].order()) +
               (inside ? "" : ", and an element escapes Y(rho_I)")});
  }

  detail::run_instances(
      static_cast<std::size_t>(subsets) * subsets, report,
      [&](std::size_t index) {
        detail::Outcome outcome;
        const unsigned i = static_cast<unsigned>(index / subsets);
        const unsigned j = static_cast<unsigned>(index % subsets);
        std::set<int> I = detail::subset_from_mask(n, i);
        std::set<int> J = detail::subset_from_mask(n, j);
        std::string pair = "I=" + detail::subset_to_string(I) +
                           " J=" + detail::subset_to_string(J);

        outcome.checked += 1;
        const bool subset_order = (i & ~j) == 0;
        const bool partition_order = refines(rhos[i], rhos[j]);
        bool image_order = true;
        YoungSubgroup young_j{rhos[j]};
        for (int g : I)
          image_order =
              image_order && young_contains(young_j, real.images.image(g));
        if (subset_order != partition_order || subset_order != image_order)
          outcome.fail(pair,
                       "I in J <=> rho_I <= rho_J <=> images of I in Y(rho_J)",
                       std::string("inclusion=") +
                           (subset_order ? "y" : "n") + " refines=" +
                           (partition_order ? "y" : "n") + " young=" +
                           (image_order ? "y" : "n"));

        // meets of parabolics are the parabolics of intersections
        outcome.checked += 1;
        std::vector<Permutation> common;
        std::set_intersection(groups[i].elements.begin(),
                              groups[i].elements.end(),
                              groups[j].elements.begin(),
                              groups[j].elements.end(),
                              std::back_inserter(common));
        if (common != groups[i & j].elements)
          outcome.fail(pair, "G_I cap G_J = G_{I cap J}",
                       std::to_string(common.size()) + " common elements vs " +
                           std::to_string(groups[i & j].order()));
        return outcome;
      });
  return report;
}

// G_I meets the defining generators in exactly I: images of generators
// outside I escape Y(rho_I).
inline VerificationReport verify_generator_intersection(
    const Quiver& q, std::size_t class_cap = kDefaultClassCap) {
  VerificationReport report;
  report.statement = "generator-intersection(" + to_string(q) + ")";
  detail::ReportTimer timer(report);
  detail::Realization real = detail::realize(q, class_cap);

  const int n = q.vertex_count();
  const unsigned subsets = 1u << n;
  detail::run_instances(subsets, report, [&](std::size_t mask) {
    detail::Outcome outcome;
    std::set<int> I =
        detail::subset_from_mask(n, static_cast<unsigned>(mask));
    YoungSubgroup young{rho(real.graph, I)};
    for (int g = 1; g <= n; ++g) {
      outcome.checked += 1;
      bool member = young_contains(young, real.images.image(g));
      bool expected = I.count(g) > 0;
      if (member != expected)
        outcome.fail("I=" + detail::subset_to_string(I) + " generator t" +
                         std::to_string(g),
                     expected ? "t_g in G_I" : "t_g not in G_I",
                     member ? "member" : "excluded");
    }
    return outcome;
  });
  return report;
}

// Parabolic presentations: the full subquiver Q_I is again of type A, its
// cluster presentation maps onto the parabolic via t'_i -> t_i, the orders
// of presentation, Young subgroup, and generated subgroup agree, and the
// braid graph of the cut triangulation is Gamma_I.
inline VerificationReport verify_parabolic_presentation(
    const Quiver& q, const std::set<int>& I,
    std::size_t class_cap = kDefaultClassCap,
    std::size_t coset_cap = kDefaultCosetCap,
    std::size_t element_cap = kDefaultElementCap) {
  VerificationReport report;
  report.statement = "parabolic(" + to_string(q) +
                     ", I=" + detail::subset_to_string(I) + ")";
  detail::ReportTimer timer(report);
  detail::Realization real = detail::realize(q, class_cap);
  const int n = q.vertex_count();
  const std::string name = "I=" + detail::subset_to_string(I);

  Subquiver sub = full_subquiver(q, I);

  // (i) full subquivers of type A quivers are again of type A
  report.checked += 1;
  if (!I.empty() && !mutation_type_a(sub.quiver, class_cap))
    report.failures.push_back(
        {name, "Q_I of mutation-Dynkin type A", to_string(sub.quiver)});

  // (ii) t'_i -> t_i respects the relators of Q_I
  report.checked += 1;
  std::map<int, std::pair<int, int>> restricted;
  for (int v = 1; v <= sub.quiver.vertex_count(); ++v)
    restricted[v] = real.images.transposition_of(sub.original_vertex[v - 1]);
  GeneratorImages images_i(real.images.degree(), std::move(restricted));
  Presentation presentation_i = presentation_from_quiver(sub.quiver);
  if (!check_homomorphism(presentation_i, images_i))
    report.failures.push_back(
        {name, "relators of Q_I hold under t'_i -> t_i", "violated"});

  // (iii) |G_{Q_I}| = |Y(rho_I)| = |<images of I>|
  report.checked += 1;
  std::uint64_t young = young_order(YoungSubgroup{rho(real.graph, I)});
  try {
    std::uint64_t presented = group_order(presentation_i, coset_cap);
    std::vector<Permutation> generators;
    for (int i : I) generators.push_back(real.images.image(i));
    std::uint64_t generated =
        generate(real.images.degree(), generators, element_cap).order();
    if (presented != young || generated != young)
      report.failures.push_back(
          {name, "orders " + std::to_string(young) + " on all three routes",
           "presentation " + std::to_string(presented) + ", generated " +
               std::to_string(generated)});
  } catch (const CapExceeded& e) {
    report.inconclusive.push_back(name + ": " + e.what());
  }

  // (iv) the braid graph of the cut triangulation is Gamma_I
  report.checked += 1;
  std::set<int> removed;
  for (int g = 1; g <= n; ++g)
    if (!I.count(g)) removed.insert(g);
  BraidGraph from_cut = braid_graph(cut_along(real.triangulation, removed).triangulation);
  LabeledGraph gamma_i = delete_edges(real.graph, I);
  if (!labeled_graph_isomorphic(from_cut.graph, gamma_i))
    report.failures.push_back(
        {name, "braid graph of the cut equals Gamma_I", "mismatch"});
  return report;
}

// All subsets at once.
inline VerificationReport verify_parabolic_presentations(
    const Quiver& q, std::size_t class_cap = kDefaultClassCap,
    std::size_t coset_cap = kDefaultCosetCap,
    std::size_t element_cap = kDefaultElementCap) {
  VerificationReport report;
  report.statement = "parabolic(" + to_string(q) + ", all subsets)";
  detail::ReportTimer timer(report);
  const int n = q.vertex_count();
  detail::run_instances(1u << n, report, [&](std::size_t mask) {
    VerificationReport single = verify_parabolic_presentation(
        q, detail::subset_from_mask(n, static_cast<unsigned>(mask)),
        class_cap, coset_cap, element_cap);
    detail::Outcome outcome;
    outcome.checked = single.checked;
    outcome.failures = std::move(single.failures);
    outcome.inconclusive = std::move(single.inconclusive);
    return outcome;
  });
  return report;
}

// Mutation invariance of the presentation order across the mutation class
// (or the class truncated to a BFS depth when depth > 0).
inline VerificationReport verify_mutation_invariance(
    const Quiver& q, int depth = 0, std::size_t class_cap = kDefaultClassCap,
    std::size_t coset_cap = kDefaultCosetCap) {
  VerificationReport report;
  report.statement = "mutation-invariance(" + to_string(q) + ")";
  detail::ReportTimer timer(report);

  std::uint64_t expected = 0;
  try {
    expected = group_order(presentation_from_quiver(q), coset_cap);
  } catch (const CapExceeded& e) {
    report.inconclusive.push_back(std::string("base order: ") + e.what());
    return report;
  }

  std::set<Quiver> members{canonical_form(q)};
  std::vector<Quiver> frontier(members.begin(), members.end());
  for (int level = 0; !frontier.empty() && (depth <= 0 || level < depth);
       ++level) {
    std::vector<Quiver> next;
    for (const Quiver& member : frontier)
      for (int v = 1; v <= member.vertex_count(); ++v) {
        Quiver c = canonical_form(mutate(member, v));
        if (members.insert(c).second) {
          if (members.size() > class_cap)
            throw CapExceeded("mutation class exceeds cap");
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }

  std::vector<Quiver> ordered(members.begin(), members.end());
  detail::run_instances(ordered.size(), report, [&](std::size_t i) {
    detail::Outcome outcome;
    outcome.checked = 1;
    try {
      std::uint64_t order =
          group_order(presentation_from_quiver(ordered[i]), coset_cap);
      if (order != expected)
        outcome.fail(to_string(ordered[i]), std::to_string(expected),
                     std::to_string(order));
    } catch (const CapExceeded& e) {
      outcome.inconclusive.push_back(to_string(ordered[i]) + ": " + e.what());
    }
    return outcome;
  });
  return report;
}

// Direct products: the order of the disjoint union is the product of the
// component orders.
inline VerificationReport verify_direct_product(
    const Quiver& q1, const Quiver& q2,
    std::size_t coset_cap = kDefaultCosetCap) {
  VerificationReport report;
  report.statement =
      "direct-product(" + to_string(q1) + " | " + to_string(q2) + ")";
  detail::ReportTimer timer(report);

  std::vector<Arrow> arrows = q1.arrows();
  for (const Arrow& a : q2.arrows())
    arrows.push_back({a.source + q1.vertex_count(),
                      a.target + q1.vertex_count(), a.mult});
  Quiver joined(q1.vertex_count() + q2.vertex_count(), std::move(arrows));

  report.checked += 1;
  try {
    std::uint64_t left = group_order(presentation_from_quiver(q1), coset_cap);
    std::uint64_t right = group_order(presentation_from_quiver(q2), coset_cap);
    std::uint64_t whole =
        group_order(presentation_from_quiver(joined), coset_cap);
    if (whole != left * right)
      report.failures.push_back(
          {"disjoint union order", std::to_string(left * right),
           std::to_string(whole)});
  } catch (const CapExceeded& e) {
    report.inconclusive.push_back(e.what());
  }
  return report;
}

// One canonical representative per quiver isomorphism class arising from
// triangulations of the (n+3)-gon; exhaustive for mutation-Dynkin type A_n.
inline std::vector<Quiver> type_a_class_representatives(int n) {
  std::set<Quiver> seen;
  for (const Triangulation& t : enumerate_triangulations(n + 3))
    seen.insert(canonical_form(quiver_of(MultiTriangulation::single(t))));
  return std::vector<Quiver>(seen.begin(), seen.end());
}

}  // namespace clustergroups
