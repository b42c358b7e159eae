// End-to-end acceptance suite. Runs every criterion with its frozen expected
// values and time budget, prints one PASS/FAIL line per criterion, and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "clustergroups/braid_graph.hpp"
#include "clustergroups/groups.hpp"
#include "clustergroups/presentation.hpp"
#include "clustergroups/quiver.hpp"
#include "clustergroups/theorems.hpp"
#include "clustergroups/triangulation.hpp"

using namespace clustergroups;

namespace {

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

Quiver sample_quiver() {
  return Quiver(4, {{2, 1, 1}, {3, 2, 1}, {1, 3, 1}, {4, 3, 1}});
}

int failed = 0;

void criterion(int id, const std::string& name, std::int64_t budget_ms,
               const std::function<bool(std::string&)>& run) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = run(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (ms > budget_ms) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over budget of ") +
              std::to_string(budget_ms) + " ms";
  }
  std::printf("%s  %2d %-24s %s(%lld ms)\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), detail.empty() ? "" : (detail + " ").c_str(),
              static_cast<long long>(ms));
  std::fflush(stdout);
  if (!ok) ++failed;
}

bool all_pass(const std::vector<VerificationReport>& reports,
              std::string& detail, bool require_conclusive = true) {
  std::uint64_t checked = 0;
  for (const VerificationReport& r : reports) {
    checked += r.checked;
    if (!r.passed()) {
      detail = r.statement + ": " + std::to_string(r.failures.size()) +
               " failures, e.g. " + r.failures.front().instance;
      return false;
    }
    if (require_conclusive && !r.conclusive()) {
      detail = r.statement + ": inconclusive, " + r.inconclusive.front();
      return false;
    }
  }
  detail = std::to_string(checked) + " checks";
  return true;
}

}  // namespace

int main() {
  criterion(1, "catalan-counts", 1000, [](std::string& detail) {
    const std::vector<std::size_t> expected{2, 5, 14, 42, 132, 429};
    for (int m = 4; m <= 9; ++m)
      if (enumerate_triangulations(m).size() != expected[m - 4]) {
        detail = "m=" + std::to_string(m);
        return false;
      }
    detail = "m=4..9 give 2,5,14,42,132,429";
    return true;
  });

  criterion(2, "flip-mutation", 30000, [](std::string& detail) {
    std::vector<VerificationReport> reports;
    for (int m = 4; m <= 9; ++m) reports.push_back(verify_flip_mutation(m));
    if (!all_pass(reports, detail)) return false;
    std::uint64_t total = 0;
    for (const auto& r : reports) total += r.checked;
    if (total != 3456) {
      detail = "expected 3456 instances, ran " + std::to_string(total);
      return false;
    }
    detail = "3456 instances over m=4..9";
    return true;
  });

  criterion(3, "group-isomorphism", 120000, [](std::string& detail) {
    std::vector<VerificationReport> reports;
    for (int n = 2; n <= 6; ++n) {
      std::uint64_t expected = factorial(n + 1);
      for (const Quiver& q : type_a_class_representatives(n)) {
        reports.push_back(verify_group_iso(q));
        // orders reach at most 7! = 5040 at n = 6
        if (group_order(presentation_from_quiver(q)) != expected) {
          detail = to_string(q) + ": order != " + std::to_string(expected);
          return false;
        }
      }
    }
    return all_pass(reports, detail);
  });

  criterion(4, "mutation-invariance", 120000, [](std::string& detail) {
    const std::vector<std::uint64_t> expected{6, 24, 120, 720};
    std::vector<VerificationReport> reports;
    for (int n = 2; n <= 5; ++n) {
      Quiver q = linear_quiver(n);
      if (group_order(presentation_from_quiver(q)) != expected[n - 2] ||
          expected[n - 2] != factorial(n + 1)) {
        detail = "A_" + std::to_string(n) + " order mismatch";
        return false;
      }
      reports.push_back(verify_mutation_invariance(q));
    }
    return all_pass(reports, detail);
  });

  criterion(5, "worked-example", 5000, [](std::string& detail) {
    Quiver q = sample_quiver();
    MultiTriangulation mt = triangulation_of_quiver(q);
    if (mt.components().size() != 1 || mt.components()[0].polygon_size() != 7) {
      detail = "no heptagon preimage";
      return false;
    }
    if (quiver_of(mt) != q) {
      detail = "preimage does not reproduce the quiver";
      return false;
    }
    BraidGraph graph = braid_graph(mt);
    if (graph.graph.vertex_count != 5) {
      detail = "braid graph not on 5 vertices";
      return false;
    }
    std::multiset<int> degrees;
    std::map<int, int> by_vertex;
    for (const auto& [label, e] : graph.graph.edges) {
      ++by_vertex[e.first];
      ++by_vertex[e.second];
    }
    for (int v = 1; v <= 5; ++v)
      degrees.insert(by_vertex.count(v) ? by_vertex[v] : 0);
    if (degrees != std::multiset<int>{1, 1, 1, 2, 3}) {
      detail = "degree multiset mismatch";
      return false;
    }
    if (group_order(presentation_from_quiver(q)) != 120) {
      detail = "presentation order != 120";
      return false;
    }
    detail = "heptagon preimage, degrees {1,1,1,2,3}, order 120";
    return true;
  });

  criterion(6, "partition-lattice", 60000, [](std::string& detail) {
    std::vector<VerificationReport> reports;
    for (int n = 1; n <= 5; ++n)
      for (const Quiver& q : type_a_class_representatives(n)) {
        reports.push_back(verify_partition_lattice(q));
        if (reports.back().checked != (1ull << (2 * n))) {
          detail = to_string(q) + ": pair count != 4^n";
          return false;
        }
      }
    return all_pass(reports, detail);
  });

  criterion(7, "lattice-isomorphism", 60000, [](std::string& detail) {
    std::vector<VerificationReport> reports;
    for (int n = 1; n <= 5; ++n)
      for (const Quiver& q : type_a_class_representatives(n))
        reports.push_back(verify_lattice_isomorphism(q));
    return all_pass(reports, detail);
  });

  criterion(8, "generator-intersection", 30000, [](std::string& detail) {
    std::vector<VerificationReport> reports;
    for (int n = 1; n <= 5; ++n)
      for (const Quiver& q : type_a_class_representatives(n))
        reports.push_back(verify_generator_intersection(q));
    return all_pass(reports, detail);
  });

  criterion(9, "parabolic-presentations", 300000, [](std::string& detail) {
    std::vector<VerificationReport> reports;
    for (int n = 1; n <= 5; ++n)
      for (const Quiver& q : type_a_class_representatives(n))
        reports.push_back(verify_parabolic_presentations(q));
    return all_pass(reports, detail);
  });

  criterion(10, "direct-products", 30000, [](std::string& detail) {
    std::uint64_t checked = 0;
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; a + b <= 5; ++b) {
        Quiver left = linear_quiver(a), right = linear_quiver(b);
        VerificationReport r = verify_direct_product(left, right);
        if (!r.passed() || !r.conclusive()) {
          detail = r.statement;
          return false;
        }
        std::vector<Arrow> arrows = left.arrows();
        for (const Arrow& arrow : right.arrows())
          arrows.push_back({arrow.source + a, arrow.target + a, arrow.mult});
        std::uint64_t order = group_order(
            presentation_from_quiver(Quiver(a + b, std::move(arrows))));
        if (order != factorial(a + 1) * factorial(b + 1)) {
          detail = "A_" + std::to_string(a) + " + A_" + std::to_string(b);
          return false;
        }
        ++checked;
      }
    detail = std::to_string(checked) + " products with a+b <= 5";
    return true;
  });

  criterion(11, "word-round-trip", 60000, [](std::string& detail) {
    std::uint64_t round_trips = 0;
    for (int n = 1; n <= 4; ++n)
      for (const Quiver& q : type_a_class_representatives(n)) {
        BraidGraph graph = braid_graph(triangulation_of_quiver(q));
        GeneratorImages images = pi_q(graph);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::set<int> subset;
          for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1u) subset.insert(i);
          LabeledGraph gamma = delete_edges(graph, subset);
          for (const Permutation& p :
               young_elements(YoungSubgroup{rho(graph, subset)})) {
            Word word = permutation_to_word(gamma, p);
            for (int letter : word)
              if (!subset.count(letter)) {
                detail = "word letter outside I";
                return false;
              }
            if (evaluate_word(word, images) != p) {
              detail = to_string(q) + ": round trip failed";
              return false;
            }
            ++round_trips;
          }
        }
      }
    detail = std::to_string(round_trips) + " round trips";
    return true;
  });

  std::printf("%s: %d of 11 criteria failed\n", failed ? "FAIL" : "PASS",
              failed);
  return failed ? 1 : 0;
}
