#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clustergroups/errors.hpp"

namespace clustergroups {

inline constexpr std::size_t kDefaultClassCap = 100000;

// A bundle of `mult` parallel arrows source -> target.
struct Arrow {
  int source = 0;
  int target = 0;
  int mult = 1;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

// Cluster quiver: directed multigraph on vertices 1..n with no loops and no
// 2-cycles. Arrows are merged by endpoint pair and kept sorted, so two quivers
// compare equal exactly when they have the same labelled arrow multiset.
class Quiver {
 public:
  Quiver() = default;

  Quiver(int n, std::vector<Arrow> arrows) : n_(n) {
    if (n < 0) throw VertexOutOfRange("vertex count must be non-negative");
    std::map<std::pair<int, int>, long long> merged;
    for (const Arrow& a : arrows) {
      if (a.source < 1 || a.source > n || a.target < 1 || a.target > n)
        throw VertexOutOfRange("arrow endpoint outside 1.." + std::to_string(n));
      if (a.source == a.target)
        throw LoopArrow("loop at vertex " + std::to_string(a.source));
      if (a.mult < 1) throw Error("arrow multiplicity must be positive");
      merged[{a.source, a.target}] += a.mult;
    }
    for (const auto& [st, m] : merged) {
      if (merged.count({st.second, st.first}))
        throw TwoCycle("2-cycle between " + std::to_string(st.first) + " and " +
                       std::to_string(st.second));
      if (m > std::numeric_limits<int>::max())
        throw Error("arrow multiplicity overflow");
      arrows_.push_back({st.first, st.second, static_cast<int>(m)});
    }
  }

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int multiplicity(int source, int target) const {
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(),
                               Arrow{source, target, 0});
    if (it != arrows_.end() && it->source == source && it->target == target)
      return it->mult;
    return 0;
  }

  // Total number of arrows, counting multiplicity.
  long long arrow_count() const {
    long long total = 0;
    for (const Arrow& a : arrows_) total += a.mult;
    return total;
  }

  friend auto operator<=>(const Quiver&, const Quiver&) = default;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

inline Quiver new_quiver(int n, std::vector<Arrow> arrows) {
  return Quiver(n, std::move(arrows));
}

// Compact one-line form, e.g. "n=3: 1->2 2->3".
inline std::string to_string(const Quiver& q) {
  std::string out = "n=" + std::to_string(q.vertex_count()) + ":";
  for (const Arrow& a : q.arrows()) {
    out += ' ' + std::to_string(a.source) + "->" + std::to_string(a.target);
    if (a.mult > 1) out += "x" + std::to_string(a.mult);
  }
  return out;
}

// Orientation of the path diagram on n vertices: 1 -> 2 -> ... -> n.
inline Quiver linear_quiver(int n) {
  std::vector<Arrow> arrows;
  for (int i = 1; i < n; ++i) arrows.push_back({i, i + 1, 1});
  return Quiver(n, std::move(arrows));
}

// Mutation type A_{n_1} u ... u A_{n_r}, parts sorted in decreasing order.
struct MutationTypeA {
  std::vector<int> parts;

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

  friend auto operator<=>(const MutationTypeA&, const MutationTypeA&) = default;
};

// Quiver mutation at v: (a) for each path u -> v -> w add the composite
// arrows u -> w (multiplicities multiply), (b) reverse every arrow at v,
// (c) cancel opposite pairs until no 2-cycle remains.
inline Quiver mutate(const Quiver& q, int v) {
  const int n = q.vertex_count();
  if (v < 1 || v > n)
    throw VertexOutOfRange("mutation vertex " + std::to_string(v) +
                           " outside 1.." + std::to_string(n));
  std::map<std::pair<int, int>, long long> count;
  std::vector<std::pair<int, long long>> into, outof;
  for (const Arrow& a : q.arrows()) {
    count[{a.source, a.target}] = a.mult;
    if (a.target == v) into.push_back({a.source, a.mult});
    if (a.source == v) outof.push_back({a.target, a.mult});
  }
  // (a): u != w always, otherwise v -> u and u -> v would be a 2-cycle
  for (const auto& [u, x] : into)
    for (const auto& [w, y] : outof) count[{u, w}] += x * y;
  // (b)
  for (const auto& [u, x] : into) {
    count.erase({u, v});
    count[{v, u}] += x;
  }
  for (const auto& [w, y] : outof) {
    count.erase({v, w});
    count[{w, v}] += y;
  }
  // (c)
  std::vector<Arrow> arrows;
  std::set<std::pair<int, int>> done;
  for (const auto& [st, m] : count) {
    auto [lo, hi] = std::minmax(st.first, st.second);
    if (!done.insert({lo, hi}).second) continue;
    long long forward = 0, backward = 0;
    if (auto it = count.find({lo, hi}); it != count.end()) forward = it->second;
    if (auto it = count.find({hi, lo}); it != count.end())
      backward = it->second;
    long long net = forward - backward;
    if (net > 0)
      arrows.push_back({lo, hi, static_cast<int>(net)});
    else if (net < 0)
      arrows.push_back({hi, lo, static_cast<int>(-net)});
  }
  return Quiver(n, std::move(arrows));
}

inline bool mutate_is_involution_check(const Quiver& q, int v) {
  return mutate(mutate(q, v), v) == q;
}

// Chordless oriented simple cycles, each reported once as a vertex sequence
// i_1 -> ... -> i_r -> i_1 starting at its minimal vertex. Every arrow of the
// cycle must be simple and no arrow (in either direction) may join two
// non-consecutive cycle vertices.
inline std::vector<std::vector<int>> chordless_oriented_simple_cycles(
    const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::vector<int>> simple_out(n + 1);
  for (const Arrow& a : q.arrows())
    if (a.mult == 1) simple_out[a.source].push_back(a.target);
  auto linked = [&](int u, int w) {
    return q.multiplicity(u, w) > 0 || q.multiplicity(w, u) > 0;
  };

  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(n + 1, false);

  auto chordless = [&](const std::vector<int>& c) {
    const int r = static_cast<int>(c.size());
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        const int gap = j - i;
        if (gap == 1 || gap == r - 1) continue;
        if (linked(c[i], c[j])) return false;
      }
    return true;
  };

  auto dfs = [&](auto&& self, int start, int u) -> void {
    for (int w : simple_out[u]) {
      if (w == start) {
        if (path.size() >= 3 && chordless(path)) cycles.push_back(path);
      } else if (w > start && !on_path[w]) {
        // a chord to an interior path vertex can never disappear; prune
        bool chord = false;
        for (std::size_t k = 1; k + 1 < path.size(); ++k)
          if (linked(w, path[k])) {
            chord = true;
            break;
          }
        if (chord) continue;
        path.push_back(w);
        on_path[w] = true;
        self(self, start, w);
        on_path[w] = false;
        path.pop_back();
      }
    }
  };

  for (int s = 1; s <= n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

// Full subquiver on a vertex subset; vertices are renumbered 1..|s| in
// increasing order of the original labels, recorded in original_vertex.
struct Subquiver {
  Quiver quiver;
  std::vector<int> original_vertex;  // original_vertex[i-1] = source label of i
};

inline Subquiver full_subquiver(const Quiver& q, const std::set<int>& s) {
  for (int v : s)
    if (v < 1 || v > q.vertex_count())
      throw VertexOutOfRange("subset vertex " + std::to_string(v) +
                             " outside 1.." + std::to_string(q.vertex_count()));
  std::vector<int> original(s.begin(), s.end());
  std::map<int, int> index;
  for (std::size_t i = 0; i < original.size(); ++i)
    index[original[i]] = static_cast<int>(i) + 1;
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows())
    if (index.count(a.source) && index.count(a.target))
      arrows.push_back({index[a.source], index[a.target], a.mult});
  return {Quiver(static_cast<int>(original.size()), std::move(arrows)),
          std::move(original)};
}

// Partition of 1..n into underlying-graph components, sorted by minimum.
inline std::vector<std::vector<int>> connected_components(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> root(n + 1);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const Arrow& a : q.arrows()) {
    int ra = find(a.source), rb = find(a.target);
    if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> components;
  for (auto& [r, vs] : groups) components.push_back(std::move(vs));
  return components;
}

namespace detail {

// (in-mults sorted, out-mults sorted) is invariant under isomorphism.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>>
vertex_signatures(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::pair<std::vector<int>, std::vector<int>>> sig(n + 1);
  for (const Arrow& a : q.arrows()) {
    sig[a.target].first.push_back(a.mult);
    sig[a.source].second.push_back(a.mult);
  }
  for (auto& [in, out] : sig) {
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
  }
  return sig;
}

}  // namespace detail

// Arrow-and-multiplicity preserving vertex bijection from q to p, if any.
// Returned vector maps vertex i of q to entry i-1.
inline std::optional<std::vector<int>> are_isomorphic(const Quiver& q,
                                                      const Quiver& p) {
  const int n = q.vertex_count();
  if (n != p.vertex_count()) return std::nullopt;
  if (q.arrows().size() != p.arrows().size()) return std::nullopt;
  if (q.arrow_count() != p.arrow_count()) return std::nullopt;

  auto sig_q = detail::vertex_signatures(q);
  auto sig_p = detail::vertex_signatures(p);
  std::vector<std::vector<int>> candidates(n + 1);
  for (int v = 1; v <= n; ++v) {
    for (int w = 1; w <= n; ++w)
      if (sig_q[v] == sig_p[w]) candidates[v].push_back(w);
    if (candidates[v].empty()) return std::nullopt;
  }

  std::vector<int> image(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v > n) return true;
    for (int w : candidates[v]) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u)
        ok = q.multiplicity(v, u) == p.multiplicity(w, image[u]) &&
             q.multiplicity(u, v) == p.multiplicity(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
      image[v] = 0;
    }
    return false;
  };
  if (!extend(extend, 1)) return std::nullopt;
  return std::vector<int>(image.begin() + 1, image.end());
}

// Lexicographically minimal relabelling; equal canonical forms iff isomorphic.
// Plain enumeration of all n! relabellings, intended for n <= 9.
inline Quiver canonical_form(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Arrow> best, candidate;
  bool have_best = false;
  candidate.reserve(q.arrows().size());
  do {
    candidate.clear();
    for (const Arrow& a : q.arrows())
      candidate.push_back({perm[a.source - 1], perm[a.target - 1], a.mult});
    std::sort(candidate.begin(), candidate.end());
    if (!have_best || candidate < best) {
      best = candidate;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Quiver(n, std::move(best));
}

// BFS closure of q under mutation at every vertex, one canonical
// representative per isomorphism class.
inline std::set<Quiver> mutation_class(const Quiver& q,
                                       std::size_t cap = kDefaultClassCap) {
  if (cap < 1) throw Error("mutation class cap must be positive");
  std::set<Quiver> seen;
  std::vector<Quiver> frontier{canonical_form(q)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Quiver> next;
    for (const Quiver& r : frontier)
      for (int v = 1; v <= r.vertex_count(); ++v) {
        Quiver c = canonical_form(mutate(r, v));
        if (seen.insert(c).second) {
          if (seen.size() > cap)
            throw CapExceeded("mutation class exceeds cap of " +
                              std::to_string(cap));
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

// Sizes of the path components when the quiver is a disjoint union of
// orientations of path diagrams, sorted in decreasing order.
inline std::optional<std::vector<int>> path_orientation_parts(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> degree(n + 1, 0);
  for (const Arrow& a : q.arrows()) {
    if (a.mult != 1) return std::nullopt;
    ++degree[a.source];
    ++degree[a.target];
  }
  for (int v = 1; v <= n; ++v)
    if (degree[v] > 2) return std::nullopt;
  std::vector<int> parts;
  for (const auto& comp : connected_components(q)) {
    long long edges = 0;
    for (const Arrow& a : q.arrows())
      if (std::binary_search(comp.begin(), comp.end(), a.source))
        edges += a.mult;
    if (edges != static_cast<long long>(comp.size()) - 1)
      return std::nullopt;  // a degree-<=2 component with |V| edges is a cycle
    parts.push_back(static_cast<int>(comp.size()));
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// [n_1,...,n_r] iff some member of the mutation class is a disjoint union of
// path orientations A_{n_i}; parts() is empty exactly for the empty quiver.
inline std::optional<MutationTypeA> mutation_type_a(
    const Quiver& q, std::size_t cap = kDefaultClassCap) {
  for (const Quiver& member : mutation_class(q, cap))
    if (auto parts = path_orientation_parts(member))
      return MutationTypeA{std::move(*parts)};
  return std::nullopt;
}

}  // namespace clustergroups
