#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clustergroups/errors.hpp"
#include "clustergroups/groups.hpp"
#include "clustergroups/triangulation.hpp"

namespace clustergroups {

// Undirected graph on vertices 1..vertex_count with labelled edges. Edge
// labels are the quiver vertices (equivalently, diagonal labels); the
// endpoint pair is stored with the smaller vertex first.
struct LabeledGraph {
  int vertex_count = 0;
  std::map<int, std::pair<int, int>> edges;

  friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;
};

// Braid graph of a labelled triangulation: one vertex per triangle, one edge
// per diagonal, edges joining the two triangles the diagonal bounds. Vertices
// are numbered block by block: component j occupies the consecutive block
// N_j, triangles sorted by their vertex triple.
struct BraidGraph {
  LabeledGraph graph;
  std::vector<std::vector<int>> blocks;  // N_1, ..., N_r

  friend auto operator<=>(const BraidGraph&, const BraidGraph&) = default;
};

inline BraidGraph braid_graph(const MultiTriangulation& mt) {
  BraidGraph result;
  std::vector<std::vector<std::array<int, 3>>> tris;
  std::vector<int> offset;  // block start (0-based) per component
  int total = 0;
  for (const Triangulation& t : mt.components()) {
    tris.push_back(triangles(t));
    offset.push_back(total);
    std::vector<int> block(tris.back().size());
    std::iota(block.begin(), block.end(), total + 1);
    result.blocks.push_back(std::move(block));
    total += static_cast<int>(tris.back().size());
  }
  result.graph.vertex_count = total;

  for (const auto& [label, ref] : mt.labels()) {
    const auto& [c, d] = ref;
    std::vector<int> ends;
    for (std::size_t i = 0; i < tris[c].size(); ++i) {
      int hits = 0;
      for (int v : tris[c][i])
        if (v == d.first || v == d.second) ++hits;
      if (hits == 2) ends.push_back(offset[c] + static_cast<int>(i) + 1);
    }
    if (ends.size() != 2)
      throw Error("diagonal does not bound exactly two triangles");
    result.graph.edges[label] = {ends[0], ends[1]};
  }

  // sanity: a forest with one component per polygon and valency at most 3
  std::vector<int> degree(total + 1, 0), root(total + 1);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [label, e] : result.graph.edges) {
    ++degree[e.first];
    ++degree[e.second];
    int ra = find(e.first), rb = find(e.second);
    if (ra == rb) throw Error("braid graph contains a cycle");
    root[std::max(ra, rb)] = std::min(ra, rb);
  }
  for (int v = 1; v <= total; ++v)
    if (degree[v] > 3) throw Error("braid graph valency exceeds 3");
  return result;
}

// Gamma_I: the ambient vertex set with only the edges labelled by `keep`.
inline LabeledGraph delete_edges(const BraidGraph& g,
                                 const std::set<int>& keep) {
  LabeledGraph out;
  out.vertex_count = g.graph.vertex_count;
  for (const auto& [label, e] : g.graph.edges)
    if (keep.count(label)) out.edges[label] = e;
  return out;
}

// rho_I: the partition of the graph vertices into the connected components
// of Gamma_I, singletons included.
inline SetPartition rho(const LabeledGraph& g, const std::set<int>& keep) {
  std::vector<int> root(g.vertex_count + 1);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [label, e] : g.edges) {
    if (!keep.count(label)) continue;
    int ra = find(e.first), rb = find(e.second);
    if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= g.vertex_count; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> parts;
  for (auto& [r, part] : groups) parts.push_back(std::move(part));
  return SetPartition(g.vertex_count, std::move(parts));
}

inline SetPartition rho(const BraidGraph& g, const std::set<int>& keep) {
  return rho(g.graph, keep);
}

// All edge labels of a graph, convenient for rho(g, edge_labels(g)).
inline std::set<int> edge_labels(const LabeledGraph& g) {
  std::set<int> labels;
  for (const auto& [label, e] : g.edges) labels.insert(label);
  return labels;
}

// Edge labels along the unique path from x to y, empty for x == y, absent if
// the two vertices lie in different components.
inline std::optional<Word> tree_path(const LabeledGraph& g, int x, int y) {
  if (x < 1 || x > g.vertex_count || y < 1 || y > g.vertex_count)
    throw VertexOutOfRange("path endpoint outside the graph");
  if (x == y) return Word{};
  std::vector<std::vector<std::pair<int, int>>> adjacency(g.vertex_count + 1);
  for (const auto& [label, e] : g.edges) {
    adjacency[e.first].push_back({e.second, label});
    adjacency[e.second].push_back({e.first, label});
  }
  std::vector<std::pair<int, int>> from(g.vertex_count + 1, {0, 0});
  std::queue<int> queue;
  queue.push(x);
  from[x] = {x, 0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (auto [w, label] : adjacency[u]) {
      if (from[w].first != 0) continue;
      from[w] = {u, label};
      if (w == y) {
        Word path;
        for (int v = y; v != x; v = from[v].first)
          path.push_back(from[v].second);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push(w);
    }
  }
  return std::nullopt;
}

// DOT output; braid graphs are undirected.
inline std::string to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 1; v <= g.vertex_count; ++v) out << "  " << v << ";\n";
  for (const auto& [label, e] : g.edges)
    out << "  " << e.first << " -- " << e.second << " [label=\"t" << label
        << "\"];\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const BraidGraph& g) { return to_dot(g.graph); }

// pi_Q: generator t_i goes to the transposition of the endpoints of E_i.
inline GeneratorImages pi_q(const BraidGraph& g) {
  std::map<int, std::pair<int, int>> images;
  for (const auto& [label, e] : g.graph.edges) images[label] = e;
  return GeneratorImages(g.graph.vertex_count, std::move(images));
}

// The palindromic word t_{i_1}...t_{i_{p-1}} t_{i_p} t_{i_{p-1}}...t_{i_1}
// along the unique path from x to y; it evaluates to the transposition (x y).
inline Word transposition_to_word(const LabeledGraph& g, int x, int y) {
  if (x == y) throw Error("transposition endpoints must differ");
  auto path = tree_path(g, x, y);
  if (!path)
    throw DisconnectedPair(std::to_string(x) + " and " + std::to_string(y) +
                           " lie in different components");
  Word word = *path;
  for (std::size_t i = path->size() - 1; i-- > 0;) word.push_back((*path)[i]);
  return word;
}

// A word over the edge labels of g evaluating to p, for p in the Young
// subgroup of the component partition of g: each cycle is factored into
// transpositions and each transposition expanded along its tree path.
inline Word permutation_to_word(const LabeledGraph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count)
    throw DegreeMismatch("permutation degree does not match the graph");
  SetPartition partition = rho(g, edge_labels(g));
  if (!young_contains(YoungSubgroup{partition}, p))
    throw NotInSubgroup("permutation moves points across components");
  Word word;
  for (const auto& cycle : p.cycles())
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      Word step = transposition_to_word(g, cycle[0], cycle[i]);
      word.insert(word.end(), step.begin(), step.end());
    }
  return word;
}

// Renames edge labels; labels absent from the map are kept.
inline LabeledGraph relabel_edges(const LabeledGraph& g,
                                  const std::map<int, int>& rename) {
  LabeledGraph out;
  out.vertex_count = g.vertex_count;
  for (const auto& [label, e] : g.edges) {
    auto it = rename.find(label);
    out.edges[it == rename.end() ? label : it->second] = e;
  }
  if (out.edges.size() != g.edges.size())
    throw Error("edge relabelling is not injective");
  return out;
}

// Vertex bijection between two labelled graphs matching every edge label,
// when one exists. Each shared edge leaves two orientation choices; isolated
// vertices map freely.
inline bool labeled_graph_isomorphic(const LabeledGraph& a,
                                     const LabeledGraph& b) {
  if (a.vertex_count != b.vertex_count) return false;
  if (a.edges.size() != b.edges.size()) return false;
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> paired;
  for (const auto& [label, e] : a.edges) {
    auto it = b.edges.find(label);
    if (it == b.edges.end()) return false;
    paired.push_back({e, it->second});
  }
  std::vector<int> forward(a.vertex_count + 1, 0),
      backward(b.vertex_count + 1, 0);
  auto assign = [&](int x, int y) {
    if (forward[x] == y && backward[y] == x) return 0;  // already consistent
    if (forward[x] != 0 || backward[y] != 0) return -1;
    forward[x] = y;
    backward[y] = x;
    return 1;
  };
  auto match = [&](auto&& self, std::size_t k) -> bool {
    if (k == paired.size()) return true;
    auto [ea, eb] = paired[k];
    for (bool swap : {false, true}) {
      int u = swap ? eb.second : eb.first;
      int v = swap ? eb.first : eb.second;
      int first = assign(ea.first, u);
      if (first >= 0) {
        int second = assign(ea.second, v);
        if (second >= 0) {
          if (self(self, k + 1)) return true;
          if (second == 1) {
            forward[ea.second] = 0;
            backward[v] = 0;
          }
        }
        if (first == 1) {
          forward[ea.first] = 0;
          backward[u] = 0;
        }
      }
    }
    return false;
  };
  return match(match, 0);
}

}  // namespace clustergroups
