#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clustergroups/errors.hpp"
#include "clustergroups/quiver.hpp"

namespace clustergroups {

// Polygon vertices are numbered 0..m-1 in counterclockwise order; a diagonal
// is an unordered pair of non-adjacent vertices, normalised to (a, b), a < b.
using Diagonal = std::pair<int, int>;

inline Diagonal make_diagonal(int a, int b) {
  return {std::min(a, b), std::max(a, b)};
}

inline bool is_polygon_diagonal(int m, Diagonal d) {
  auto [a, b] = d;
  if (a < 0 || b >= m || a >= b) return false;
  int gap = b - a;
  return gap != 1 && gap != m - 1;
}

// True iff exactly one endpoint of d2 lies strictly inside one of the two
// boundary arcs cut out by d1; diagonals sharing an endpoint never cross.
inline bool diagonals_cross(int m, Diagonal d1, Diagonal d2) {
  if (!is_polygon_diagonal(m, d1) || !is_polygon_diagonal(m, d2))
    throw InvalidDiagonal("not a diagonal of the " + std::to_string(m) +
                          "-gon");
  auto [a, b] = d1;
  auto strictly_inside = [&](int x) { return a < x && x < b; };
  if (d1.first == d2.first || d1.first == d2.second ||
      d1.second == d2.first || d1.second == d2.second)
    return false;
  return strictly_inside(d2.first) != strictly_inside(d2.second);
}

// A triangulation of a convex m-gon: the maximal case, m-3 pairwise
// non-crossing diagonals.
class Triangulation {
 public:
  Triangulation(int m, std::vector<Diagonal> diagonals) : m_(m) {
    if (m < 3) throw Error("polygon must have at least 3 vertices");
    std::set<Diagonal> unique;
    for (Diagonal d : diagonals) {
      d = make_diagonal(d.first, d.second);
      if (!is_polygon_diagonal(m, d))
        throw InvalidDiagonal("{" + std::to_string(d.first) + "," +
                              std::to_string(d.second) + "} is not a diagonal");
      if (!unique.insert(d).second)
        throw InvalidDiagonal("duplicate diagonal {" +
                              std::to_string(d.first) + "," +
                              std::to_string(d.second) + "}");
    }
    if (static_cast<int>(unique.size()) != m - 3)
      throw WrongDiagonalCount("a " + std::to_string(m) + "-gon needs " +
                               std::to_string(m - 3) + " diagonals, got " +
                               std::to_string(unique.size()));
    diagonals_.assign(unique.begin(), unique.end());
    for (std::size_t i = 0; i < diagonals_.size(); ++i)
      for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
        if (diagonals_cross(m, diagonals_[i], diagonals_[j]))
          throw CrossingDiagonals("diagonals cross");
  }

  int polygon_size() const { return m_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  bool has_diagonal(Diagonal d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(),
                              make_diagonal(d.first, d.second));
  }

  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;

 private:
  int m_;
  std::vector<Diagonal> diagonals_;
};

inline Triangulation new_triangulation(int m, std::vector<Diagonal> diagonals) {
  return Triangulation(m, std::move(diagonals));
}

// Compact one-line form, e.g. "7-gon {0,2}{2,4}{2,5}{0,5}".
inline std::string to_string(const Triangulation& t) {
  std::string out = std::to_string(t.polygon_size()) + "-gon";
  for (const Diagonal& d : t.diagonals())
    out += " {" + std::to_string(d.first) + "," + std::to_string(d.second) + "}";
  return out;
}

// All triangulations of the m-gon, by recursive ear decomposition on the edge
// (first, second) of each sub-polygon. Output is deterministic and
// duplicate-free, Catalan(m-2) triangulations in total.
inline std::vector<Triangulation> enumerate_triangulations(int m) {
  if (m < 3) throw Error("polygon must have at least 3 vertices");
  auto go = [](auto&& self,
               const std::vector<int>& vs) -> std::vector<std::vector<Diagonal>> {
    if (vs.size() <= 3) return {{}};
    std::vector<std::vector<Diagonal>> out;
    const int s = static_cast<int>(vs.size());
    for (int j = 2; j < s; ++j) {
      std::vector<Diagonal> fresh;
      if (j > 2) fresh.push_back(make_diagonal(vs[1], vs[j]));
      if (j < s - 1) fresh.push_back(make_diagonal(vs[0], vs[j]));
      std::vector<int> left(vs.begin() + 1, vs.begin() + j + 1);
      std::vector<int> right(vs.begin() + j, vs.end());
      right.push_back(vs[0]);
      for (const auto& a : self(self, left))
        for (const auto& b : self(self, right)) {
          std::vector<Diagonal> all = fresh;
          all.insert(all.end(), a.begin(), a.end());
          all.insert(all.end(), b.begin(), b.end());
          out.push_back(std::move(all));
        }
    }
    return out;
  };
  std::vector<int> polygon(m);
  std::iota(polygon.begin(), polygon.end(), 0);
  std::vector<Triangulation> result;
  for (auto& diagonals : go(go, polygon))
    result.push_back(Triangulation(m, std::move(diagonals)));
  return result;
}

// The m-2 triangles as counterclockwise vertex triples (a < b < c), sorted
// lexicographically. A triple is a triangle exactly when all three of its
// sides are polygon edges or diagonals.
inline std::vector<std::array<int, 3>> triangles(const Triangulation& t) {
  const int m = t.polygon_size();
  std::vector<std::vector<bool>> side(m, std::vector<bool>(m, false));
  auto mark = [&](int a, int b) { side[a][b] = side[b][a] = true; };
  for (int v = 0; v < m; ++v) mark(v, (v + 1) % m);
  for (const Diagonal& d : t.diagonals()) mark(d.first, d.second);
  std::vector<std::array<int, 3>> result;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (!side[a][b]) continue;
      for (int c = b + 1; c < m; ++c)
        if (side[b][c] && side[a][c]) result.push_back({a, b, c});
    }
  return result;
}

struct FlipResult {
  Triangulation triangulation;
  Diagonal created;
};

// Replace d by the opposite diagonal of the quadrilateral formed by the two
// triangles adjacent to d.
inline FlipResult flip(const Triangulation& t, Diagonal d) {
  d = make_diagonal(d.first, d.second);
  if (!t.has_diagonal(d))
    throw NotADiagonal("{" + std::to_string(d.first) + "," +
                       std::to_string(d.second) +
                       "} is not a diagonal of the triangulation");
  std::vector<int> apexes;
  for (const auto& tri : triangles(t)) {
    int matched = 0, other = -1;
    for (int v : tri) {
      if (v == d.first || v == d.second)
        ++matched;
      else
        other = v;
    }
    if (matched == 2) apexes.push_back(other);
  }
  Diagonal created = make_diagonal(apexes[0], apexes[1]);
  std::vector<Diagonal> diagonals;
  for (const Diagonal& existing : t.diagonals())
    if (existing != d) diagonals.push_back(existing);
  diagonals.push_back(created);
  return {Triangulation(t.polygon_size(), std::move(diagonals)), created};
}

// k such that adding k to every vertex index mod m maps t1 onto t2.
inline std::optional<int> rotation_equivalent(const Triangulation& t1,
                                              const Triangulation& t2) {
  if (t1.polygon_size() != t2.polygon_size()) return std::nullopt;
  const int m = t1.polygon_size();
  for (int k = 0; k < m; ++k) {
    std::vector<Diagonal> rotated;
    for (const Diagonal& d : t1.diagonals())
      rotated.push_back(make_diagonal((d.first + k) % m, (d.second + k) % m));
    std::sort(rotated.begin(), rotated.end());
    if (rotated == t2.diagonals()) return k;
  }
  return std::nullopt;
}

// A triangulation of a disjoint union of polygons together with a labelling
// of its diagonals by distinct positive integers. Labels are global across
// components; for freshly built objects they are 1..n, while cuts keep the
// surviving subset of the original labels.
class MultiTriangulation {
 public:
  using DiagonalRef = std::pair<int, Diagonal>;  // (component index, diagonal)

  MultiTriangulation(std::vector<Triangulation> components,
                     std::map<int, DiagonalRef> labels)
      : components_(std::move(components)), labels_(std::move(labels)) {
    std::set<DiagonalRef> seen;
    for (const auto& [label, ref] : labels_) {
      if (label < 1) throw LabelOutOfRange("labels must be positive");
      const auto& [c, d] = ref;
      if (c < 0 || c >= static_cast<int>(components_.size()))
        throw LabelOutOfRange("label " + std::to_string(label) +
                              " refers to a missing component");
      if (!components_[c].has_diagonal(d))
        throw LabelOutOfRange("label " + std::to_string(label) +
                              " refers to a missing diagonal");
      if (!seen.insert(ref).second)
        throw LabelOutOfRange("two labels on one diagonal");
    }
    std::size_t total = 0;
    for (const Triangulation& t : components_) total += t.diagonals().size();
    if (seen.size() != total)
      throw LabelOutOfRange("every diagonal needs a label");
  }

  // Single component with canonical labels 1..n following diagonal order.
  static MultiTriangulation single(Triangulation t) {
    std::map<int, DiagonalRef> labels;
    int next = 1;
    for (const Diagonal& d : t.diagonals()) labels[next++] = {0, d};
    return MultiTriangulation({std::move(t)}, std::move(labels));
  }

  const std::vector<Triangulation>& components() const { return components_; }
  const std::map<int, DiagonalRef>& labels() const { return labels_; }

  std::size_t diagonal_count() const { return labels_.size(); }

  const DiagonalRef& locate(int label) const {
    auto it = labels_.find(label);
    if (it == labels_.end())
      throw LabelOutOfRange("no diagonal labelled " + std::to_string(label));
    return it->second;
  }

  friend auto operator<=>(const MultiTriangulation&,
                          const MultiTriangulation&) = default;

 private:
  std::vector<Triangulation> components_;
  std::map<int, DiagonalRef> labels_;
};

struct LabeledQuiver {
  Quiver quiver;
  std::vector<int> labels;  // labels[v-1] = global label of quiver vertex v
};

// The quiver of a labelled triangulation. For a counterclockwise triangle
// (a, b, c) the sides appear in the cyclic order {a,b}, {b,c}, {c,a}; there
// is an arrow i -> j whenever d_j immediately precedes d_i in that order.
inline LabeledQuiver quiver_of_labeled(const MultiTriangulation& mt) {
  std::vector<int> labels;
  std::vector<std::map<Diagonal, int>> label_of(mt.components().size());
  for (const auto& [label, ref] : mt.labels()) {
    labels.push_back(label);
    label_of[ref.first][ref.second] = label;
  }
  std::map<int, int> vertex_of;  // global label -> quiver vertex
  for (std::size_t i = 0; i < labels.size(); ++i)
    vertex_of[labels[i]] = static_cast<int>(i) + 1;

  std::vector<Arrow> arrows;
  for (std::size_t c = 0; c < mt.components().size(); ++c) {
    const auto& diagonal_labels = label_of[c];
    for (const auto& tri : triangles(mt.components()[c])) {
      std::array<Diagonal, 3> sides = {make_diagonal(tri[0], tri[1]),
                                       make_diagonal(tri[1], tri[2]),
                                       make_diagonal(tri[2], tri[0])};
      for (int k = 0; k < 3; ++k) {
        auto prev = diagonal_labels.find(sides[k]);
        auto next = diagonal_labels.find(sides[(k + 1) % 3]);
        if (prev == diagonal_labels.end() || next == diagonal_labels.end())
          continue;
        arrows.push_back(
            {vertex_of[next->second], vertex_of[prev->second], 1});
      }
    }
  }
  return {Quiver(static_cast<int>(labels.size()), std::move(arrows)),
          std::move(labels)};
}

// Plain form for triangulations labelled 1..n.
inline Quiver quiver_of(const MultiTriangulation& mt) {
  LabeledQuiver lq = quiver_of_labeled(mt);
  for (std::size_t i = 0; i < lq.labels.size(); ++i)
    if (lq.labels[i] != static_cast<int>(i) + 1)
      throw LabelOutOfRange("quiver_of requires labels 1..n");
  return std::move(lq.quiver);
}

namespace detail {

// Exact (labelled) matching of a quiver onto the diagonal quiver of a
// triangulation: a bijection vertex -> diagonal preserving all arrows.
inline std::optional<std::vector<Diagonal>> match_quiver_to_triangulation(
    const Quiver& q, const Triangulation& t) {
  const int k = q.vertex_count();
  if (static_cast<int>(t.diagonals().size()) != k) return std::nullopt;
  const std::vector<Diagonal>& diagonals = t.diagonals();
  std::map<Diagonal, int> index;
  for (int i = 0; i < k; ++i) index[diagonals[i]] = i;

  // arrows between diagonals, by index
  std::vector<std::vector<int>> arrow(k, std::vector<int>(k, 0));
  for (const auto& tri : triangles(t)) {
    std::array<Diagonal, 3> sides = {make_diagonal(tri[0], tri[1]),
                                     make_diagonal(tri[1], tri[2]),
                                     make_diagonal(tri[2], tri[0])};
    for (int s = 0; s < 3; ++s) {
      auto prev = index.find(sides[s]);
      auto next = index.find(sides[(s + 1) % 3]);
      if (prev != index.end() && next != index.end())
        arrow[next->second][prev->second] = 1;
    }
  }

  std::vector<int> image(k + 1, -1);
  std::vector<bool> used(k, false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v > k) return true;
    for (int d = 0; d < k; ++d) {
      if (used[d]) continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u)
        ok = q.multiplicity(v, u) == arrow[d][image[u]] &&
             q.multiplicity(u, v) == arrow[image[u]][d];
      if (!ok) continue;
      image[v] = d;
      used[d] = true;
      if (self(self, v + 1)) return true;
      used[d] = false;
      image[v] = -1;
    }
    return false;
  };
  if (!extend(extend, 1)) return std::nullopt;
  std::vector<Diagonal> result;
  for (int v = 1; v <= k; ++v) result.push_back(diagonals[image[v]]);
  return result;
}

}  // namespace detail

// A labelled triangulation whose quiver is exactly q: one (n_i+3)-gon per
// connected component (components ordered by least vertex), found by matching
// the component onto the diagonal quivers of all enumerated triangulations.
inline MultiTriangulation triangulation_of_quiver(
    const Quiver& q, std::size_t class_cap = kDefaultClassCap) {
  if (!mutation_type_a(q, class_cap))
    throw NotMutationTypeA("quiver is not of mutation-Dynkin type A");
  std::vector<Triangulation> components;
  std::map<int, MultiTriangulation::DiagonalRef> labels;
  for (const auto& component_vertices : connected_components(q)) {
    Subquiver sub = full_subquiver(
        q, std::set<int>(component_vertices.begin(), component_vertices.end()));
    const int k = sub.quiver.vertex_count();
    bool found = false;
    for (const Triangulation& t : enumerate_triangulations(k + 3)) {
      auto match = detail::match_quiver_to_triangulation(sub.quiver, t);
      if (!match) continue;
      int c = static_cast<int>(components.size());
      components.push_back(t);
      for (int v = 1; v <= k; ++v)
        labels[sub.original_vertex[v - 1]] = {c, (*match)[v - 1]};
      found = true;
      break;
    }
    if (!found)
      throw SearchExhausted("no triangulation realises the component");
  }
  return MultiTriangulation(std::move(components), std::move(labels));
}

struct CutComponent {
  int source_component = 0;
  std::vector<int> source_vertex;  // new polygon index -> original index
};

struct CutResult {
  MultiTriangulation triangulation;
  std::vector<CutComponent> provenance;
};

// Split polygons along the given diagonals. Every triangle survives in
// exactly one resulting component, surviving diagonals keep their labels, and
// each new polygon is renumbered 0..m'-1 preserving the cyclic order.
inline CutResult cut_along(const MultiTriangulation& mt,
                           const std::set<int>& removed) {
  for (int label : removed) mt.locate(label);

  std::vector<std::set<Diagonal>> cut(mt.components().size());
  for (int label : removed) {
    const auto& [c, d] = mt.locate(label);
    cut[c].insert(d);
  }
  std::vector<std::map<Diagonal, int>> label_of(mt.components().size());
  for (const auto& [label, ref] : mt.labels())
    label_of[ref.first][ref.second] = label;

  std::vector<Triangulation> pieces;
  std::map<int, MultiTriangulation::DiagonalRef> labels;
  std::vector<CutComponent> provenance;

  for (std::size_t c = 0; c < mt.components().size(); ++c) {
    const Triangulation& t = mt.components()[c];
    const auto tris = triangles(t);
    const int count = static_cast<int>(tris.size());

    auto adjacent_triangles = [&](const Diagonal& d) {
      std::vector<int> found;
      for (int i = 0; i < count; ++i) {
        int hits = 0;
        for (int v : tris[i])
          if (v == d.first || v == d.second) ++hits;
        if (hits == 2) found.push_back(i);
      }
      return found;
    };

    // union triangles across diagonals that are kept
    std::vector<int> root(count);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const Diagonal& d : t.diagonals()) {
      if (cut[c].count(d)) continue;
      auto pair = adjacent_triangles(d);
      int ra = find(pair[0]), rb = find(pair[1]);
      if (ra != rb) root[std::max(ra, rb)] = std::min(ra, rb);
    }

    struct Region {
      std::vector<int> source;            // new index -> original vertex
      std::map<int, int> renumber;        // original vertex -> new index
      std::vector<Diagonal> diagonals;    // already renumbered
      std::vector<int> diagonal_labels;   // parallel to diagonals
    };
    std::map<int, Region> regions;  // keyed by union-find root
    for (int i = 0; i < count; ++i) {
      Region& region = regions[find(i)];
      for (int v : tris[i])
        if (!region.renumber.count(v)) region.renumber[v] = 0;
    }
    for (auto& [r, region] : regions) {
      for (const auto& [v, unused] : region.renumber)
        region.source.push_back(v);
      for (std::size_t i = 0; i < region.source.size(); ++i)
        region.renumber[region.source[i]] = static_cast<int>(i);
    }
    for (const Diagonal& d : t.diagonals()) {
      if (cut[c].count(d)) continue;
      Region& region = regions[find(adjacent_triangles(d)[0])];
      region.diagonals.push_back(
          make_diagonal(region.renumber.at(d.first), region.renumber.at(d.second)));
      region.diagonal_labels.push_back(label_of[c][d]);
    }

    // deterministic order: regions sorted by least original vertex
    std::vector<std::pair<int, int>> ordered;
    for (const auto& [r, region] : regions)
      ordered.push_back({region.source.front(), r});
    std::sort(ordered.begin(), ordered.end());

    for (const auto& [least, r] : ordered) {
      Region& region = regions[r];
      int piece = static_cast<int>(pieces.size());
      pieces.push_back(Triangulation(static_cast<int>(region.source.size()),
                                     region.diagonals));
      for (std::size_t i = 0; i < region.diagonals.size(); ++i)
        labels[region.diagonal_labels[i]] = {piece, region.diagonals[i]};
      provenance.push_back({static_cast<int>(c), std::move(region.source)});
    }
  }
  return {MultiTriangulation(std::move(pieces), std::move(labels)),
          std::move(provenance)};
}

}  // namespace clustergroups
