#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clustergroups/errors.hpp"

namespace clustergroups {

inline constexpr std::size_t kDefaultElementCap = 10000000;

namespace detail {

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace detail

// Permutation of {1..N}, stored by images.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 1);
  }

  static Permutation from_images(std::vector<int> images) {
    Permutation p;
    p.images_ = std::move(images);
    std::vector<bool> hit(p.images_.size(), false);
    for (int v : p.images_) {
      if (v < 1 || v > static_cast<int>(p.images_.size()) || hit[v - 1])
        throw Error("images do not form a permutation");
      hit[v - 1] = true;
    }
    return p;
  }

  static Permutation transposition(int degree, int x, int y) {
    if (x < 1 || x > degree || y < 1 || y > degree || x == y)
      throw Error("invalid transposition");
    Permutation p(degree);
    std::swap(p.images_[x - 1], p.images_[y - 1]);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int k) const { return images_[k - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int k = 1; k <= degree(); ++k)
      if (images_[k - 1] != k) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (int k = 1; k <= degree(); ++k) p.images_[images_[k - 1] - 1] = k;
    return p;
  }

  // Nontrivial cycles, each starting at its least element, sorted by that.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[start - 1] || images_[start - 1] == start) continue;
      std::vector<int> cycle;
      for (int v = start; !seen[v - 1]; v = images_[v - 1]) {
        seen[v - 1] = true;
        cycle.push_back(v);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (p o q)(k) = p(q(k)): the right factor acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("composing permutations of degrees " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<int> images(p.degree());
  for (int k = 1; k <= p.degree(); ++k) images[k - 1] = p(q(k));
  return Permutation::from_images(std::move(images));
}

inline std::string to_cycle_string(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

// Accepts cycle notation with blank or comma separators, e.g. "(1 2)(3,4)";
// "()" and "e" denote the identity.
inline Permutation parse_permutation(int degree, std::string_view text) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::size_t pos = 0;
  auto skip_blank = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  skip_blank();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_blank();
  }
  std::vector<bool> moved(degree, false);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    skip_blank();
    while (pos < text.size() && text[pos] != ')') {
      int value = 0;
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected a vertex number in cycle notation");
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + (text[pos++] - '0');
      if (value < 1 || value > degree)
        throw ParseError("cycle entry " + std::to_string(value) +
                         " outside 1.." + std::to_string(degree));
      if (moved[value - 1])
        throw ParseError("cycles are not disjoint at " + std::to_string(value));
      moved[value - 1] = true;
      cycle.push_back(value);
      skip_blank();
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[i + 1];
    if (cycle.size() > 1) images[cycle.back() - 1] = cycle.front();
    skip_blank();
  }
  return Permutation::from_images(std::move(images));
}

// Breadth-first closure of a generating set under composition.
struct GeneratedGroup {
  std::vector<Permutation> elements;  // sorted

  std::uint64_t order() const { return elements.size(); }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }
};

inline GeneratedGroup generate(int degree,
                               const std::vector<Permutation>& generators,
                               std::size_t cap = kDefaultElementCap) {
  if (cap < 1) throw Error("element cap must be positive");
  for (const Permutation& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match " + std::to_string(degree));
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& e : frontier)
      for (const Permutation& g : generators) {
        Permutation product = compose(g, e);
        if (seen.insert(product).second) {
          if (seen.size() > cap)
            throw CapExceeded("generated group exceeds cap of " +
                              std::to_string(cap));
          next.push_back(std::move(product));
        }
      }
    frontier = std::move(next);
  }
  return {std::vector<Permutation>(seen.begin(), seen.end())};
}

// Partition of {1..N}: disjoint nonempty sorted parts covering the set,
// parts ordered by least element.
class SetPartition {
 public:
  SetPartition(int degree, std::vector<std::vector<int>> parts)
      : degree_(degree), parts_(std::move(parts)) {
    std::vector<bool> hit(degree, false);
    for (auto& part : parts_) {
      if (part.empty()) throw Error("empty part");
      std::sort(part.begin(), part.end());
      for (int v : part) {
        if (v < 1 || v > degree || hit[v - 1])
          throw Error("parts must disjointly cover 1.." +
                      std::to_string(degree));
        hit[v - 1] = true;
      }
    }
    for (bool h : hit)
      if (!h) throw Error("parts must cover 1.." + std::to_string(degree));
    std::sort(parts_.begin(), parts_.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
  }

  static SetPartition singletons(int degree) {
    std::vector<std::vector<int>> parts;
    for (int v = 1; v <= degree; ++v) parts.push_back({v});
    return SetPartition(degree, std::move(parts));
  }

  int degree() const { return degree_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }

  int part_index_of(int element) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (std::binary_search(parts_[i].begin(), parts_[i].end(), element))
        return static_cast<int>(i);
    throw Error("element " + std::to_string(element) + " outside 1.." +
                std::to_string(degree_));
  }

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int degree_ = 0;
  std::vector<std::vector<int>> parts_;
};

// Common refinement: parts are the nonempty pairwise intersections.
inline SetPartition partition_meet(const SetPartition& p1,
                                   const SetPartition& p2) {
  if (p1.degree() != p2.degree())
    throw DegreeMismatch("partition degrees differ");
  std::map<std::pair<int, int>, std::vector<int>> buckets;
  for (int v = 1; v <= p1.degree(); ++v)
    buckets[{p1.part_index_of(v), p2.part_index_of(v)}].push_back(v);
  std::vector<std::vector<int>> parts;
  for (auto& [key, part] : buckets) parts.push_back(std::move(part));
  return SetPartition(p1.degree(), std::move(parts));
}

// Finest partition coarser than both: transitive closure via union-find.
inline SetPartition partition_join(const SetPartition& p1,
                                   const SetPartition& p2) {
  if (p1.degree() != p2.degree())
    throw DegreeMismatch("partition degrees differ");
  const int n = p1.degree();
  std::vector<int> root(n + 1);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  };
  for (const SetPartition* p : {&p1, &p2})
    for (const auto& part : p->parts())
      for (std::size_t i = 1; i < part.size(); ++i) unite(part[0], part[i]);
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v <= n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> parts;
  for (auto& [r, part] : groups) parts.push_back(std::move(part));
  return SetPartition(n, std::move(parts));
}

inline bool refines(const SetPartition& p1, const SetPartition& p2) {
  if (p1.degree() != p2.degree())
    throw DegreeMismatch("partition degrees differ");
  for (const auto& part : p1.parts()) {
    int target = p2.part_index_of(part[0]);
    for (int v : part)
      if (p2.part_index_of(v) != target) return false;
  }
  return true;
}

inline std::string to_string(const SetPartition& p) {
  std::ostringstream out;
  for (const auto& part : p.parts()) {
    out << '{';
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out << ',';
      out << part[i];
    }
    out << '}';
  }
  return out.str();
}

// Parses "{1,2}{3}"; the degree is the total number of elements.
inline SetPartition parse_set_partition(std::string_view text) {
  std::vector<std::vector<int>> parts;
  std::size_t pos = 0;
  int total = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != '{') throw ParseError("expected '{' in partition");
    ++pos;
    std::vector<int> part;
    while (pos < text.size() && text[pos] != '}') {
      if (text[pos] == ',' || text[pos] == ' ') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected an element number in partition");
      int value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + (text[pos++] - '0');
      part.push_back(value);
      ++total;
    }
    if (pos >= text.size()) throw ParseError("unterminated part");
    ++pos;  // '}'
    parts.push_back(std::move(part));
  }
  try {
    return SetPartition(total, std::move(parts));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

// Young subgroup Y(rho) of the symmetric group on {1..N}: permutations fixing
// every part of rho setwise.
struct YoungSubgroup {
  SetPartition partition;

  friend auto operator<=>(const YoungSubgroup&, const YoungSubgroup&) = default;
};

inline std::uint64_t young_order(const YoungSubgroup& y) {
  std::uint64_t order = 1;
  for (const auto& part : y.partition.parts())
    order *= detail::factorial(part.size());
  return order;
}

inline bool young_contains(const YoungSubgroup& y, const Permutation& p) {
  if (p.degree() != y.partition.degree())
    throw DegreeMismatch("permutation degree does not match the partition");
  for (const auto& part : y.partition.parts())
    for (int v : part)
      if (!std::binary_search(part.begin(), part.end(), p(v))) return false;
  return true;
}

// Enumerates Y(rho) directly by composing arrangements of each part; an
// independent construction used to cross-check generated subgroups.
inline std::vector<Permutation> young_elements(const YoungSubgroup& y) {
  std::vector<Permutation> out{Permutation(y.partition.degree())};
  for (const auto& part : y.partition.parts()) {
    std::vector<int> arrangement = part;
    std::vector<Permutation> extended;
    do {
      std::vector<int> images(y.partition.degree());
      std::iota(images.begin(), images.end(), 1);
      for (std::size_t i = 0; i < part.size(); ++i)
        images[part[i] - 1] = arrangement[i];
      Permutation block = Permutation::from_images(std::move(images));
      for (const Permutation& base : out)
        extended.push_back(compose(block, base));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out = std::move(extended);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Word in the defining generators; letters are generator indices. There are
// no inverse letters: every generator is an involution.
using Word = std::vector<int>;

// Images of generators as transpositions of {1..N}.
class GeneratorImages {
 public:
  GeneratorImages(int degree, std::map<int, std::pair<int, int>> images)
      : degree_(degree), images_(std::move(images)) {
    for (const auto& [generator, pair] : images_) {
      auto [x, y] = pair;
      if (x < 1 || x > degree || y < 1 || y > degree || x == y)
        throw Error("image of t" + std::to_string(generator) +
                    " is not a transposition");
    }
  }

  int degree() const { return degree_; }
  const std::map<int, std::pair<int, int>>& images() const { return images_; }

  const std::pair<int, int>& transposition_of(int generator) const {
    auto it = images_.find(generator);
    if (it == images_.end())
      throw UnknownGenerator("no image for generator t" +
                             std::to_string(generator));
    return it->second;
  }

  Permutation image(int generator) const {
    const auto& [x, y] = transposition_of(generator);
    return Permutation::transposition(degree_, x, y);
  }

 private:
  int degree_;
  std::map<int, std::pair<int, int>> images_;
};

// Leftmost letter acts first.
inline Permutation evaluate_word(const Word& word,
                                 const GeneratorImages& images) {
  Permutation result(images.degree());
  for (int letter : word) result = compose(images.image(letter), result);
  return result;
}

}  // namespace clustergroups
