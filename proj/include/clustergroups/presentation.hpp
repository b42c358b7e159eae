#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "clustergroups/errors.hpp"
#include "clustergroups/groups.hpp"
#include "clustergroups/quiver.hpp"

namespace clustergroups {

inline constexpr std::size_t kDefaultCosetCap = 1000000;

// Group presentation with involution generators: every relator is a word
// asserted equal to the identity, and the relator set always contains [i, i]
// for every generator, so words never need inverse letters.
struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;

  friend auto operator<=>(const Presentation&, const Presentation&) = default;
};

// The cluster presentation of a quiver: involutions, commuting relators for
// unjoined pairs, braid relators for simply joined pairs (pairs joined with
// multiplicity >= 2 contribute nothing), and for each chordless oriented
// simple cycle i_1 -> ... -> i_r -> i_1 the r-1 relators equating consecutive
// cyclic words u_k of length 2r-2, encoded as u_k * reverse(u_{k+1}).
inline Presentation presentation_from_quiver(const Quiver& q) {
  const int n = q.vertex_count();
  Presentation p;
  p.generator_count = n;
  for (int i = 1; i <= n; ++i) p.relators.push_back({i, i});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int joined = q.multiplicity(i, j) + q.multiplicity(j, i);
      if (joined == 0)
        p.relators.push_back({i, j, i, j});
      else if (joined == 1)
        p.relators.push_back({i, j, i, j, i, j});
    }
  for (const auto& cycle : chordless_oriented_simple_cycles(q)) {
    const int r = static_cast<int>(cycle.size());
    auto cyclic_word = [&](int k) {
      Word u;
      for (int t = 0; t < 2 * r - 2; ++t) u.push_back(cycle[(k + t) % r]);
      return u;
    };
    for (int k = 0; k + 1 < r; ++k) {
      Word relator = cyclic_word(k);
      Word next = cyclic_word(k + 1);
      relator.insert(relator.end(), next.rbegin(), next.rend());
      p.relators.push_back(std::move(relator));
    }
  }
  return p;
}

// Deletes adjacent equal letters until none remain.
inline Word free_reduce(const Word& word) {
  Word reduced;
  for (int letter : word) {
    if (!reduced.empty() && reduced.back() == letter)
      reduced.pop_back();
    else
      reduced.push_back(letter);
  }
  return reduced;
}

// True iff every relator evaluates to the identity permutation.
inline bool check_homomorphism(const Presentation& p,
                               const GeneratorImages& images) {
  for (int i = 1; i <= p.generator_count; ++i) images.transposition_of(i);
  for (const Word& relator : p.relators)
    if (!evaluate_word(relator, images).is_identity()) return false;
  return true;
}

// Coset table over the generators; rows are cosets, entry 0 means undefined.
// Generators are involutions, so each generator column is its own inverse
// and a complete column is a permutation of the rows.
struct CosetTable {
  std::vector<std::vector<int>> rows;
  bool complete = false;
  std::size_t coset_count = 0;
};

namespace detail {

// HLT coset enumeration specialised to involutory generators: the table is
// kept symmetric (c.g = d implies d.g = c) so scans never need inverses.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, const std::vector<Word>& subgroup,
                  std::size_t cap)
      : ngens_(p.generator_count), cap_(cap) {
    if (cap < 1) throw Error("coset cap must be positive");
    auto check = [&](const Word& w) {
      for (int letter : w)
        if (letter < 1 || letter > ngens_)
          throw UnknownGenerator("letter t" + std::to_string(letter) +
                                 " outside the generator range");
    };
    for (const Word& w : p.relators) check(w);
    for (const Word& w : subgroup) check(w);
    relators_ = p.relators;
    subgroup_ = subgroup;
    table_.push_back(std::vector<int>(ngens_, -1));
    parent_.push_back(0);
  }

  // Runs to completion; false when the coset cap was hit.
  bool run() {
    for (const Word& w : subgroup_)
      if (!scan_and_fill(0, w)) return false;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (rep(static_cast<int>(c)) != static_cast<int>(c)) continue;
      for (const Word& w : relators_) {
        if (!scan_and_fill(static_cast<int>(c), w)) return false;
        if (rep(static_cast<int>(c)) != static_cast<int>(c)) break;
      }
    }
    return true;
  }

  std::size_t alive() const { return alive_; }

  // Compacted table with live cosets renumbered 1..count in order.
  CosetTable extract() {
    CosetTable out;
    std::vector<int> fresh(table_.size(), 0);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (rep(static_cast<int>(c)) == static_cast<int>(c))
        fresh[c] = ++next;
    out.coset_count = next;
    out.complete = true;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!fresh[c]) continue;
      std::vector<int> row(ngens_, 0);
      for (int g = 0; g < ngens_; ++g) {
        int d = table_[c][g];
        if (d < 0)
          out.complete = false;
        else
          row[g] = fresh[rep(d)];
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }

  // Consistency pass: every relator closes at every live coset and every
  // subgroup generator closes at the subgroup coset.
  bool verify() {
    for (const Word& w : subgroup_)
      if (!closes(0, w)) return false;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (rep(static_cast<int>(c)) != static_cast<int>(c)) continue;
      for (const Word& w : relators_)
        if (!closes(static_cast<int>(c), w)) return false;
    }
    return true;
  }

 private:
  int ngens_;
  std::size_t cap_;
  std::vector<Word> relators_, subgroup_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<int> dead_;
  std::size_t alive_ = 1;

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) c = std::exchange(parent_[c], r);
    return r;
  }

  bool define(int c, int g) {
    if (alive_ >= cap_ || table_.size() >= 4 * cap_ + 1024) return false;
    int d = static_cast<int>(table_.size());
    table_.push_back(std::vector<int>(ngens_, -1));
    parent_.push_back(d);
    table_[c][g] = d;
    table_[d][g] = c;
    ++alive_;
    return true;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --alive_;
    dead_.push_back(b);
  }

  void process_coincidences() {
    while (!dead_.empty()) {
      int e = dead_.front();
      dead_.pop_front();
      for (int g = 0; g < ngens_; ++g) {
        int d = table_[e][g];
        if (d < 0) continue;
        table_[e][g] = -1;
        if (table_[d][g] == e) table_[d][g] = -1;
        int mu = rep(e), nu = rep(d);
        if (table_[mu][g] >= 0)
          merge(nu, rep(table_[mu][g]));
        else if (table_[nu][g] >= 0)
          merge(mu, rep(table_[nu][g]));
        else {
          table_[mu][g] = nu;
          table_[nu][g] = mu;
        }
      }
    }
  }

  bool scan_and_fill(int c, const Word& word) {
    if (word.empty()) return true;
    const int len = static_cast<int>(word.size());
    int f = c, b = c;
    int i = 0, j = len - 1;
    while (true) {
      while (i <= j && table_[f][word[i] - 1] >= 0) f = table_[f][word[i++] - 1];
      if (i > j) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return true;
      }
      while (j >= i && table_[b][word[j] - 1] >= 0)
        b = table_[b][word[j--] - 1];
      if (j < i) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return true;
      }
      if (j == i) {
        table_[f][word[i] - 1] = b;
        table_[b][word[i] - 1] = f;
        return true;
      }
      if (!define(f, word[i] - 1)) return false;
    }
  }

  bool closes(int c, const Word& word) {
    int at = rep(c);
    for (int letter : word) {
      int d = table_[at][letter - 1];
      if (d < 0) return false;
      at = rep(d);
    }
    return at == rep(c);
  }
};

}  // namespace detail

// Coset table of the subgroup generated by the given words; incomplete when
// the cap is hit before the enumeration closes.
inline CosetTable coset_enumeration(const Presentation& p,
                                    const std::vector<Word>& subgroup,
                                    std::size_t cap = kDefaultCosetCap) {
  detail::CosetEnumerator enumerator(p, subgroup, cap);
  if (!enumerator.run()) {
    CosetTable capped = enumerator.extract();
    capped.complete = false;
    return capped;
  }
  if (!enumerator.verify())
    throw Error("coset enumeration produced an inconsistent table");
  return enumerator.extract();
}

// Index of the subgroup generated by the given words; CapExceeded means the
// enumeration was inconclusive, not that the index is infinite.
inline std::size_t todd_coxeter(const Presentation& p,
                                const std::vector<Word>& subgroup,
                                std::size_t cap = kDefaultCosetCap) {
  CosetTable table = coset_enumeration(p, subgroup, cap);
  if (!table.complete)
    throw CapExceeded("coset enumeration exceeded " + std::to_string(cap) +
                      " cosets");
  return table.coset_count;
}

inline std::uint64_t group_order(const Presentation& p,
                                 std::size_t cap = kDefaultCosetCap) {
  return todd_coxeter(p, {}, cap);
}

// One relator per line, letters as space-separated generator indices.
inline std::string presentation_to_text(const Presentation& p) {
  std::string out;
  for (const Word& relator : p.relators) {
    for (std::size_t i = 0; i < relator.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(relator[i]);
    }
    out += '\n';
  }
  return out;
}

// Human-readable relator: "t1 t2 t1 t2".
inline std::string word_to_text(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += 't' + std::to_string(word[i]);
  }
  return out;
}

}  // namespace clustergroups
