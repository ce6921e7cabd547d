#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewinc/errors.hpp"

namespace skewinc {

struct PosetBuild;

/// Finite poset whose elements are 0..n-1. Class invariant: the integer
/// order is a linear extension, i.e. leq(i, j) implies i <= j. All internal
/// indices are 0-based; the text format is 1-based.
class Poset {
 public:
  /// Builds the poset generated by `relations` (pairs (a, b) meaning a < b,
  /// not required to be covers) on `n` elements, transitively closing and
  /// then relabeling along a linear extension. The relabeling is stable:
  /// among the minimal unplaced elements, the smallest original index goes
  /// first. Throws NotAPoset if the generated relation has a cycle.
  static PosetBuild from_relations(
      int n, const std::vector<std::pair<int, int>>& relations);

  int size() const { return n_; }
  bool leq(int i, int j) const { return leq_[idx(i, j)]; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  /// Hasse covers, sorted lexicographically.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Elements k with i <= k <= j, ascending. Empty unless leq(i, j).
  std::vector<int> interval(int i, int j) const;

  /// Largest cardinality of a chain inside [i, j]: 0 when !leq(i, j),
  /// 1 when i == j, computed by longest-path DP otherwise.
  int interval_length(int i, int j) const;

  /// Comparable pairs (i, j) with leq(i, j), sorted lexicographically.
  /// Diagonal pairs included.
  std::vector<std::pair<int, int>> comparable_pairs() const;

  /// Connected components of the comparability graph; each component is
  /// ascending, components ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  bool operator==(const Poset& other) const {
    return n_ == other.n_ && leq_ == other.leq_;
  }
  bool operator!=(const Poset& other) const { return !(*this == other); }

 private:
  Poset(int n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {}
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<char> leq_;  // row-major n x n, reflexive-transitive
};

struct PosetBuild {
  Poset poset;
  std::vector<int> to_internal;  // to_internal[original] = internal label
  bool relabeled = false;
};

/// Parses the textual poset format:
///   elements <n>
///   <a> < <b>        (one relation per line, 1-based)
/// Blank lines and lines starting with '#' are ignored. Relations need not
/// be covers. Throws Parse on malformed input, including relation sets that
/// fail antisymmetry (cycles).
PosetBuild parse_poset_text(std::string_view text);

/// Canonical text: "elements <n>" followed by the Hasse covers, 1-based,
/// sorted. parse(format(p)) reproduces p with the identity relabeling.
std::string format_poset(const Poset& p);

/// All order isomorphisms p -> q as permutations alpha (alpha[i] in q),
/// in lexicographic order. Empty if the posets are not isomorphic.
std::vector<std::vector<int>> poset_isomorphisms(const Poset& p,
                                                 const Poset& q);

/// One representative per isomorphism class of posets on exactly n elements
/// (n >= 1; intended for small n — the count for n = 1..5 is 1, 2, 5, 16, 63).
/// Deterministic order.
std::vector<Poset> enumerate_posets(int n);

}  // namespace skewinc
