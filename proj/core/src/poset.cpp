#include "skewinc/poset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace skewinc {

namespace {

int parse_index(std::string_view token, int n, int line_no) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorKind::Parse, "line " + std::to_string(line_no) +
                               ": expected an element index, got '" +
                               std::string(token) + "'");
  }
  if (v < 1 || v > n) {
    fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": index " +
                               std::to_string(v) + " out of range 1.." +
                               std::to_string(n));
  }
  return v - 1;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

PosetBuild Poset::from_relations(
    int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "poset needs at least 1 element");
  std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> char& {
    return reach[static_cast<std::size_t>(i) * n + j];
  };
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      fail(ErrorKind::InvalidArgument, "relation index out of range");
    }
    if (a == b) {
      fail(ErrorKind::NotAPoset, "relation " + std::to_string(a + 1) + " < " +
                                     std::to_string(a + 1) +
                                     " violates antisymmetry");
    }
    at(a, b) = 1;
  }
  // Warshall transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (at(i, k))
        for (int j = 0; j < n; ++j)
          if (at(k, j)) at(i, j) = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) && at(j, i)) {
        fail(ErrorKind::NotAPoset, "cycle through " + std::to_string(i + 1) +
                                       " and " + std::to_string(j + 1));
      }

  // Stable linear extension: repeatedly place the smallest-index minimal
  // element. order[t] = original index placed at internal position t.
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j)) ++indegree[j];
  std::vector<int> order;
  order.reserve(n);
  std::set<int> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.insert(i);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int j = 0; j < n; ++j)
      if (at(v, j) && --indegree[j] == 0) ready.insert(j);
  }

  std::vector<int> to_internal(n);
  for (int t = 0; t < n; ++t) to_internal[order[t]] = t;

  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    leq[static_cast<std::size_t>(to_internal[i]) * n + to_internal[i]] = 1;
    for (int j = 0; j < n; ++j)
      if (at(i, j))
        leq[static_cast<std::size_t>(to_internal[i]) * n + to_internal[j]] = 1;
  }

  PosetBuild built{Poset(n, std::move(leq)), std::move(to_internal), false};
  for (int i = 0; i < n; ++i)
    if (built.to_internal[i] != i) built.relabeled = true;
  return built;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!less(i, j)) continue;
      bool direct = true;
      for (int k = i + 1; k < j && direct; ++k) {
        if (less(i, k) && less(k, j)) direct = false;
      }
      if (direct) covers.emplace_back(i, j);
    }
  }
  return covers;
}

std::vector<int> Poset::interval(int i, int j) const {
  std::vector<int> out;
  if (!leq(i, j)) return out;
  for (int k = i; k <= j; ++k) {
    if (leq(i, k) && leq(k, j)) out.push_back(k);
  }
  return out;
}

int Poset::interval_length(int i, int j) const {
  std::vector<int> members = interval(i, j);
  if (members.empty()) return 0;
  // Longest chain ending at each member; members ascend, so every
  // predecessor of a member is processed before it.
  std::vector<int> longest(members.size(), 1);
  for (std::size_t b = 0; b < members.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      if (less(members[a], members[b]))
        longest[b] = std::max(longest[b], longest[a] + 1);
    }
  }
  return longest.back();
}

std::vector<std::pair<int, int>> Poset::comparable_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      if (leq(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::vector<int>> Poset::components() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (comparable(i, j)) parent[find(i)] = find(j);
  std::vector<std::vector<int>> comps;
  std::vector<int> slot(n_, -1);
  for (int i = 0; i < n_; ++i) {
    int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[root]].push_back(i);
  }
  return comps;
}

PosetBuild parse_poset_text(std::string_view text) {
  std::vector<std::pair<int, int>> relations;
  int n = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, end == std::string_view::npos ? std::string_view::npos
                                           : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "elements") {
        fail(ErrorKind::Parse,
             "line " + std::to_string(line_no) +
                 ": expected 'elements <n>' before any relations");
      }
      int v = 0;
      auto [ptr, ec] =
          std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), v);
      if (ec != std::errc() || ptr != tokens[1].data() + tokens[1].size() ||
          v < 1) {
        fail(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                   ": bad element count '" +
                                   std::string(tokens[1]) + "'");
      }
      n = v;
      continue;
    }
    if (tokens.size() != 3 || tokens[1] != "<") {
      fail(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                 ": expected '<a> < <b>'");
    }
    relations.emplace_back(parse_index(tokens[0], n, line_no),
                           parse_index(tokens[2], n, line_no));
  }
  if (n < 0) fail(ErrorKind::Parse, "missing 'elements <n>' line");
  try {
    return Poset::from_relations(n, relations);
  } catch (const Error& e) {
    // Antisymmetry violations in a text source are malformed input, not a
    // library-level misuse: report them as parse errors.
    if (e.kind() == ErrorKind::NotAPoset) fail(ErrorKind::Parse, e.what());
    throw;
  }
}

std::string format_poset(const Poset& p) {
  std::string out = "elements " + std::to_string(p.size()) + "\n";
  for (auto [i, j] : p.cover_pairs()) {
    out += std::to_string(i + 1) + " < " + std::to_string(j + 1) + "\n";
  }
  return out;
}

namespace {

void extend_isomorphism(const Poset& p, const Poset& q, std::vector<int>& alpha,
                        std::vector<char>& used, int depth,
                        std::vector<std::vector<int>>& out) {
  const int n = p.size();
  if (depth == n) {
    out.push_back(alpha);
    return;
  }
  for (int candidate = 0; candidate < n; ++candidate) {
    if (used[candidate]) continue;
    bool ok = true;
    for (int prev = 0; prev < depth && ok; ++prev) {
      if (p.leq(prev, depth) != q.leq(alpha[prev], candidate)) ok = false;
      if (p.leq(depth, prev) != q.leq(candidate, alpha[prev])) ok = false;
    }
    if (p.leq(depth, depth) != q.leq(candidate, candidate)) ok = false;
    if (!ok) continue;
    alpha[depth] = candidate;
    used[candidate] = 1;
    extend_isomorphism(p, q, alpha, used, depth + 1, out);
    used[candidate] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> poset_isomorphisms(const Poset& p,
                                                 const Poset& q) {
  if (p.size() != q.size()) return {};
  std::vector<int> alpha(p.size(), -1);
  std::vector<char> used(p.size(), 0);
  std::vector<std::vector<int>> out;
  extend_isomorphism(p, q, alpha, used, 0, out);
  return out;
}

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "poset needs at least 1 element");
  // Strict relations contained in the integer order are exactly the posets
  // labeled along a linear extension, and every isomorphism class has such a
  // labeling. Enumerate transitive upper-triangular bit masks and keep one
  // representative per class.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Poset> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size());
       ++mask) {
    std::vector<char> rel(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int i, int j) -> char& {
      return rel[static_cast<std::size_t>(i) * n + j];
    };
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask >> b & 1) at(slots[b].first, slots[b].second) = 1;
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = i + 1; j < n && transitive; ++j)
        for (int k = j + 1; k < n && transitive; ++k)
          if (at(i, j) && at(j, k) && !at(i, k)) transitive = false;
    if (!transitive) continue;
    std::vector<std::pair<int, int>> relations;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) relations.push_back(slots[b]);
    Poset candidate = Poset::from_relations(n, relations).poset;
    bool fresh = std::none_of(reps.begin(), reps.end(), [&](const Poset& r) {
      return !poset_isomorphisms(r, candidate).empty();
    });
    if (fresh) reps.push_back(std::move(candidate));
  }
  return reps;
}

}  // namespace skewinc
