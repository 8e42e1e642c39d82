#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "powercx/complex.hpp"

namespace powercx {

/// A chain with one face per rank -1..k.
struct Flag {
  std::vector<FaceId> faces;

  FaceId at(int rank) const { return faces.at(static_cast<std::size_t>(rank + 1)); }
  auto operator<=>(Flag const &) const = default;
};

struct FlagHash {
  std::size_t operator()(std::vector<FaceId> const &v) const noexcept
  {
    std::size_t h = v.size();
    for (FaceId x : v)
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
  std::size_t operator()(Flag const &f) const noexcept { return (*this)(f.faces); }
};

/// Faces h with below < h < above adjacent to both in the Hasse diagram.
inline std::vector<FaceId> between(IncidenceComplex const &K, FaceId below,
                                   FaceId above)
{
  auto u = K.up(below);
  auto d = K.down(above);
  std::vector<FaceId> out;
  std::set_intersection(u.begin(), u.end(), d.begin(), d.end(),
                        std::back_inserter(out));
  return out;
}

/// All saturated chains lo = h_0 < h_1 < ... < h_m = hi along cover steps.
inline std::vector<std::vector<FaceId>> chains_between(IncidenceComplex const &K,
                                                       FaceId lo, FaceId hi)
{
  std::vector<std::vector<FaceId>> out;
  std::vector<FaceId> chain{lo};
  std::function<void(FaceId)> extend = [&](FaceId f) {
    if (f == hi) {
      out.push_back(chain);
      return;
    }
    for (FaceId g : K.up(f))
      if (K.leq(g, hi)) {
        chain.push_back(g);
        extend(g);
        chain.pop_back();
      }
  };
  if (K.leq(lo, hi))
    extend(lo);
  return out;
}

/// All flags, in lexicographic order of face ids. Requires unique bottom/top
/// and full-length maximal chains.
inline std::vector<Flag> flags(IncidenceComplex const &K)
{
  std::vector<Flag> out;
  for (auto &c : chains_between(K, K.bottom(), K.top())) {
    if (c.size() != static_cast<std::size_t>(K.rank()) + 2)
      throw precondition_error("complex has a maximal chain of length " +
                               std::to_string(c.size()));
    out.push_back(Flag{std::move(c)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Flags as nodes, with edges labelled i joining flags that differ exactly in
/// their i-face.
class FlagGraph {
 public:
  explicit FlagGraph(IncidenceComplex const &K) : rank_(K.rank()), flags_(powercx::flags(K))
  {
    for (std::size_t i = 0; i < flags_.size(); ++i)
      index_.emplace(flags_[i].faces, i);
    auto const labels = static_cast<std::size_t>(std::max(rank_, 0));
    adjacent_.assign(flags_.size(), std::vector<std::vector<std::size_t>>(labels));
    for (std::size_t f = 0; f < flags_.size(); ++f) {
      auto const &phi = flags_[f];
      for (int i = 0; i < rank_; ++i) {
        for (FaceId h : between(K, phi.at(i - 1), phi.at(i + 1))) {
          if (h == phi.at(i))
            continue;
          auto psi = phi.faces;
          psi[static_cast<std::size_t>(i + 1)] = h;
          adjacent_[f][static_cast<std::size_t>(i)].push_back(index_.at(psi));
        }
      }
    }
  }

  int rank() const { return rank_; }
  std::size_t size() const { return flags_.size(); }
  std::vector<Flag> const &flags() const { return flags_; }
  Flag const &flag(std::size_t i) const { return flags_.at(i); }

  /// Flags i-adjacent to flag f.
  std::vector<std::size_t> const &neighbors(std::size_t f, int i) const
  {
    return adjacent_.at(f).at(static_cast<std::size_t>(i));
  }

  std::optional<std::size_t> index_of(std::vector<FaceId> const &faces) const
  {
    auto it = index_.find(faces);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  struct Edge {
    std::size_t from, to;
    int label;
  };

  /// Each undirected edge once (from < to).
  std::vector<Edge> edges() const
  {
    std::vector<Edge> out;
    for (std::size_t f = 0; f < flags_.size(); ++f)
      for (int i = 0; i < rank_; ++i)
        for (std::size_t g : neighbors(f, i))
          if (f < g)
            out.push_back({f, g, i});
    return out;
  }

 private:
  int rank_;
  std::vector<Flag> flags_;
  std::unordered_map<std::vector<FaceId>, std::size_t, FlagHash> index_;
  std::vector<std::vector<std::vector<std::size_t>>> adjacent_;
};

inline FlagGraph flag_graph(IncidenceComplex const &K) { return FlagGraph(K); }

struct Violation {
  std::string axiom;  // "I1".."I4"
  std::string detail;
  std::vector<FaceId> faces;
  std::vector<std::vector<FaceId>> flags;
};

struct ValidationReport {
  bool is_complex = false;
  /// c_0..c_{k-1}; present iff is_complex.
  std::optional<std::vector<int>> c;
  std::vector<Violation> violations;
  /// Structural problems found before the axioms could be checked.
  std::vector<std::string> malformed;
};

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

inline void check_i1(IncidenceComplex const &K, std::vector<Violation> &out)
{
  for (int r : {-1, K.rank()}) {
    auto faces = K.faces_of_rank(r);
    if (faces.size() != 1)
      out.push_back({"I1",
                     "expected one face of rank " + std::to_string(r) + ", found " +
                         std::to_string(faces.size()),
                     {faces.begin(), faces.end()},
                     {}});
  }
  std::vector<FaceId> minimal, maximal;
  for (FaceId f = 0; f < K.size(); ++f) {
    if (K.down(f).empty())
      minimal.push_back(f);
    if (K.up(f).empty())
      maximal.push_back(f);
  }
  if (minimal.size() > 1)
    out.push_back({"I1", "no unique least face", minimal, {}});
  if (maximal.size() > 1)
    out.push_back({"I1", "no unique greatest face", maximal, {}});
}

inline void check_i2(IncidenceComplex const &K, std::vector<Violation> &out)
{
  for (auto [lo, hi] : K.covers())
    if (K.rank_of(hi) != K.rank_of(lo) + 1)
      out.push_back({"I2", "cover skips a rank, so a maximal chain is short", {lo, hi}, {}});
  for (FaceId f = 0; f < K.size(); ++f) {
    if (K.rank_of(f) > -1 && K.down(f).empty())
      out.push_back({"I2", "face is minimal but has rank > -1", {f}, {}});
    if (K.rank_of(f) < K.rank() && K.up(f).empty())
      out.push_back({"I2", "face is maximal but has rank < k", {f}, {}});
  }
}

/// Strong flag-connectivity holds iff every section G/F is flag-connected:
/// the flags containing a chain are a product of the flag sets of the
/// sections between consecutive chain elements, and adjacency moves one
/// factor at a time. Sections of rank <= 1 are always connected.
inline void check_i3(IncidenceComplex const &K, std::vector<Violation> &out)
{
  for (FaceId lo = 0; lo < K.size(); ++lo)
    for (FaceId hi = 0; hi < K.size(); ++hi) {
      if (K.rank_of(hi) - K.rank_of(lo) < 3 || !K.leq(lo, hi))
        continue;
      auto chains = chains_between(K, lo, hi);
      if (chains.size() < 2)
        continue;
      std::unordered_map<std::vector<FaceId>, std::size_t, FlagHash> index;
      for (std::size_t i = 0; i < chains.size(); ++i)
        index.emplace(chains[i], i);
      DisjointSets sets(chains.size());
      std::size_t components = chains.size();
      for (std::size_t c = 0; c < chains.size(); ++c) {
        auto const &chain = chains[c];
        for (std::size_t p = 1; p + 1 < chain.size(); ++p)
          for (FaceId h : between(K, chain[p - 1], chain[p + 1])) {
            if (h == chain[p])
              continue;
            auto other = chain;
            other[p] = h;
            auto it = index.find(other);
            if (it != index.end() && sets.unite(c, it->second))
              --components;
          }
      }
      if (components > 1) {
        std::size_t second = 1;
        while (sets.find(second) == sets.find(0))
          ++second;
        out.push_back({"I3",
                       "section between faces " + std::to_string(lo) + " and " +
                           std::to_string(hi) + " has " + std::to_string(components) +
                           " flag components",
                       {lo, hi},
                       {chains[0], chains[second]}});
      }
    }
}

inline std::vector<int> check_i4(IncidenceComplex const &K, std::vector<Violation> &out)
{
  std::vector<int> c;
  for (int i = 0; i < K.rank(); ++i) {
    std::map<std::pair<FaceId, FaceId>, int> counts;
    for (FaceId f : K.faces_of_rank(i - 1))
      for (FaceId g : K.faces_of_rank(i + 1))
        if (K.leq(f, g))
          counts[{f, g}] = 0;
    for (FaceId h : K.faces_of_rank(i))
      for (FaceId f : K.faces_of_rank(i - 1))
        if (K.leq(f, h))
          for (FaceId g : K.up(h))
            if (K.rank_of(g) == i + 1)
              ++counts[{f, g}];
    if (counts.empty()) {
      out.push_back({"I4", "no incident pair of ranks " + std::to_string(i - 1) +
                               " and " + std::to_string(i + 1),
                     {}, {}});
      c.push_back(0);
      continue;
    }
    int const expected = counts.begin()->second;
    c.push_back(expected);
    for (auto const &[pair, count] : counts)
      if (count != expected || count < 2) {
        out.push_back({"I4",
                       "rank " + std::to_string(i) + ": " + std::to_string(count) +
                           " faces between " + std::to_string(pair.first) + " and " +
                           std::to_string(pair.second) +
                           (count < 2 ? " (need >= 2)" : ", expected " + std::to_string(expected)),
                       {pair.first, pair.second},
                       {}});
        break;
      }
  }
  return c;
}

}  // namespace detail

/// Checks (I1)-(I4) and returns the c-vector when all hold.
inline ValidationReport validate_complex(IncidenceComplex const &K)
{
  ValidationReport report;
  detail::check_i1(K, report.violations);
  detail::check_i2(K, report.violations);
  detail::check_i3(K, report.violations);
  auto c = detail::check_i4(K, report.violations);
  report.is_complex = report.violations.empty();
  if (report.is_complex)
    report.c = std::move(c);
  return report;
}

/// The section G/F = {H | F <= H <= G}, ranks shifted so F has rank -1.
inline IncidenceComplex section(IncidenceComplex const &K, FaceId lower, FaceId upper)
{
  if (lower >= K.size() || upper >= K.size())
    throw precondition_error("section: face id out of range");
  if (!K.leq(lower, upper))
    throw precondition_error("section: face " + std::to_string(lower) +
                             " is not below face " + std::to_string(upper));
  auto faces = K.interval(lower, upper);
  std::vector<FaceId> local(K.size(), 0);
  std::vector<int> ranks;
  int const shift = K.rank_of(lower) + 1;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    local[faces[i]] = static_cast<FaceId>(i);
    ranks.push_back(K.rank_of(faces[i]) - shift);
  }
  std::vector<std::pair<FaceId, FaceId>> rel;
  for (FaceId f : faces)
    for (FaceId g : K.up(f))
      if (K.leq(g, upper))
        rel.emplace_back(local[f], local[g]);
  return IncidenceComplex(K.rank_of(upper) - shift, std::move(ranks), rel);
}

/// Vertex sets indexed by face id, when the face -> vertex-set map is injective.
inline std::optional<std::vector<std::vector<FaceId>>>
is_vertex_describable(IncidenceComplex const &K)
{
  std::vector<std::vector<FaceId>> sets(K.size());
  std::map<std::vector<FaceId>, FaceId> seen;
  for (FaceId f = 0; f < K.size(); ++f) {
    sets[f] = K.vertex_set(f);
    if (!seen.emplace(sets[f], f).second)
      return std::nullopt;
  }
  return sets;
}

}  // namespace powercx
