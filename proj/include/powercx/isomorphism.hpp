#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "powercx/complex.hpp"

namespace powercx {

/// Face bijection A -> B, indexed by A's face ids.
using Isomorphism = std::vector<FaceId>;

namespace detail {

/// Joint colour refinement of two complexes followed by individualization
/// backtracking. Colours start from (rank, up-degree, down-degree) and are
/// refined by the multisets of neighbouring colours in the Hasse diagram;
/// the colour dictionary is shared so colours are comparable across A and B.
class IsoSearch {
 public:
  IsoSearch(IncidenceComplex const &a, IncidenceComplex const &b, std::size_t node_cap)
      : a_(a), b_(b), cap_(node_cap)
  {
  }

  /// Finds an isomorphism extending the given (a, b) pairs.
  std::optional<Isomorphism> run(std::span<const std::pair<FaceId, FaceId>> fixed)
  {
    if (a_.rank() != b_.rank() || a_.size() != b_.size())
      return std::nullopt;
    std::vector<int> ca(a_.size()), cb(b_.size());
    for (FaceId f = 0; f < a_.size(); ++f)
      ca[f] = 0;
    for (FaceId f = 0; f < b_.size(); ++f)
      cb[f] = 0;
    int next = 1;
    for (auto [x, y] : fixed) {
      if (x >= a_.size() || y >= b_.size())
        return std::nullopt;
      if (ca[x] != 0 || cb[y] != 0) {
        if (ca[x] != cb[y])
          return std::nullopt;
        continue;
      }
      ca[x] = cb[y] = next++;
    }
    return search(std::move(ca), std::move(cb));
  }

  std::size_t nodes() const { return nodes_; }

  /// Stable colouring of A with the given pairs individualized; meaningful
  /// for automorphism searches where A and B are the same complex.
  std::vector<int> colours(std::span<const std::pair<FaceId, FaceId>> fixed)
  {
    std::vector<int> ca(a_.size(), 0), cb(b_.size(), 0);
    int next = 1;
    for (auto [x, y] : fixed)
      if (ca[x] == 0 && cb[y] == 0)
        ca[x] = cb[y] = next++;
    refine(ca, cb);
    return ca;
  }

 private:
  std::optional<Isomorphism> search(std::vector<int> ca, std::vector<int> cb)
  {
    if (++nodes_ > cap_)
      throw size_limit_error("isomorphism search exceeded " + std::to_string(cap_) +
                             " nodes");
    if (!refine(ca, cb))
      return std::nullopt;

    // target cell: smallest non-singleton colour class, first by colour
    std::map<int, std::size_t> cell_size;
    for (int c : ca)
      ++cell_size[c];
    int target = -1;
    std::size_t best = 0;
    for (auto [c, s] : cell_size)
      if (s > 1 && (best == 0 || s < best)) {
        best = s;
        target = c;
      }

    if (target < 0) {
      Isomorphism map(a_.size());
      std::map<int, FaceId> colour_to_b;
      for (FaceId y = 0; y < b_.size(); ++y)
        colour_to_b[cb[y]] = y;
      for (FaceId x = 0; x < a_.size(); ++x)
        map[x] = colour_to_b.at(ca[x]);
      if (verify(map))
        return map;
      return std::nullopt;
    }

    FaceId pick = 0;
    while (ca[pick] != target)
      ++pick;
    int const fresh = 1 + std::max(*std::max_element(ca.begin(), ca.end()),
                                   *std::max_element(cb.begin(), cb.end()));
    for (FaceId y = 0; y < b_.size(); ++y) {
      if (cb[y] != target)
        continue;
      auto na = ca;
      auto nb = cb;
      na[pick] = fresh;
      nb[y] = fresh;
      if (auto found = search(std::move(na), std::move(nb)))
        return found;
    }
    return std::nullopt;
  }

  /// Refines to a stable partition; false when the colour histograms differ.
  bool refine(std::vector<int> &ca, std::vector<int> &cb) const
  {
    auto classes = [](std::vector<int> const &c) {
      std::vector<int> s(c);
      std::sort(s.begin(), s.end());
      return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
    };
    std::size_t count = classes(ca);
    bool first = true;
    for (;;) {
      std::map<std::vector<int>, int> dict;
      std::vector<std::vector<int>> sa(a_.size()), sb(b_.size());
      auto signature = [&](IncidenceComplex const &K, std::vector<int> const &c, FaceId f) {
        std::vector<int> sig{c[f], K.rank_of(f), static_cast<int>(K.up(f).size()),
                             static_cast<int>(K.down(f).size()), -1};
        std::vector<int> lo, hi;
        for (FaceId g : K.down(f))
          lo.push_back(c[g]);
        for (FaceId g : K.up(f))
          hi.push_back(c[g]);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        sig.insert(sig.end(), lo.begin(), lo.end());
        sig.push_back(-2);
        sig.insert(sig.end(), hi.begin(), hi.end());
        return sig;
      };
      for (FaceId f = 0; f < a_.size(); ++f)
        dict.emplace(sa[f] = signature(a_, ca, f), 0);
      for (FaceId f = 0; f < b_.size(); ++f)
        dict.emplace(sb[f] = signature(b_, cb, f), 0);
      int id = 0;
      for (auto &[sig, c] : dict)
        c = id++;
      std::vector<std::size_t> hist_a(dict.size()), hist_b(dict.size());
      for (FaceId f = 0; f < a_.size(); ++f)
        ++hist_a[static_cast<std::size_t>(ca[f] = dict[sa[f]])];
      for (FaceId f = 0; f < b_.size(); ++f)
        ++hist_b[static_cast<std::size_t>(cb[f] = dict[sb[f]])];
      if (hist_a != hist_b)
        return false;
      std::size_t now = classes(ca);
      if (!first && now == count)
        return true;
      first = false;
      count = now;
    }
  }

  bool verify(Isomorphism const &map) const
  {
    std::vector<bool> hit(b_.size(), false);
    for (FaceId x = 0; x < a_.size(); ++x) {
      if (hit[map[x]] || a_.rank_of(x) != b_.rank_of(map[x]))
        return false;
      hit[map[x]] = true;
      if (a_.up(x).size() != b_.up(map[x]).size())
        return false;
      for (FaceId y : a_.up(x)) {
        auto u = b_.up(map[x]);
        if (!std::binary_search(u.begin(), u.end(), map[y]))
          return false;
      }
    }
    return true;
  }

  IncidenceComplex const &a_;
  IncidenceComplex const &b_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

inline constexpr std::size_t default_search_cap = 1'000'000;

/// A rank- and order-preserving bijection A -> B, if one exists.
inline std::optional<Isomorphism> is_isomorphic(IncidenceComplex const &a,
                                                IncidenceComplex const &b,
                                                std::size_t node_cap = default_search_cap)
{
  if (a.rank() != b.rank() || a.f_vector() != b.f_vector())
    return std::nullopt;
  detail::IsoSearch search(a, b, node_cap);
  return search.run({});
}

/// Checks that `map` is an isomorphism A -> B (bijective, rank- and cover-preserving).
inline bool is_isomorphism(IncidenceComplex const &a, IncidenceComplex const &b,
                           Isomorphism const &map)
{
  if (a.size() != b.size() || map.size() != a.size() || a.rank() != b.rank())
    return false;
  std::vector<bool> hit(b.size(), false);
  for (FaceId x = 0; x < a.size(); ++x) {
    if (map[x] >= b.size() || hit[map[x]] || a.rank_of(x) != b.rank_of(map[x]))
      return false;
    hit[map[x]] = true;
  }
  for (FaceId x = 0; x < a.size(); ++x) {
    if (a.up(x).size() != b.up(map[x]).size())
      return false;
    for (FaceId y : a.up(x)) {
      auto u = b.up(map[x]);
      if (!std::binary_search(u.begin(), u.end(), map[y]))
        return false;
    }
  }
  return true;
}

}  // namespace powercx
