#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "powercx/complex.hpp"
#include "powercx/errors.hpp"
#include "powercx/validate.hpp"

namespace powercx {

/// Literal construction of n^K for certification: every F(eps) is built as an
/// explicit subset of N^v by filtering all n^v tuples, duplicates are merged,
/// the empty set is adjoined, and the order is plain inclusion. Ranks come
/// from chain lengths in the inclusion order, not from K.
inline IncidenceComplex brute_force_power_oracle(IncidenceComplex const &K, int n,
                                                 std::size_t tuple_cap = 4096)
{
  if (n < 2)
    throw precondition_error("n must be >= 2");
  auto const verts = K.vertices();
  std::size_t const v = verts.size();
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < v; ++i) {
    tuples *= static_cast<std::size_t>(n);
    if (tuples > tuple_cap)
      throw size_limit_error("n^v exceeds the oracle cap of " + std::to_string(tuple_cap));
  }

  auto digits = [&](std::size_t t) {
    std::vector<int> d(v);
    for (auto i = v; i-- > 0;) {
      d[i] = static_cast<int>(t % static_cast<std::size_t>(n)) + 1;
      t /= static_cast<std::size_t>(n);
    }
    return d;
  };

  std::set<std::vector<std::size_t>> subsets;
  for (FaceId f = 0; f < K.size(); ++f) {
    std::vector<bool> in_f(v, false);
    for (std::size_t i = 0; i < v; ++i)
      in_f[i] = K.leq(verts[i], f);
    for (std::size_t e = 0; e < tuples; ++e) {
      auto eps = digits(e);
      std::vector<std::size_t> members;
      for (std::size_t t = 0; t < tuples; ++t) {
        auto eta = digits(t);
        bool keep = true;
        for (std::size_t i = 0; i < v && keep; ++i)
          if (!in_f[i] && eta[i] != eps[i])
            keep = false;
        if (keep)
          members.push_back(t);
      }
      subsets.insert(std::move(members));
    }
  }
  subsets.insert(std::vector<std::size_t>{});

  std::vector<boost::dynamic_bitset<>> sets;
  for (auto const &s : subsets) {
    boost::dynamic_bitset<> b(tuples);
    for (auto t : s)
      b.set(t);
    sets.push_back(std::move(b));
  }
  // process by cardinality so every proper subset comes first
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sets[a].count() < sets[b].count(); });

  auto const m = sets.size();
  std::vector<std::vector<bool>> strict(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      strict[a][b] = a != b && sets[a].is_subset_of(sets[b]);

  std::vector<int> height(m, -1);
  for (auto b : order)
    for (std::size_t a = 0; a < m; ++a)
      if (strict[a][b])
        height[b] = std::max(height[b], height[a] + 1);

  std::vector<std::pair<FaceId, FaceId>> rel;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (strict[a][b]) {
        bool cover = true;
        for (std::size_t c = 0; c < m && cover; ++c)
          if (strict[a][c] && strict[c][b])
            cover = false;
        if (cover)
          rel.emplace_back(static_cast<FaceId>(a), static_cast<FaceId>(b));
      }
  int const rank = *std::max_element(height.begin(), height.end());
  return IncidenceComplex(rank, std::move(height), rel);
}

}  // namespace powercx
