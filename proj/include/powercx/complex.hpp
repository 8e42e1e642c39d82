#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "powercx/errors.hpp"

namespace powercx {

/// Dense face identifier, valid within one complex.
using FaceId = std::uint32_t;

/// Ranked poset of faces with ranks -1..k, stored as its Hasse diagram plus a
/// reachability closure. Construction checks only structural well-formedness
/// (ids, rank range, rank increase along relations); the incidence-complex
/// axioms are checked separately by validate_complex, so quotients and broken
/// inputs can still be represented and reported on.
///
/// Immutable after construction; all queries are const.
class IncidenceComplex {
 public:
  /// Above this many faces the leq closure is not materialized and incidence
  /// queries fall back to a rank-bounded upward search.
  static constexpr std::size_t closure_limit = 16384;

  IncidenceComplex() : IncidenceComplex(0, {-1, 0}, {{0, 1}}) {}

  /// `relations` lists pairs (low, high) with low < high; they need not be
  /// covers, the Hasse diagram is derived.
  IncidenceComplex(int rank, std::vector<int> face_ranks,
                   std::vector<std::pair<FaceId, FaceId>> const &relations)
      : rank_(rank), face_rank_(std::move(face_ranks))
  {
    if (rank_ < -1)
      throw malformed_poset("rank must be >= -1, got " + std::to_string(rank_));

    auto const n = face_rank_.size();
    by_rank_.assign(static_cast<std::size_t>(rank_) + 2, {});
    for (FaceId f = 0; f < n; ++f) {
      int r = face_rank_[f];
      if (r < -1 || r > rank_)
        throw malformed_poset("face " + std::to_string(f) + " has rank " +
                              std::to_string(r) + " outside -1.." +
                              std::to_string(rank_));
      by_rank_[static_cast<std::size_t>(r + 1)].push_back(f);
    }

    std::vector<std::vector<FaceId>> succ(n);
    for (auto [lo, hi] : relations) {
      if (lo >= n || hi >= n)
        throw malformed_poset("relation (" + std::to_string(lo) + ", " +
                              std::to_string(hi) + ") refers to a missing face");
      if (face_rank_[lo] >= face_rank_[hi])
        throw malformed_poset("relation (" + std::to_string(lo) + ", " +
                              std::to_string(hi) +
                              ") does not increase rank");
      succ[lo].push_back(hi);
    }
    for (auto &s : succ) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    if (n <= closure_limit) {
      above_.assign(n, boost::dynamic_bitset<>(n));
      for (auto r = by_rank_.size(); r-- > 0;)
        for (FaceId f : by_rank_[r]) {
          above_[f].set(f);
          for (FaceId s : succ[f])
            above_[f] |= above_[s];
        }
    }

    up_.assign(n, {});
    down_.assign(n, {});
    for (FaceId lo = 0; lo < n; ++lo)
      for (FaceId hi : succ[lo]) {
        bool is_cover = face_rank_[hi] == face_rank_[lo] + 1;
        if (!is_cover) {
          is_cover = true;
          for (FaceId s : succ[lo])
            if (s != hi && reaches(succ, s, hi)) {
              is_cover = false;
              break;
            }
        }
        if (is_cover) {
          up_[lo].push_back(hi);
          down_[hi].push_back(lo);
        }
      }
    for (auto &d : down_)
      std::sort(d.begin(), d.end());
  }

  int rank() const { return rank_; }
  std::size_t size() const { return face_rank_.size(); }

  int rank_of(FaceId f) const { return face_rank_.at(f); }
  std::vector<int> const &face_ranks() const { return face_rank_; }

  /// Faces of rank r, for r in -1..rank(); ascending ids.
  std::span<const FaceId> faces_of_rank(int r) const
  {
    if (r < -1 || r > rank_)
      return {};
    return by_rank_[static_cast<std::size_t>(r + 1)];
  }

  std::span<const FaceId> vertices() const { return faces_of_rank(0); }

  /// Upper covers (Hasse successors), ascending.
  std::span<const FaceId> up(FaceId f) const { return up_.at(f); }
  /// Lower covers (Hasse predecessors), ascending.
  std::span<const FaceId> down(FaceId f) const { return down_.at(f); }

  bool leq(FaceId a, FaceId b) const
  {
    if (a == b)
      return true;
    if (face_rank_[a] >= face_rank_[b])
      return false;
    if (!above_.empty())
      return above_[a].test(b);
    return reaches(up_, a, b);
  }

  bool less(FaceId a, FaceId b) const { return a != b && leq(a, b); }

  bool incident(FaceId a, FaceId b) const { return leq(a, b) || leq(b, a); }

  /// Unique face of rank -1; throws if there is not exactly one.
  FaceId bottom() const { return unique_of_rank(-1); }
  /// Unique face of rank k; throws if there is not exactly one.
  FaceId top() const { return unique_of_rank(rank_); }

  /// Face counts indexed by rank + 1.
  std::vector<std::size_t> f_vector() const
  {
    std::vector<std::size_t> fv;
    for (auto const &r : by_rank_)
      fv.push_back(r.size());
    return fv;
  }

  /// Hasse diagram as (low, high) pairs ordered by low rank, low id, high id.
  std::vector<std::pair<FaceId, FaceId>> covers() const
  {
    std::vector<std::pair<FaceId, FaceId>> out;
    for (auto const &layer : by_rank_)
      for (FaceId f : layer)
        for (FaceId g : up_[f])
          out.emplace_back(f, g);
    return out;
  }

  /// Vertices (rank-0 faces) below f, ascending.
  std::vector<FaceId> vertex_set(FaceId f) const
  {
    std::vector<FaceId> out;
    for (FaceId v : vertices())
      if (leq(v, f))
        out.push_back(v);
    return out;
  }

  /// Faces h with a <= h <= b, ascending.
  std::vector<FaceId> interval(FaceId a, FaceId b) const
  {
    std::vector<FaceId> out;
    for (FaceId h = 0; h < size(); ++h)
      if (leq(a, h) && leq(h, b))
        out.push_back(h);
    return out;
  }

  friend bool operator==(IncidenceComplex const &x, IncidenceComplex const &y)
  {
    return x.rank_ == y.rank_ && x.face_rank_ == y.face_rank_ && x.up_ == y.up_;
  }

 private:
  FaceId unique_of_rank(int r) const
  {
    auto faces = faces_of_rank(r);
    if (faces.size() != 1)
      throw precondition_error("expected exactly one face of rank " +
                               std::to_string(r) + ", found " +
                               std::to_string(faces.size()));
    return faces.front();
  }

  bool reaches(std::vector<std::vector<FaceId>> const &succ, FaceId from,
               FaceId to) const
  {
    if (from == to)
      return true;
    int const target_rank = face_rank_[to];
    std::vector<FaceId> stack{from};
    std::vector<bool> seen(size(), false);
    seen[from] = true;
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      for (FaceId s : succ[f]) {
        if (s == to)
          return true;
        if (!seen[s] && face_rank_[s] < target_rank) {
          seen[s] = true;
          stack.push_back(s);
        }
      }
    }
    return false;
  }

  int rank_;
  std::vector<int> face_rank_;
  std::vector<std::vector<FaceId>> by_rank_;
  std::vector<std::vector<FaceId>> up_;
  std::vector<std::vector<FaceId>> down_;
  std::vector<boost::dynamic_bitset<>> above_;
};

/// Builder used by generators: faces are added with a rank, relations as pairs.
class ComplexBuilder {
 public:
  explicit ComplexBuilder(int rank) : rank_(rank) {}

  FaceId add_face(int rank)
  {
    ranks_.push_back(rank);
    return static_cast<FaceId>(ranks_.size() - 1);
  }

  void relate(FaceId low, FaceId high) { relations_.emplace_back(low, high); }

  std::size_t size() const { return ranks_.size(); }

  IncidenceComplex build() &&
  {
    return IncidenceComplex(rank_, std::move(ranks_), relations_);
  }

 private:
  int rank_;
  std::vector<int> ranks_;
  std::vector<std::pair<FaceId, FaceId>> relations_;
};

}  // namespace powercx
