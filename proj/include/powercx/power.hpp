#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powercx/complex.hpp"
#include "powercx/errors.hpp"
#include "powercx/validate.hpp"

namespace powercx {

inline constexpr std::size_t default_face_cap = 1'000'000;

/// Compact form of the face F(eps) of n^K: the base face F of K (absent for
/// the least face of n^K) and the coordinates of eps outside V(F).
/// `fixed[i]` is 0 when base vertex i lies in V(F), else a value in 1..n.
struct PowerFace {
  std::optional<FaceId> base;
  std::vector<int> fixed;

  bool is_bottom() const { return !base.has_value(); }
  auto operator<=>(PowerFace const &) const = default;
};

/// The power complex n^K with its faces in canonical PowerFace form.
///
/// Face ids are assigned by rank: the least face is 0, then the blocks of
/// faces F(eps) for each face F of K in (rank, id) order; inside a block the
/// fixed coordinates run lexicographically, lowest vertex index most
/// significant.
class PowerComplex {
 public:
  PowerComplex(IncidenceComplex base, int n, std::size_t face_cap = default_face_cap)
      : base_(std::move(base)), n_(n)
  {
    if (n_ < 2)
      throw precondition_error("power complex needs n >= 2, got " + std::to_string(n_));
    // n^v vertices alone already bound the size; checked before the costly validation
    std::uint64_t lower = 1;
    for (std::size_t i = 0; i < base_.vertices().size(); ++i)
      if (__builtin_mul_overflow(lower, static_cast<std::uint64_t>(n_), &lower) || lower > face_cap)
        throw size_limit_error("power complex exceeds the face cap of " + std::to_string(face_cap));
    auto report = validate_complex(base_);
    if (!report.is_complex)
      throw precondition_error("base complex fails " + report.violations.front().axiom +
                               ": " + report.violations.front().detail);
    auto sets = is_vertex_describable(base_);
    if (!sets)
      throw precondition_error("base complex is not vertex-describable");

    auto const verts = base_.vertices();
    vertices_.assign(verts.begin(), verts.end());
    std::vector<int> coord(base_.size(), -1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      coord[vertices_[i]] = static_cast<int>(i);
    auto const v = vertices_.size();

    in_face_.assign(base_.size(), std::vector<bool>(v, false));
    for (FaceId f = 0; f < base_.size(); ++f)
      for (FaceId u : (*sets)[f])
        in_face_[f][static_cast<std::size_t>(coord[u])] = true;

    // block offsets with an overflow-checked running total
    offset_.assign(base_.size(), 0);
    block_.assign(base_.size(), 0);
    std::uint64_t total = 1;
    for (int r = -1; r <= base_.rank(); ++r)
      for (FaceId f : base_.faces_of_rank(r)) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < v; ++i)
          if (!in_face_[f][i] &&
              (__builtin_mul_overflow(count, static_cast<std::uint64_t>(n_), &count) ||
               count > face_cap))
            throw size_limit_error("power complex exceeds the face cap of " +
                                   std::to_string(face_cap));
        offset_[f] = total;
        block_[f] = count;
        total += count;
        if (total > face_cap)
          throw size_limit_error("power complex exceeds the face cap of " +
                                 std::to_string(face_cap));
      }

    faces_.reserve(total);
    std::vector<int> ranks;
    ranks.reserve(total);
    faces_.push_back(PowerFace{std::nullopt, std::vector<int>(v, 0)});
    ranks.push_back(-1);
    for (int r = -1; r <= base_.rank(); ++r)
      for (FaceId f : base_.faces_of_rank(r))
        for (std::uint64_t k = 0; k < block_[f]; ++k) {
          faces_.push_back(decode(f, k));
          ranks.push_back(r + 1);
        }

    std::vector<std::pair<FaceId, FaceId>> rel;
    for (FaceId u : base_.faces_of_rank(-1))
      for (std::uint64_t k = 0; k < block_[u]; ++k)
        rel.emplace_back(0, static_cast<FaceId>(offset_[u] + k));
    for (auto [lo, hi] : base_.covers())
      for (std::uint64_t k = 0; k < block_[lo]; ++k) {
        auto const id = static_cast<FaceId>(offset_[lo] + k);
        rel.emplace_back(id, face_of(hi, faces_[id].fixed));
      }
    complex_ = IncidenceComplex(base_.rank() + 1, std::move(ranks), rel);
  }

  IncidenceComplex const &complex() const { return complex_; }
  IncidenceComplex const &base() const { return base_; }
  int n() const { return n_; }

  /// Number of base vertices v; vertex i of K is base_vertices()[i].
  std::size_t dimension() const { return vertices_.size(); }
  std::vector<FaceId> const &base_vertices() const { return vertices_; }

  bool in_face(FaceId base_face, std::size_t coordinate) const
  {
    return in_face_.at(base_face).at(coordinate);
  }

  PowerFace const &face(FaceId id) const { return faces_.at(id); }

  /// The face F(eps) for a base face F and a vector eps whose entries outside
  /// V(F) are in 1..n (entries inside V(F) are ignored).
  FaceId face_of(FaceId base_face, std::span<const int> eps) const
  {
    if (base_face >= base_.size())
      throw precondition_error("base face out of range");
    if (eps.size() != vertices_.size())
      throw precondition_error("coordinate vector has wrong length");
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
      if (in_face_[base_face][i])
        continue;
      if (eps[i] < 1 || eps[i] > n_)
        throw precondition_error("coordinate " + std::to_string(i) + " out of range 1.." +
                                 std::to_string(n_));
      k = k * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(eps[i] - 1);
    }
    return static_cast<FaceId>(offset_[base_face] + k);
  }

  /// Id of a canonical PowerFace; throws if it is not one.
  FaceId id_of(PowerFace const &pf) const
  {
    if (pf.is_bottom())
      return 0;
    FaceId const f = *pf.base;
    if (f >= base_.size() || pf.fixed.size() != vertices_.size())
      throw precondition_error("not a face of this power complex");
    for (std::size_t i = 0; i < pf.fixed.size(); ++i)
      if (in_face_[f][i] != (pf.fixed[i] == 0))
        throw precondition_error("fixed coordinates do not match V(F)");
    return face_of(f, pf.fixed);
  }

  /// The vertex eps (entries in 1..n).
  FaceId vertex(std::span<const int> eps) const
  {
    return face_of(base_.bottom(), eps);
  }

 private:
  PowerFace decode(FaceId f, std::uint64_t k) const
  {
    PowerFace pf{f, std::vector<int>(vertices_.size(), 0)};
    for (auto i = vertices_.size(); i-- > 0;) {
      if (in_face_[f][i])
        continue;
      pf.fixed[i] = static_cast<int>(k % static_cast<std::uint64_t>(n_)) + 1;
      k /= static_cast<std::uint64_t>(n_);
    }
    return pf;
  }

  IncidenceComplex base_;
  int n_;
  std::vector<FaceId> vertices_;
  std::vector<std::vector<bool>> in_face_;
  std::vector<std::uint64_t> offset_;
  std::vector<std::uint64_t> block_;
  std::vector<PowerFace> faces_;
  IncidenceComplex complex_;
};

/// n^K. Throws precondition_error unless K is a valid vertex-describable
/// complex, size_limit_error above `face_cap` faces.
inline PowerComplex power_complex(IncidenceComplex const &K, int n,
                                  std::size_t face_cap = default_face_cap)
{
  return PowerComplex(K, n, face_cap);
}

/// skel_j(K): the faces of rank <= j with K's greatest face adjoined at rank j+1.
inline IncidenceComplex skeleton(IncidenceComplex const &K, int j)
{
  if (j < 0 || j > K.rank() - 1)
    throw precondition_error("skeleton rank " + std::to_string(j) + " outside 0.." +
                             std::to_string(K.rank() - 1));
  FaceId const top = K.top();
  std::vector<FaceId> local(K.size(), 0);
  std::vector<int> ranks;
  std::vector<FaceId> kept;
  for (int r = -1; r <= j; ++r)
    for (FaceId f : K.faces_of_rank(r)) {
      local[f] = static_cast<FaceId>(kept.size());
      kept.push_back(f);
      ranks.push_back(r);
    }
  auto const new_top = static_cast<FaceId>(kept.size());
  ranks.push_back(j + 1);
  std::vector<std::pair<FaceId, FaceId>> rel;
  for (FaceId f : kept) {
    for (FaceId g : K.up(f))
      if (K.rank_of(g) <= j)
        rel.emplace_back(local[f], local[g]);
    if (K.rank_of(f) == j && K.leq(f, top))
      rel.emplace_back(local[f], new_top);
  }
  return IncidenceComplex(j + 1, std::move(ranks), rel);
}

/// The vertex-figure of n^K at eps, i.e. the section from the vertex to the top.
inline IncidenceComplex vertex_figure(PowerComplex const &P, std::span<const int> eps)
{
  if (eps.size() != P.dimension())
    throw precondition_error("vertex has " + std::to_string(eps.size()) +
                             " coordinates, expected " + std::to_string(P.dimension()));
  return section(P.complex(), P.vertex(eps), P.complex().top());
}

}  // namespace powercx
