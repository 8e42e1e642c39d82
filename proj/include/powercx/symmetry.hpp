#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "powercx/complex.hpp"
#include "powercx/errors.hpp"
#include "powercx/isomorphism.hpp"
#include "powercx/perm.hpp"
#include "powercx/power.hpp"
#include "powercx/validate.hpp"

namespace powercx {

/// True when p (a permutation of face ids) preserves rank and incidence in
/// both directions.
inline bool is_automorphism(IncidenceComplex const &K, Perm const &p)
{
  if (p.degree() != K.size())
    return false;
  return is_isomorphism(K, K, p.images());
}

/// Generators and exact order of the full automorphism group, acting on face
/// ids. Built as a stabilizer chain: for each base face b in turn the orbit
/// of b under the pointwise stabilizer of the earlier base faces is found by
/// searching, for every candidate image, an automorphism that fixes the
/// earlier faces and maps b there.
inline PermGroup automorphism_group(IncidenceComplex const &K,
                                    std::size_t node_cap = default_search_cap)
{
  std::vector<FaceId> base_order;
  for (int r = 0; r < K.rank(); ++r)
    for (FaceId f : K.faces_of_rank(r))
      base_order.push_back(f);

  std::vector<Perm> gens;
  std::vector<std::pair<FaceId, FaceId>> fixed;
  for (FaceId b : base_order) {
    auto const colour = detail::IsoSearch(K, K, node_cap).colours(fixed);
    if (std::set<int>(colour.begin(), colour.end()).size() == K.size())
      break;  // pointwise stabilizer is trivial
    std::vector<Perm> level;
    std::vector<bool> in_orbit(K.size(), false);
    in_orbit[b] = true;
    std::vector<FaceId> orbit{b};
    for (FaceId x : K.faces_of_rank(K.rank_of(b))) {
      if (in_orbit[x] || colour[x] != colour[b])
        continue;
      auto pairs = fixed;
      pairs.emplace_back(b, x);
      auto found = detail::IsoSearch(K, K, node_cap).run(pairs);
      if (!found)
        continue;
      level.emplace_back(std::vector<Perm::point>(found->begin(), found->end()));
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (auto const &g : level) {
          FaceId y = g[orbit[i]];
          if (!in_orbit[y]) {
            in_orbit[y] = true;
            orbit.push_back(y);
          }
        }
    }
    gens.insert(gens.end(), level.begin(), level.end());
    fixed.emplace_back(b, b);
  }
  return PermGroup(K.size(), std::move(gens));
}

/// Number of orbits of `group` on the flags of K.
inline std::size_t flag_orbit_count(FlagGraph const &graph, PermGroup const &group)
{
  detail::DisjointSets sets(graph.size());
  std::size_t orbits = graph.size();
  for (std::size_t f = 0; f < graph.size(); ++f)
    for (auto const &g : group.generators()) {
      auto image = graph.flag(f).faces;
      for (auto &x : image)
        x = g[x];
      auto idx = graph.index_of(image);
      if (!idx)
        throw precondition_error("group element does not map flags to flags");
      if (sets.unite(f, *idx))
        --orbits;
    }
  return orbits;
}

inline std::size_t flag_orbit_count(IncidenceComplex const &K)
{
  return flag_orbit_count(FlagGraph(K), automorphism_group(K));
}

/// True iff the automorphism group is transitive on flags.
inline bool is_regular(IncidenceComplex const &K) { return flag_orbit_count(K) == 1; }

/// The subgroup S_n wr Gamma(K) of Gamma(n^K), acting on the face ids of P:
/// per-coordinate generators of S_n, plus each automorphism of K lifted so
/// that a vertex's coordinate travels with the vertex.
inline PermGroup wreath_subgroup(PowerComplex const &P)
{
  auto const &K = P.base();
  auto const &C = P.complex();
  std::size_t const v = P.dimension();
  int const n = P.n();

  std::vector<Perm> gens;
  auto act = [&](auto &&transform) {
    std::vector<Perm::point> img(C.size());
    for (FaceId f = 0; f < C.size(); ++f)
      img[f] = P.id_of(transform(P.face(f)));
    gens.emplace_back(std::move(img));
  };

  std::vector<std::vector<int>> symmetric_gens;  // as maps on 1..n
  {
    std::vector<int> swap(static_cast<std::size_t>(n) + 1), cycle(static_cast<std::size_t>(n) + 1);
    for (int x = 1; x <= n; ++x) {
      swap[static_cast<std::size_t>(x)] = x;
      cycle[static_cast<std::size_t>(x)] = x % n + 1;
    }
    std::swap(swap[1], swap[2]);
    symmetric_gens.push_back(swap);
    if (n > 2)
      symmetric_gens.push_back(cycle);
  }
  for (std::size_t i = 0; i < v; ++i)
    for (auto const &s : symmetric_gens)
      act([&](PowerFace pf) {
        if (!pf.is_bottom() && pf.fixed[i] != 0)
          pf.fixed[i] = s[static_cast<std::size_t>(pf.fixed[i])];
        return pf;
      });

  std::vector<std::size_t> coordinate(K.size(), 0);
  for (std::size_t i = 0; i < v; ++i)
    coordinate[P.base_vertices()[i]] = i;
  auto const base_group = automorphism_group(K);
  for (auto const &phi : base_group.generators())
    act([&](PowerFace const &pf) {
      if (pf.is_bottom())
        return pf;
      PowerFace out{phi[*pf.base], std::vector<int>(v, 0)};
      for (std::size_t i = 0; i < v; ++i)
        out.fixed[coordinate[phi[P.base_vertices()[i]]]] = pf.fixed[i];
      return out;
    });
  return PermGroup(C.size(), std::move(gens));
}

inline PermGroup wreath_subgroup(IncidenceComplex const &K, int n)
{
  return wreath_subgroup(power_complex(K, n));
}

/// Base flag, the group, and R_{-1}..R_k as pointwise stabilizers of the base
/// flag minus one face. Index i + 1 holds R_i.
struct DistinguishedSystem {
  Flag base_flag;
  PermGroup group;
  PermGroup flag_stabilizer;
  std::vector<PermGroup> subgroups;

  int rank() const { return static_cast<int>(subgroups.size()) - 2; }
  PermGroup const &r(int i) const { return subgroups.at(static_cast<std::size_t>(i + 1)); }

  /// Index |R_i : Gamma_Phi| for i = 0..k-1.
  std::vector<int> indices() const
  {
    std::vector<int> out;
    for (int i = 0; i < rank(); ++i)
      out.push_back(static_cast<int>(r(i).order() / flag_stabilizer.order()));
    return out;
  }
};

inline DistinguishedSystem distinguished_system(IncidenceComplex const &K, Flag const &base)
{
  auto group = automorphism_group(K);
  FlagGraph graph(K);
  if (!graph.index_of(base.faces))
    throw precondition_error("base flag is not a flag of the complex");
  if (flag_orbit_count(graph, group) != 1)
    throw precondition_error("complex is not regular");
  DistinguishedSystem D{base, group, group.pointwise_stabilizer(base.faces), {}};
  for (int i = -1; i <= K.rank(); ++i) {
    std::vector<Perm::point> keep;
    for (int j = -1; j <= K.rank(); ++j)
      if (j != i)
        keep.push_back(base.at(j));
    D.subgroups.push_back(group.pointwise_stabilizer(keep));
  }
  return D;
}

inline DistinguishedSystem distinguished_system(IncidenceComplex const &K)
{
  return distinguished_system(K, flags(K).front());
}

/// Outcome of checking commutation, generation and the intersection
/// property by element enumeration.
struct GroupPropertyReport {
  bool commutation = true;
  bool generation = true;
  bool intersection = true;
  bool index_matches = true;  // |R_i : Gamma_Phi| agrees with R_{-1} = R_k = Gamma_Phi
  std::vector<std::pair<int, int>> noncommuting;       // (i, j)
  std::vector<std::pair<unsigned, unsigned>> bad_intersections;  // subset masks (bit i+1)
  bool ok() const { return commutation && generation && intersection && index_matches; }
};

namespace detail {

/// Elements of Gamma_I = <R_i | i in I>, with Gamma_{} = R_{-1}; bit i+1 of
/// `mask` selects R_i.
inline std::set<Perm> subgroup_elements(DistinguishedSystem const &D, unsigned mask)
{
  std::vector<Perm> gens;
  if (mask == 0)
    gens = D.r(-1).generators();
  for (int i = -1; i <= D.rank(); ++i)
    if (mask & (1u << (i + 1)))
      for (auto const &g : D.r(i).generators())
        gens.push_back(g);
  return generated_elements(D.group.degree(), gens);
}

}  // namespace detail

inline GroupPropertyReport check_group_properties(DistinguishedSystem const &D)
{
  GroupPropertyReport report;
  int const k = D.rank();
  unsigned const all = (1u << (k + 2)) - 1;

  std::vector<std::set<Perm>> sub(all + 1);
  for (unsigned m = 0; m <= all; ++m)
    sub[m] = detail::subgroup_elements(D, m);

  auto const whole = D.group.elements();
  if (sub[all] != std::set<Perm>(whole.begin(), whole.end()))
    report.generation = false;

  if (D.r(-1).order() != D.flag_stabilizer.order() || D.r(k).order() != D.flag_stabilizer.order())
    report.index_matches = false;

  for (int i = -1; i <= k; ++i)
    for (int j = i + 2; j <= k; ++j) {
      auto const &ri = sub[1u << (i + 1)];
      auto const &rj = sub[1u << (j + 1)];
      std::set<Perm> ij, ji;
      for (auto const &a : ri)
        for (auto const &b : rj) {
          ij.insert(a * b);
          ji.insert(b * a);
        }
      if (ij != ji) {
        report.commutation = false;
        report.noncommuting.emplace_back(i, j);
      }
    }

  for (unsigned a = 0; a <= all; ++a)
    for (unsigned b = a; b <= all; ++b) {
      std::set<Perm> meet;
      std::set_intersection(sub[a].begin(), sub[a].end(), sub[b].begin(), sub[b].end(),
                            std::inserter(meet, meet.end()));
      if (meet != sub[a & b]) {
        report.intersection = false;
        report.bad_intersections.emplace_back(a, b);
      }
    }
  return report;
}

/// Coset geometry: the i-faces are the right cosets of
/// Gamma_{{-1..k} \ {i}}, and two faces of ranks i <= j are incident when the
/// cosets intersect.
inline IncidenceComplex reconstruct_from_group(PermGroup const &group,
                                               DistinguishedSystem const &D)
{
  auto const report = check_group_properties(D);
  if (!report.ok())
    throw precondition_error("distinguished system fails the group properties");
  int const k = D.rank();
  unsigned const all = (1u << (k + 2)) - 1;
  auto const elems = group.elements();

  // coset[i + 1][e] = face id of the coset containing elems[e]
  std::vector<std::vector<FaceId>> coset(static_cast<std::size_t>(k + 2),
                                         std::vector<FaceId>(elems.size()));
  std::vector<int> ranks;
  for (int i = -1; i <= k; ++i) {
    auto const sub = detail::subgroup_elements(D, all & ~(1u << (i + 1)));
    std::map<Perm, FaceId> rep_to_face;
    for (std::size_t e = 0; e < elems.size(); ++e) {
      Perm rep = *sub.begin() * elems[e];
      for (auto const &h : sub)
        rep = std::min(rep, h * elems[e]);
      auto [it, inserted] = rep_to_face.emplace(rep, static_cast<FaceId>(ranks.size()));
      if (inserted)
        ranks.push_back(i);
      coset[static_cast<std::size_t>(i + 1)][e] = it->second;
    }
  }

  std::set<std::pair<FaceId, FaceId>> rel;
  for (std::size_t e = 0; e < elems.size(); ++e)
    for (int i = -1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        rel.emplace(coset[static_cast<std::size_t>(i + 1)][e],
                    coset[static_cast<std::size_t>(j + 1)][e]);
  return IncidenceComplex(k, std::move(ranks), {rel.begin(), rel.end()});
}

}  // namespace powercx
