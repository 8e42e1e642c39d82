#pragma once

// Small hand-built complexes shared by the tests.

#include <algorithm>
#include <set>
#include <vector>

#include "powercx.hpp"

namespace fixture {

using powercx::ComplexBuilder;
using powercx::ComplexMap;
using powercx::FaceId;
using powercx::IncidenceComplex;

/// Poset of the listed vertex sets (ranks given alongside) ordered by
/// inclusion, with singletons for vertices 0..v-1, an empty least face and a
/// greatest face of rank k added.
inline IncidenceComplex from_vertex_sets(int k, int v,
                                         std::vector<std::pair<int, std::set<int>>> faces)
{
  for (int i = 0; i < v; ++i)
    faces.push_back({0, {i}});
  faces.push_back({-1, {}});
  std::set<int> all;
  for (int i = 0; i < v; ++i)
    all.insert(i);
  faces.push_back({k, all});
  ComplexBuilder b(k);
  std::vector<FaceId> id;
  for (auto const &f : faces)
    id.push_back(b.add_face(f.first));
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t c = 0; c < faces.size(); ++c)
      if (faces[a].first < faces[c].first &&
          std::includes(faces[c].second.begin(), faces[c].second.end(),
                        faces[a].second.begin(), faces[a].second.end()))
        b.relate(id[a], id[c]);
  return std::move(b).build();
}

/// Triangle with the edge {2,0} removed: vertex 0 and vertex 2 lie in one edge.
inline IncidenceComplex broken_triangle()
{
  return from_vertex_sets(2, 3, {{1, {0, 1}}, {1, {1, 2}}});
}

/// Triangular prism, a polytope that is not regular.
inline IncidenceComplex prism()
{
  return from_vertex_sets(3, 6,
                          {{1, {0, 1}}, {1, {1, 2}}, {1, {0, 2}}, {1, {3, 4}}, {1, {4, 5}},
                           {1, {3, 5}}, {1, {0, 3}}, {1, {1, 4}}, {1, {2, 5}},
                           {2, {0, 1, 2}}, {2, {3, 4, 5}}, {2, {0, 1, 3, 4}},
                           {2, {1, 2, 4, 5}}, {2, {0, 2, 3, 5}}});
}

/// A covering of the square onto a rank-2 complex with three vertices and two
/// edges, each edge containing all three vertices. Vertex fibers have sizes
/// 2, 1, 1.
inline ComplexMap uneven_covering()
{
  auto const K = powercx::polygon(4);  // bottom 0, vertices 1..4, edges 5..8, top 9
  ComplexBuilder b(2);
  FaceId bottom = b.add_face(-1);
  std::vector<FaceId> v{b.add_face(0), b.add_face(0), b.add_face(0)};
  FaceId e1 = b.add_face(1), e2 = b.add_face(1);
  FaceId top = b.add_face(2);
  for (FaceId x : v) {
    b.relate(bottom, x);
    b.relate(x, e1);
    b.relate(x, e2);
  }
  b.relate(e1, top);
  b.relate(e2, top);
  auto L = std::move(b).build();
  // square vertices u1..u4 -> 1, 2, 1, 3; edges u1u2, u3u4 -> e1 and u2u3, u4u1 -> e2
  std::vector<FaceId> m{bottom, v[0], v[1], v[0], v[2], e1, e2, e1, e2, top};
  return {K, L, m};
}

/// The central involution of polygon(2p) as a face permutation.
inline powercx::Perm half_turn(int q)
{
  std::vector<powercx::Perm::point> img(static_cast<std::size_t>(2 * q + 2));
  img[0] = 0;
  auto const h = static_cast<powercx::Perm::point>(q / 2);
  auto const qq = static_cast<powercx::Perm::point>(q);
  for (powercx::Perm::point i = 0; i < qq; ++i) {
    img[1 + i] = 1 + (i + h) % qq;
    img[1 + qq + i] = 1 + qq + (i + h) % qq;
  }
  img[2 * qq + 1] = 2 * qq + 1;
  return powercx::Perm(img);
}

}  // namespace fixture
