#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "powercx/complex.hpp"
#include "powercx/errors.hpp"
#include "powercx/power.hpp"

namespace powercx {

enum class CatalogFamily { simplex, polygon, rank1, cube, complex_cube, torus44, torus36 };

/// A named complex with its integer parameters.
struct CatalogKey {
  CatalogFamily family;
  std::vector<int> params;

  static CatalogKey simplex(int v) { return {CatalogFamily::simplex, {v}}; }
  static CatalogKey polygon(int q) { return {CatalogFamily::polygon, {q}}; }
  static CatalogKey rank1(int v) { return {CatalogFamily::rank1, {v}}; }
  static CatalogKey cube(int v) { return {CatalogFamily::cube, {v}}; }
  static CatalogKey complex_cube(int v, int n) { return {CatalogFamily::complex_cube, {v, n}}; }
  static CatalogKey torus44(int s) { return {CatalogFamily::torus44, {s}}; }
  static CatalogKey torus36(int b) { return {CatalogFamily::torus36, {b}}; }
};

inline std::string to_string(CatalogFamily f)
{
  switch (f) {
    case CatalogFamily::simplex: return "simplex";
    case CatalogFamily::polygon: return "polygon";
    case CatalogFamily::rank1: return "rank1";
    case CatalogFamily::cube: return "cube";
    case CatalogFamily::complex_cube: return "complex_cube";
    case CatalogFamily::torus44: return "torus44";
    case CatalogFamily::torus36: return "torus36";
  }
  return "?";
}

/// Parses a family name plus parameters, e.g. ("complex_cube", {2, 3}).
inline CatalogKey parse_catalog_key(std::string const &name, std::vector<int> params)
{
  static const std::map<std::string, std::pair<CatalogFamily, std::size_t>> families = {
      {"simplex", {CatalogFamily::simplex, 1}},   {"polygon", {CatalogFamily::polygon, 1}},
      {"rank1", {CatalogFamily::rank1, 1}},       {"cube", {CatalogFamily::cube, 1}},
      {"complex_cube", {CatalogFamily::complex_cube, 2}},
      {"torus44", {CatalogFamily::torus44, 1}},   {"torus36", {CatalogFamily::torus36, 1}},
  };
  auto it = families.find(name);
  if (it == families.end())
    throw precondition_error("unknown catalog family '" + name + "'");
  if (params.size() != it->second.second)
    throw precondition_error(name + " takes " + std::to_string(it->second.second) +
                             " parameter(s)");
  return {it->second.first, std::move(params)};
}

namespace detail {

inline void require(bool ok, std::string const &what)
{
  if (!ok)
    throw precondition_error("catalog parameter out of range: " + what);
}

/// All subsets of {0..v-1} ordered by inclusion; the (v-1)-simplex.
inline IncidenceComplex make_simplex(int v)
{
  require(v >= 1 && v <= 20, "simplex(v) needs 1 <= v <= 20");
  auto const count = std::uint32_t{1} << v;
  std::vector<std::uint32_t> masks(count);
  for (std::uint32_t m = 0; m < count; ++m)
    masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<FaceId> id(count);
  std::vector<int> ranks;
  for (std::uint32_t i = 0; i < count; ++i) {
    id[masks[i]] = i;
    ranks.push_back(std::popcount(masks[i]) - 1);
  }
  std::vector<std::pair<FaceId, FaceId>> rel;
  for (std::uint32_t m = 0; m < count; ++m)
    for (int b = 0; b < v; ++b)
      if (!(m & (1u << b)))
        rel.emplace_back(id[m], id[m | (1u << b)]);
  return IncidenceComplex(v - 1, std::move(ranks), rel);
}

inline IncidenceComplex make_polygon(int q)
{
  require(q >= 2, "polygon(q) needs q >= 2");
  ComplexBuilder b(2);
  FaceId bottom = b.add_face(-1);
  std::vector<FaceId> v, e;
  for (int i = 0; i < q; ++i)
    v.push_back(b.add_face(0));
  for (int i = 0; i < q; ++i)
    e.push_back(b.add_face(1));
  FaceId top = b.add_face(2);
  for (int i = 0; i < q; ++i) {
    b.relate(bottom, v[i]);
    b.relate(v[i], e[i]);
    b.relate(v[(i + 1) % q], e[i]);
    b.relate(e[i], top);
  }
  return std::move(b).build();
}

inline IncidenceComplex make_rank1(int v)
{
  require(v >= 2, "rank1(v) needs v >= 2");
  ComplexBuilder b(1);
  FaceId bottom = b.add_face(-1);
  std::vector<FaceId> verts;
  for (int i = 0; i < v; ++i)
    verts.push_back(b.add_face(0));
  FaceId top = b.add_face(1);
  for (FaceId x : verts) {
    b.relate(bottom, x);
    b.relate(x, top);
  }
  return std::move(b).build();
}

/// The v-cube from sign vectors in {-1,0,+1}^v (0 = free coordinate);
/// a face lies below another when it agrees on the other's fixed coordinates.
inline IncidenceComplex make_cube(int v)
{
  require(v >= 1 && v <= 12, "cube(v) needs 1 <= v <= 12");
  std::vector<std::vector<int>> signs{{}};
  for (int i = 0; i < v; ++i) {
    std::vector<std::vector<int>> next;
    for (auto const &s : signs)
      for (int x : {-1, 0, 1}) {
        auto t = s;
        t.push_back(x);
        next.push_back(std::move(t));
      }
    signs = std::move(next);
  }
  auto zeros = [](std::vector<int> const &s) {
    return static_cast<int>(std::count(s.begin(), s.end(), 0));
  };
  std::stable_sort(signs.begin(), signs.end(),
                   [&](auto const &a, auto const &b) { return zeros(a) < zeros(b); });
  std::map<std::vector<int>, FaceId> id;
  ComplexBuilder b(v);
  FaceId bottom = b.add_face(-1);
  for (auto const &s : signs)
    id.emplace(s, b.add_face(zeros(s)));
  for (auto const &s : signs) {
    if (zeros(s) == 0)
      b.relate(bottom, id.at(s));
    for (int i = 0; i < v; ++i)
      if (s[static_cast<std::size_t>(i)] != 0) {
        auto t = s;
        t[static_cast<std::size_t>(i)] = 0;
        b.relate(id.at(s), id.at(t));
      }
  }
  return std::move(b).build();
}

/// {4,4}_(s,0): vertices, horizontal edges, vertical edges and squares are
/// each indexed by (i, j) mod s. Cells are kept distinct even when their
/// vertex sets coincide (s = 2).
inline IncidenceComplex make_torus44(int s)
{
  require(s >= 2, "torus44(s) needs s >= 2");
  auto cell = [s](int i, int j) {
    return static_cast<std::size_t>(((i % s + s) % s) * s + ((j % s + s) % s));
  };
  auto const cells = static_cast<std::size_t>(s * s);
  ComplexBuilder b(3);
  FaceId bottom = b.add_face(-1);
  std::vector<FaceId> v(cells), h(cells), w(cells), sq(cells);
  for (auto &x : v) x = b.add_face(0);
  for (auto &x : h) x = b.add_face(1);
  for (auto &x : w) x = b.add_face(1);
  for (auto &x : sq) x = b.add_face(2);
  FaceId top = b.add_face(3);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      auto c = cell(i, j);
      b.relate(bottom, v[c]);
      b.relate(v[c], h[c]);
      b.relate(v[cell(i + 1, j)], h[c]);
      b.relate(v[c], w[c]);
      b.relate(v[cell(i, j + 1)], w[c]);
      b.relate(h[c], sq[c]);
      b.relate(h[cell(i, j + 1)], sq[c]);
      b.relate(w[c], sq[c]);
      b.relate(w[cell(i + 1, j)], sq[c]);
      b.relate(sq[c], top);
    }
  return std::move(b).build();
}

/// {3,6}_(b,0) from the triangular lattice mod b. Edge classes a, b, c join
/// (i,j)-(i+1,j), (i,j)-(i,j+1) and (i+1,j)-(i,j+1); each lattice cell
/// carries an up triangle {a(i,j), b(i,j), c(i,j)} and a down triangle
/// {c(i,j), a(i,j+1), b(i+1,j)}.
inline IncidenceComplex make_torus36(int n)
{
  require(n >= 2, "torus36(b) needs b >= 2");
  auto cell = [n](int i, int j) {
    return static_cast<std::size_t>(((i % n + n) % n) * n + ((j % n + n) % n));
  };
  auto const cells = static_cast<std::size_t>(n * n);
  ComplexBuilder b(3);
  FaceId bottom = b.add_face(-1);
  std::vector<FaceId> v(cells), ea(cells), eb(cells), ec(cells), up(cells), dn(cells);
  for (auto &x : v) x = b.add_face(0);
  for (auto &x : ea) x = b.add_face(1);
  for (auto &x : eb) x = b.add_face(1);
  for (auto &x : ec) x = b.add_face(1);
  for (auto &x : up) x = b.add_face(2);
  for (auto &x : dn) x = b.add_face(2);
  FaceId top = b.add_face(3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto c = cell(i, j);
      b.relate(bottom, v[c]);
      b.relate(v[c], ea[c]);
      b.relate(v[cell(i + 1, j)], ea[c]);
      b.relate(v[c], eb[c]);
      b.relate(v[cell(i, j + 1)], eb[c]);
      b.relate(v[cell(i + 1, j)], ec[c]);
      b.relate(v[cell(i, j + 1)], ec[c]);
      b.relate(ea[c], up[c]);
      b.relate(eb[c], up[c]);
      b.relate(ec[c], up[c]);
      b.relate(ec[c], dn[c]);
      b.relate(ea[cell(i, j + 1)], dn[c]);
      b.relate(eb[cell(i + 1, j)], dn[c]);
      b.relate(up[c], top);
      b.relate(dn[c], top);
    }
  return std::move(b).build();
}

}  // namespace detail

/// Builds the named complex. complex_cube(v, n) is n^{simplex(v)}.
inline IncidenceComplex generate(CatalogKey const &key)
{
  auto const &p = key.params;
  switch (key.family) {
    case CatalogFamily::simplex: return detail::make_simplex(p.at(0));
    case CatalogFamily::polygon: return detail::make_polygon(p.at(0));
    case CatalogFamily::rank1: return detail::make_rank1(p.at(0));
    case CatalogFamily::cube: return detail::make_cube(p.at(0));
    case CatalogFamily::complex_cube:
      detail::require(p.at(0) >= 1 && p.at(1) >= 2, "complex_cube(v, n) needs v >= 1, n >= 2");
      return power_complex(detail::make_simplex(p.at(0)), p.at(1)).complex();
    case CatalogFamily::torus44: return detail::make_torus44(p.at(0));
    case CatalogFamily::torus36: return detail::make_torus36(p.at(0));
  }
  throw precondition_error("unknown catalog family");
}

inline IncidenceComplex simplex(int v) { return generate(CatalogKey::simplex(v)); }
inline IncidenceComplex polygon(int q) { return generate(CatalogKey::polygon(q)); }
inline IncidenceComplex rank1(int v) { return generate(CatalogKey::rank1(v)); }
inline IncidenceComplex cube(int v) { return generate(CatalogKey::cube(v)); }
inline IncidenceComplex complex_cube(int v, int n) { return generate(CatalogKey::complex_cube(v, n)); }
inline IncidenceComplex torus44(int s) { return generate(CatalogKey::torus44(s)); }
inline IncidenceComplex torus36(int b) { return generate(CatalogKey::torus36(b)); }

}  // namespace powercx
