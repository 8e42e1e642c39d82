#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powercx/catalog.hpp"
#include "powercx/complex.hpp"
#include "powercx/errors.hpp"
#include "powercx/perm.hpp"
#include "powercx/power.hpp"
#include "powercx/symmetry.hpp"
#include "powercx/validate.hpp"

namespace powercx {

/// A face map between two complexes. Nothing is checked at construction.
struct ComplexMap {
  IncidenceComplex source;
  IncidenceComplex target;
  std::vector<FaceId> face_map;

  FaceId operator()(FaceId f) const { return face_map.at(f); }
};

/// Evidence for the first property that failed.
struct MapWitness {
  std::string property;
  std::vector<FaceId> faces;
  std::optional<std::pair<Flag, Flag>> flags;  // source flags with equal images
};

struct MapClass {
  bool homomorphism = false;
  bool rank_preserving = false;
  bool weak_rap = false;
  bool rap = false;
  bool surjective = false;
  std::optional<MapWitness> witness;

  bool weak_covering() const { return weak_rap && surjective; }
  bool covering() const { return rap && surjective; }

  /// Strongest class that holds.
  std::string label() const
  {
    if (covering()) return "covering";
    if (weak_covering()) return "weak_covering";
    if (rap) return "rap";
    if (weak_rap) return "weak_rap";
    if (homomorphism) return "homomorphism";
    return "not_homomorphism";
  }
};

namespace detail {

inline void require_total(ComplexMap const &phi)
{
  if (phi.face_map.size() != phi.source.size())
    throw precondition_error("face map has " + std::to_string(phi.face_map.size()) +
                             " entries, source has " + std::to_string(phi.source.size()) +
                             " faces");
  for (FaceId x : phi.face_map)
    if (x >= phi.target.size())
      throw precondition_error("face map image " + std::to_string(x) + " out of range");
}

}  // namespace detail

inline MapClass classify(ComplexMap const &phi)
{
  detail::require_total(phi);
  auto const &K = phi.source;
  auto const &L = phi.target;
  MapClass out;
  auto fail = [&](std::string what, std::vector<FaceId> faces) {
    if (!out.witness)
      out.witness = MapWitness{std::move(what), std::move(faces), std::nullopt};
  };

  out.homomorphism = true;
  for (auto [lo, hi] : K.covers())
    if (!L.leq(phi(lo), phi(hi))) {
      out.homomorphism = false;
      fail("order", {lo, hi});
      break;
    }

  out.rank_preserving = K.rank() == L.rank();
  if (!out.rank_preserving)
    fail("rank", {});
  for (FaceId f = 0; f < K.size() && out.rank_preserving; ++f)
    if (K.rank_of(f) != L.rank_of(phi(f))) {
      out.rank_preserving = false;
      fail("rank", {f});
    }

  std::vector<bool> hit(L.size(), false);
  for (FaceId x : phi.face_map)
    hit[x] = true;
  out.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  if (!out.surjective)
    fail("surjective", {static_cast<FaceId>(std::find(hit.begin(), hit.end(), false) - hit.begin())});

  if (!out.homomorphism || !out.rank_preserving)
    return out;

  // Source flags adjacent in their i-face map to flags sharing every other
  // face; the images are i-adjacent unless the two i-faces collapse.
  FlagGraph graph(K);
  out.weak_rap = true;
  out.rap = true;
  for (auto const &e : graph.edges()) {
    auto const &a = graph.flag(e.from);
    auto const &b = graph.flag(e.to);
    if (phi(a.at(e.label)) == phi(b.at(e.label))) {
      if (out.rap && !out.witness)
        out.witness = MapWitness{"adjacency", {a.at(e.label), b.at(e.label)}, std::pair{a, b}};
      out.rap = false;
    }
  }
  return out;
}

inline ComplexMap identity_map(IncidenceComplex const &K)
{
  std::vector<FaceId> m(K.size());
  for (FaceId f = 0; f < K.size(); ++f)
    m[f] = f;
  return {K, K, std::move(m)};
}

/// First a, then b.
inline ComplexMap compose(ComplexMap const &a, ComplexMap const &b)
{
  detail::require_total(a);
  detail::require_total(b);
  if (!(a.target == b.source))
    throw precondition_error("maps are not composable");
  std::vector<FaceId> m(a.source.size());
  for (FaceId f = 0; f < m.size(); ++f)
    m[f] = b(a(f));
  return {a.source, b.target, std::move(m)};
}

/// polygon(l * p) wrapped l times around polygon(p): vertex and edge i go to i mod p.
inline ComplexMap wrap_polygon(int p, int l)
{
  if (p < 2 || l < 1)
    throw precondition_error("wrap_polygon needs p >= 2, l >= 1");
  auto const K = detail::make_polygon(p * l);
  auto const L = detail::make_polygon(p);
  auto const q = static_cast<FaceId>(p * l);
  auto const pp = static_cast<FaceId>(p);
  std::vector<FaceId> m(K.size());
  m[0] = 0;
  for (FaceId i = 0; i < q; ++i) {
    m[1 + i] = 1 + i % pp;
    m[1 + q + i] = 1 + pp + i % pp;
  }
  m[2 * q + 1] = 2 * pp + 1;
  return {K, L, std::move(m)};
}

struct QuotientResult {
  IncidenceComplex poset;
  ValidationReport report;
  std::vector<FaceId> orbit_of_face;
  std::optional<ComplexMap> projection;  // present when the quotient is a complex
};

/// K / <gens>. Orbits are numbered by rank, then by their least face id.
inline QuotientResult quotient(IncidenceComplex const &K, std::vector<Perm> const &gens)
{
  for (auto const &g : gens)
    if (!is_automorphism(K, g))
      throw precondition_error("generator " + to_cycles(g) + " is not an automorphism");

  detail::DisjointSets sets(K.size());
  for (auto const &g : gens)
    for (FaceId f = 0; f < K.size(); ++f)
      sets.unite(f, g[f]);

  std::vector<FaceId> orbit(K.size());
  std::map<std::size_t, FaceId> id_of_root;
  std::vector<int> ranks;
  for (int r = -1; r <= K.rank(); ++r)
    for (FaceId f : K.faces_of_rank(r)) {
      auto [it, fresh] = id_of_root.emplace(sets.find(f), static_cast<FaceId>(ranks.size()));
      if (fresh)
        ranks.push_back(r);
      orbit[f] = it->second;
    }

  std::vector<std::pair<FaceId, FaceId>> rel;
  for (auto [lo, hi] : K.covers())
    rel.emplace_back(orbit[lo], orbit[hi]);
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());

  QuotientResult out{IncidenceComplex(K.rank(), std::move(ranks), rel), {}, orbit, std::nullopt};
  out.report = validate_complex(out.poset);
  if (out.report.is_complex)
    out.projection = ComplexMap{K, out.poset, orbit};
  return out;
}

inline QuotientResult quotient(IncidenceComplex const &K, PermGroup const &sigma)
{
  if (sigma.degree() != K.size())
    throw precondition_error("group degree does not match the complex");
  return quotient(K, sigma.generators());
}

/// Vertex fiber sizes of a rank-preserving map, indexed like target.vertices().
inline std::vector<std::size_t> vertex_fibers(ComplexMap const &gamma)
{
  detail::require_total(gamma);
  auto const lv = gamma.target.vertices();
  std::map<FaceId, std::size_t> index;
  for (std::size_t j = 0; j < lv.size(); ++j)
    index[lv[j]] = j;
  std::vector<std::size_t> sizes(lv.size(), 0);
  for (FaceId u : gamma.source.vertices()) {
    auto it = index.find(gamma(u));
    if (it == index.end())
      throw precondition_error("map sends a vertex to a non-vertex");
    ++sizes[it->second];
  }
  return sizes;
}

/// Common fiber size l when every vertex fiber has the same size.
inline std::optional<std::size_t> is_equifibered(ComplexMap const &gamma)
{
  auto const sizes = vertex_fibers(gamma);
  if (sizes.empty() || std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end())
    return std::nullopt;
  return sizes.front();
}

/// An induced map n^K -> m^L with the vertex labelings it was built under.
/// `source_labels[i]` is the K vertex labelled i + 1; `target_labels[j]` the L
/// vertex labelled j + 1.
struct InducedCovering {
  PowerComplex source;
  PowerComplex target;
  ComplexMap map;
  std::vector<FaceId> source_labels;
  std::vector<FaceId> target_labels;
};

namespace detail {

inline void require_covering(ComplexMap const &gamma)
{
  auto const c = classify(gamma);
  if (!c.covering())
    throw precondition_error("base map is not a covering (classified as " + c.label() + ")");
}

/// Coordinate index of each vertex of P's base, keyed by face id.
inline std::map<FaceId, std::size_t> coordinates(PowerComplex const &P)
{
  std::map<FaceId, std::size_t> out;
  for (std::size_t i = 0; i < P.dimension(); ++i)
    out[P.base_vertices()[i]] = i;
  return out;
}

/// Builds the face map from an image rule on full vectors eps, and checks
/// that every full eps extending a face gives the same image.
template <class Rule>
std::vector<FaceId> power_face_map(PowerComplex const &PK, Rule const &image_of,
                                   std::optional<FaceId> *bad = nullptr)
{
  auto const &C = PK.complex();
  std::vector<FaceId> m(C.size(), 0);
  std::size_t const v = PK.dimension();
  int const n = PK.n();
  for (FaceId p = 1; p < C.size(); ++p) {
    auto const &pf = PK.face(p);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < v; ++i)
      if (pf.fixed[i] == 0)
        free.push_back(i);
    std::vector<int> eps = pf.fixed;
    for (auto i : free)
      eps[i] = 1;
    m[p] = image_of(*pf.base, eps);
    if (!bad)
      continue;
    // odometer over the free coordinates
    for (;;) {
      std::size_t k = 0;
      while (k < free.size() && eps[free[k]] == n)
        eps[free[k++]] = 1;
      if (k == free.size())
        break;
      ++eps[free[k]];
      if (image_of(*pf.base, eps) != m[p] && !*bad)
        *bad = p;
    }
  }
  return m;
}

}  // namespace detail

/// pi_{gamma,f}: F(eps) -> (F gamma)(eps_f), eps_f = (f(eps_1), ..., f(eps_{v(L)}))
/// once K is labelled so that vertex j of K lies over vertex j of L. `f` lists
/// f(1..n) with values in 1..m.
inline InducedCovering induced_covering_f(ComplexMap const &gamma, int n, int m,
                                          std::vector<int> const &f,
                                          std::size_t face_cap = default_face_cap)
{
  detail::require_covering(gamma);
  if (!(n >= m && m >= 2))
    throw precondition_error("need n >= m >= 2");
  if (f.size() != static_cast<std::size_t>(n))
    throw precondition_error("f must list " + std::to_string(n) + " values");
  std::vector<bool> hit(static_cast<std::size_t>(m) + 1, false);
  for (int x : f) {
    if (x < 1 || x > m)
      throw precondition_error("f value " + std::to_string(x) + " outside 1.." + std::to_string(m));
    hit[static_cast<std::size_t>(x)] = true;
  }
  if (std::count(hit.begin() + 1, hit.end(), true) != m)
    throw precondition_error("f is not surjective");

  PowerComplex PK(gamma.source, n, face_cap);
  PowerComplex PL(gamma.target, m, face_cap);
  auto const lcoord = detail::coordinates(PL);
  std::size_t const vl = PL.dimension();

  // rep[j]: the first K coordinate over L coordinate j
  std::vector<std::size_t> rep(vl, PK.dimension());
  for (std::size_t i = 0; i < PK.dimension(); ++i) {
    auto j = lcoord.at(gamma(PK.base_vertices()[i]));
    if (rep[j] == PK.dimension())
      rep[j] = i;
  }

  auto rule = [&](FaceId F, std::vector<int> const &eps) {
    std::vector<int> eta(vl);
    for (std::size_t j = 0; j < vl; ++j)
      eta[j] = f[static_cast<std::size_t>(eps[rep[j]] - 1)];
    return PL.face_of(gamma(F), eta);
  };
  std::optional<FaceId> bad;
  auto m_faces = detail::power_face_map(PK, rule, &bad);
  if (bad)
    throw error("induced map is not well defined at face " + std::to_string(*bad));

  std::vector<FaceId> source_labels;
  std::vector<bool> used(PK.dimension(), false);
  for (auto i : rep) {
    source_labels.push_back(PK.base_vertices()[i]);
    used[i] = true;
  }
  for (std::size_t i = 0; i < PK.dimension(); ++i)
    if (!used[i])
      source_labels.push_back(PK.base_vertices()[i]);

  ComplexMap map{PK.complex(), PL.complex(), std::move(m_faces)};
  auto target_labels = PL.base_vertices();
  return {std::move(PK), std::move(PL), std::move(map), std::move(source_labels),
          std::move(target_labels)};
}

/// pi^{gamma,g}: F(eps) -> (F gamma)(eps_g) for an equifibered covering with
/// fiber size l. K is labelled in consecutive blocks L_j over the vertices of
/// L (each block in increasing vertex order); `g` lists g on {1..n}^l in
/// lexicographic order, first block coordinate most significant, with values
/// in 1..m.
inline InducedCovering induced_covering_g(ComplexMap const &gamma, int n, int m,
                                          std::vector<int> const &g,
                                          std::size_t face_cap = default_face_cap)
{
  detail::require_covering(gamma);
  auto const l = is_equifibered(gamma);
  if (!l)
    throw precondition_error("covering is not equifibered");
  if (n < 2 || m < 2)
    throw precondition_error("need n, m >= 2");
  std::size_t domain = 1;
  for (std::size_t t = 0; t < *l; ++t) {
    domain *= static_cast<std::size_t>(n);
    if (domain > face_cap)
      throw size_limit_error("n^l exceeds the cap");
  }
  if (g.size() != domain)
    throw precondition_error("g must list n^l = " + std::to_string(domain) + " values");
  std::vector<bool> hit(static_cast<std::size_t>(m) + 1, false);
  for (int x : g) {
    if (x < 1 || x > m)
      throw precondition_error("g value " + std::to_string(x) + " outside 1.." + std::to_string(m));
    hit[static_cast<std::size_t>(x)] = true;
  }
  if (std::count(hit.begin() + 1, hit.end(), true) != m)
    throw precondition_error("g is not surjective");

  PowerComplex PK(gamma.source, n, face_cap);
  PowerComplex PL(gamma.target, m, face_cap);
  auto const lcoord = detail::coordinates(PL);
  std::size_t const vl = PL.dimension();

  std::vector<std::vector<std::size_t>> block(vl);
  for (std::size_t i = 0; i < PK.dimension(); ++i)
    block[lcoord.at(gamma(PK.base_vertices()[i]))].push_back(i);

  auto rule = [&](FaceId F, std::vector<int> const &eps) {
    std::vector<int> eta(vl);
    for (std::size_t j = 0; j < vl; ++j) {
      std::size_t idx = 0;
      for (auto i : block[j])
        idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(eps[i] - 1);
      eta[j] = g[idx];
    }
    return PL.face_of(gamma(F), eta);
  };
  std::optional<FaceId> bad;
  auto m_faces = detail::power_face_map(PK, rule, &bad);
  if (bad)
    throw error("induced map is not well defined at face " + std::to_string(*bad));

  std::vector<FaceId> source_labels;
  for (auto const &b : block)
    for (auto i : b)
      source_labels.push_back(PK.base_vertices()[i]);

  ComplexMap map{PK.complex(), PL.complex(), std::move(m_faces)};
  auto target_labels = PL.base_vertices();
  return {std::move(PK), std::move(PL), std::move(map), std::move(source_labels),
          std::move(target_labels)};
}

/// True when the map restricts to a bijection between the vertex sets.
inline bool bijective_on_vertices(ComplexMap const &phi)
{
  auto const sizes = vertex_fibers(phi);
  return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 1; });
}

}  // namespace powercx
