#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "powercx.hpp"

using namespace powercx;

namespace {

/// All maps {1..n} -> {1..m} that hit every value.
std::vector<std::vector<int>> surjections(int n, int m)
{
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(n), 1);
  for (;;) {
    std::vector<bool> hit(static_cast<std::size_t>(m) + 1, false);
    for (int x : f)
      hit[static_cast<std::size_t>(x)] = true;
    if (std::count(hit.begin() + 1, hit.end(), true) == m)
      out.push_back(f);
    std::size_t k = 0;
    while (k < f.size() && f[k] == m)
      f[k++] = 1;
    if (k == f.size())
      break;
    ++f[k];
  }
  return out;
}

bool bijective(std::vector<int> const &f, int m)
{
  return static_cast<int>(f.size()) == m &&
         std::set<int>(f.begin(), f.end()).size() == static_cast<std::size_t>(m);
}

/// g on {1..n}^l (lexicographic) separates any two tuples at Hamming distance 1.
bool latin(std::vector<int> const &g, int n)
{
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      int differ = 0;
      for (std::size_t x = a, y = b; x || y; x /= n, y /= n)
        differ += x % n != y % n;
      if (differ == 1 && g[a] == g[b])
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("identity is a covering")
{
  auto const c = classify(identity_map(cube(3)));
  CHECK(c.covering());
  CHECK(c.label() == "covering");
  CHECK_FALSE(c.witness);
}

TEST_CASE("hexagon wrapped around the triangle is a covering")
{
  auto const gamma = wrap_polygon(3, 2);
  auto const c = classify(gamma);
  CHECK(c.covering());
  CHECK(is_equifibered(gamma) == std::optional<std::size_t>{2});
  CHECK(is_equifibered(identity_map(polygon(5))) == std::optional<std::size_t>{1});
}

TEST_CASE("collapsing a triangle onto one vertex is not rank preserving")
{
  auto const K = polygon(3);  // bottom 0, vertices 1..3, edges 4..6, top 7
  ComplexMap const collapse{K, K, {0, 1, 1, 1, 1, 1, 1, 7}};
  auto const c = classify(collapse);
  CHECK_FALSE(c.rank_preserving);
  CHECK_FALSE(c.weak_rap);
  CHECK_FALSE(c.covering());
  REQUIRE(c.witness);
  CHECK(c.witness->property == "rank");
  CHECK((c.label() == "homomorphism" || c.label() == "not_homomorphism"));
}

TEST_CASE("non-order-preserving and non-total maps")
{
  auto const K = polygon(4);
  auto m = identity_map(K);
  std::swap(m.face_map[1], m.face_map[3]);  // vertices 1 and 3 swapped, edges kept
  auto const c = classify(m);
  CHECK_FALSE(c.homomorphism);
  CHECK(c.label() == "not_homomorphism");
  m.face_map.pop_back();
  CHECK_THROWS_AS(classify(m), precondition_error);
}

TEST_CASE("uneven covering is not equifibered")
{
  auto const gamma = fixture::uneven_covering();
  CHECK(validate_complex(gamma.target).is_complex);
  CHECK(classify(gamma).covering());
  CHECK(vertex_fibers(gamma) == std::vector<std::size_t>{2, 1, 1});
  CHECK_FALSE(is_equifibered(gamma));
  CHECK_THROWS_AS(induced_covering_g(gamma, 2, 2, {1, 2}), precondition_error);
}

TEST_CASE("composition of coverings is a covering")
{
  auto const a = wrap_polygon(6, 2);  // 12-gon onto hexagon
  auto const b = wrap_polygon(3, 2);  // hexagon onto triangle
  auto const ab = compose(a, b);
  CHECK(classify(ab).covering());
  CHECK(is_equifibered(ab) == std::optional<std::size_t>{4});
  CHECK_THROWS_AS(compose(b, a), precondition_error);
}

TEST_CASE("hexagon modulo the half turn is the triangle")
{
  auto const K = polygon(6);
  auto const q = quotient(K, std::vector<Perm>{fixture::half_turn(6)});
  REQUIRE(q.report.is_complex);
  CHECK(is_isomorphic(q.poset, polygon(3)));
  REQUIRE(q.projection);
  CHECK(classify(*q.projection).covering());
  CHECK(is_equifibered(*q.projection) == std::optional<std::size_t>{2});
}

TEST_CASE("quotient by the trivial group is the complex itself")
{
  auto const K = cube(3);
  auto const q = quotient(K, std::vector<Perm>{});
  CHECK(is_isomorphic(q.poset, K));
  CHECK(classify(*q.projection).covering());
}

TEST_CASE("square modulo the half turn is a digon")
{
  auto const q = quotient(polygon(4), std::vector<Perm>{fixture::half_turn(4)});
  CHECK(q.poset.f_vector() == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(q.report.is_complex);
  CHECK_FALSE(is_vertex_describable(q.poset));
  CHECK_THROWS_AS(power_complex(q.poset, 2), precondition_error);
}

TEST_CASE("quotients that break the axioms are reported")
{
  // the full group of the triangle collapses each rank to one face
  auto const K = polygon(3);
  auto const q = quotient(K, automorphism_group(K));
  CHECK(q.poset.f_vector() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK_FALSE(q.report.is_complex);
  CHECK_FALSE(q.projection);
}

TEST_CASE("quotient rejects non-automorphisms")
{
  CHECK_THROWS_AS(quotient(polygon(4), std::vector<Perm>{parse_cycles("(1 5)", 10)}),
                  precondition_error);
}

TEST_CASE("quotient projections of the cube are coverings when the quotient is a complex")
{
  auto const K = cube(3);
  auto const G = automorphism_group(K);
  int valid = 0;
  for (auto const &g : G.elements()) {
    auto const q = quotient(K, std::vector<Perm>{g});
    if (q.report.is_complex) {
      ++valid;
      CHECK(classify(*q.projection).label() != "not_homomorphism");
    }
  }
  CHECK(valid >= 1);
}

TEST_CASE("induced f-maps are weak coverings, coverings iff f and gamma are injective on vertices")
{
  for (auto const &gamma : {identity_map(polygon(4)), wrap_polygon(3, 2)})
    for (int n = 2; n <= 3; ++n)
      for (int m = 2; m <= n; ++m)
        for (auto const &f : surjections(n, m)) {
          auto const c = induced_covering_f(gamma, n, m, f);
          auto const cls = classify(c.map);
          CHECK(cls.weak_covering());
          CHECK(cls.covering() == (bijective(f, m) && bijective_on_vertices(gamma)));
          if (!cls.covering()) {
            REQUIRE(cls.witness);
            REQUIRE(cls.witness->flags);
          }
        }
}

TEST_CASE("f = identity on 2^{hexagon} lands on the cube")
{
  auto const c = induced_covering_f(wrap_polygon(3, 2), 2, 2, {1, 2});
  CHECK(is_isomorphic(c.map.target, cube(3)));
  CHECK(c.source_labels.size() == 6);
  CHECK(c.target_labels.size() == 3);
  auto const cls = classify(c.map);
  CHECK(cls.weak_covering());
  CHECK_FALSE(cls.covering());
}

TEST_CASE("bijective f still collapses edges along non-representative vertices")
{
  // hexagon vertices 4..6 sit over triangle vertices 1..3 but are not the
  // coordinates the map reads, so an edge moving along vertex 4 loses its length
  auto const gamma = wrap_polygon(3, 2);
  auto const c = induced_covering_f(gamma, 2, 2, {1, 2});
  auto const &P = c.map.source;
  std::size_t collapsed = 0;
  for (FaceId e : P.faces_of_rank(1)) {
    std::vector<FaceId> ends;
    for (FaceId v : P.faces_of_rank(0))
      if (P.leq(v, e))
        ends.push_back(c.map(v));
    REQUIRE(ends.size() == 2);
    collapsed += ends[0] == ends[1];
  }
  // 2^{hexagon} has 6 * 32 edges, half of them along vertices 4..6
  CHECK(P.faces_of_rank(1).size() == 192);
  CHECK(collapsed == 96);
}

TEST_CASE("f over the identity covering is the identity")
{
  auto const K = polygon(4);
  auto const c = induced_covering_f(identity_map(K), 2, 2, {1, 2});
  for (FaceId f = 0; f < c.map.source.size(); ++f)
    CHECK(c.map(f) == f);
}

TEST_CASE("the non-bijective f collapses a 0-adjacent pair of flags")
{
  auto const c = induced_covering_f(wrap_polygon(3, 2), 3, 2, {1, 1, 2});
  auto const cls = classify(c.map);
  CHECK(cls.weak_covering());
  CHECK_FALSE(cls.covering());
  REQUIRE(cls.witness);
  REQUIRE(cls.witness->flags);
  auto const &[a, b] = *cls.witness->flags;
  std::vector<FaceId> ia, ib;
  for (FaceId x : a.faces)
    ia.push_back(c.map(x));
  for (FaceId x : b.faces)
    ib.push_back(c.map(x));
  CHECK(ia == ib);
}

TEST_CASE("induced f-coverings over the uneven covering")
{
  auto const gamma = fixture::uneven_covering();
  // the target is not vertex-describable, so no power complex exists over it
  CHECK_THROWS_AS(induced_covering_f(gamma, 2, 2, {1, 2}), precondition_error);
}

TEST_CASE("induced f-covering preconditions")
{
  auto const gamma = wrap_polygon(3, 2);
  CHECK_THROWS_AS(induced_covering_f(gamma, 2, 3, {1, 2}), precondition_error);
  CHECK_THROWS_AS(induced_covering_f(gamma, 3, 2, {1, 1, 1}), precondition_error);
  CHECK_THROWS_AS(induced_covering_f(gamma, 3, 2, {1, 2}), precondition_error);
  auto bad = gamma;
  bad.face_map[1] = bad.face_map[2];
  CHECK_THROWS_AS(induced_covering_f(bad, 2, 2, {1, 2}), precondition_error);
}

TEST_CASE("g-covering 2^{hexagon} -> 4^{triangle}")
{
  auto const gamma = wrap_polygon(3, 2);
  std::vector<int> g{1, 2, 3, 4};
  do {
    auto const c = induced_covering_g(gamma, 2, 4, g);
    auto const cls = classify(c.map);
    CHECK(cls.covering());
    CHECK(c.map.source.vertices().size() == 64);
    CHECK(c.map.target.vertices().size() == 64);
    CHECK(bijective_on_vertices(c.map));
  } while (std::next_permutation(g.begin(), g.end()));
}

TEST_CASE("g = first block coordinate gives a weak covering only")
{
  auto const c = induced_covering_g(wrap_polygon(3, 2), 2, 2, {1, 1, 2, 2});
  auto const cls = classify(c.map);
  CHECK(cls.weak_covering());
  CHECK_FALSE(cls.covering());
  CHECK_FALSE(bijective_on_vertices(c.map));
}

TEST_CASE("g-coverings: covering exactly when g separates neighbouring tuples")
{
  auto const gamma = wrap_polygon(3, 2);
  for (int m = 2; m <= 4; ++m)
    for (auto const &g : surjections(4, m)) {
      auto const cls = classify(induced_covering_g(gamma, 2, m, g).map);
      CHECK(cls.weak_covering());
      CHECK(cls.covering() == latin(g, 2));
      if (bijective(g, m))
        CHECK(cls.covering());
    }
}

TEST_CASE("a non-bijective g can still give a covering")
{
  auto const cls = classify(induced_covering_g(wrap_polygon(3, 2), 2, 2, {1, 2, 2, 1}).map);
  CHECK(cls.covering());
}

TEST_CASE("l = 1 g-coverings agree with f-coverings")
{
  auto const gamma = identity_map(polygon(5));
  for (auto const &f : surjections(3, 2)) {
    auto const a = induced_covering_f(gamma, 3, 2, f);
    auto const b = induced_covering_g(gamma, 3, 2, f);
    CHECK(a.map.face_map == b.map.face_map);
  }
}

TEST_CASE("induced g-covering preconditions")
{
  auto const gamma = wrap_polygon(3, 2);
  CHECK_THROWS_AS(induced_covering_g(gamma, 2, 5, {1, 2, 3, 4}), precondition_error);
  CHECK_THROWS_AS(induced_covering_g(gamma, 2, 4, {1, 2, 3}), precondition_error);
  CHECK_THROWS_AS(induced_covering_g(gamma, 2, 4, {1, 2, 3, 3}), precondition_error);
}
