#include <numeric>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "powercx.hpp"

using namespace powercx;

namespace {

std::vector<IncidenceComplex> desk_complexes()
{
  return {simplex(1), simplex(2), simplex(3), simplex(4), polygon(3), polygon(4), polygon(6),
          rank1(2),   rank1(4),   cube(3),    complex_cube(2, 3), complex_cube(3, 2),
          torus44(3), torus36(3), fixture::prism()};
}

}  // namespace

TEST_CASE("validate accepts the triangle with c = (2,2)")
{
  auto const r = validate_complex(polygon(3));
  CHECK(r.is_complex);
  CHECK(r.violations.empty());
  CHECK(*r.c == std::vector<int>{2, 2});
}

TEST_CASE("complex square: nine vertices, six edges, c = (3,2)")
{
  auto const K = complex_cube(2, 3);
  auto const r = validate_complex(K);
  REQUIRE(r.is_complex);
  CHECK(*r.c == std::vector<int>{3, 2});
  CHECK(K.f_vector() == std::vector<std::size_t>{1, 9, 6, 1});
}

TEST_CASE("triangle with a missing edge fails I4 with a witness")
{
  auto const r = validate_complex(fixture::broken_triangle());
  CHECK_FALSE(r.is_complex);
  CHECK_FALSE(r.c.has_value());
  REQUIRE_FALSE(r.violations.empty());
  bool i4 = false;
  for (auto const &v : r.violations)
    if (v.axiom == "I4") {
      i4 = true;
      CHECK_FALSE(v.faces.empty());
    }
  CHECK(i4);
}

TEST_CASE("malformed input is rejected before the axioms")
{
  CHECK_THROWS_AS(IncidenceComplex(1, {-1, 0, 1}, {{0, 7}}), malformed_poset);
  CHECK_THROWS_AS(IncidenceComplex(1, {-1, 0, 1}, {{2, 1}}), malformed_poset);
  CHECK_THROWS_AS(IncidenceComplex(1, {-1, 5, 1}, {}), malformed_poset);
}

TEST_CASE("two greatest faces violate I1")
{
  ComplexBuilder b(1);
  auto bot = b.add_face(-1);
  auto v = b.add_face(0), w = b.add_face(0);
  auto t1 = b.add_face(1), t2 = b.add_face(1);
  for (auto x : {v, w}) {
    b.relate(bot, x);
    b.relate(x, t1);
    b.relate(x, t2);
  }
  auto const r = validate_complex(std::move(b).build());
  CHECK_FALSE(r.is_complex);
  CHECK(std::any_of(r.violations.begin(), r.violations.end(),
                    [](Violation const &x) { return x.axiom == "I1"; }));
}

TEST_CASE("two disjoint triangles under one top violate I3")
{
  auto const K = fixture::from_vertex_sets(
      2, 6, {{1, {0, 1}}, {1, {1, 2}}, {1, {0, 2}}, {1, {3, 4}}, {1, {4, 5}}, {1, {3, 5}}});
  auto const r = validate_complex(K);
  CHECK_FALSE(r.is_complex);
  CHECK(std::any_of(r.violations.begin(), r.violations.end(),
                    [](Violation const &x) { return x.axiom == "I3"; }));
  CHECK_FALSE(oracle::strongly_flag_connected(K));
}

TEST_CASE("section examples")
{
  auto const c3 = cube(3);
  CHECK(is_isomorphic(section(c3, c3.bottom(), c3.top()), c3));

  auto const sq = complex_cube(2, 3);
  auto const vf = section(sq, sq.vertices()[0], sq.top());
  CHECK(vf.rank() == 1);
  CHECK(vf.f_vector() == std::vector<std::size_t>{1, 2, 1});

  auto const facet = c3.faces_of_rank(2)[0];
  CHECK(is_isomorphic(section(c3, c3.bottom(), facet), polygon(4)));
  CHECK_THROWS_AS(section(c3, facet, c3.vertices()[0]), precondition_error);
}

TEST_CASE("flag counts and flag-graph degrees")
{
  CHECK(flags(polygon(3)).size() == 6);
  CHECK(flags(cube(3)).size() == 48);

  auto const sq = complex_cube(2, 3);
  FlagGraph g(sq);
  REQUIRE(g.size() == 18);
  for (std::size_t f = 0; f < g.size(); ++f) {
    CHECK(g.neighbors(f, 0).size() == 2);
    CHECK(g.neighbors(f, 1).size() == 1);
  }
}

TEST_CASE("flag enumeration agrees with an independent chain enumeration")
{
  for (auto const &K : desk_complexes()) {
    std::vector<std::vector<FaceId>> mine;
    for (auto const &f : flags(K))
      mine.push_back(f.faces);
    std::sort(mine.begin(), mine.end());
    CHECK(mine == oracle::maximal_chains(K));
  }
}

TEST_CASE("every flag has c_i - 1 neighbours of label i")
{
  for (auto const &K : desk_complexes()) {
    auto const c = *validate_complex(K).c;
    FlagGraph g(K);
    for (std::size_t f = 0; f < g.size(); ++f)
      for (int i = 0; i < K.rank(); ++i)
        CHECK(static_cast<int>(g.neighbors(f, i).size()) == c[static_cast<std::size_t>(i)] - 1);
  }
}

TEST_CASE("I3 via sections agrees with the pairwise definition")
{
  for (auto const &K : desk_complexes()) {
    INFO(K.size());
    CHECK(oracle::strongly_flag_connected(K));
  }
  auto const bad = fixture::from_vertex_sets(
      2, 6, {{1, {0, 1}}, {1, {1, 2}}, {1, {0, 2}}, {1, {3, 4}}, {1, {4, 5}}, {1, {3, 5}}});
  CHECK(oracle::strongly_flag_connected(bad) == validate_complex(bad).is_complex);
}

TEST_CASE("I4 counts agree with direct enumeration")
{
  for (auto const &K : desk_complexes()) {
    auto const c = *validate_complex(K).c;
    for (int i = 0; i < K.rank(); ++i) {
      auto const counts = oracle::diamond_counts(K, i);
      REQUIRE(counts.size() == 1);
      CHECK(static_cast<int>(*counts.begin()) == c[static_cast<std::size_t>(i)]);
    }
  }
}

TEST_CASE("every section is a complex with the matching slice of c")
{
  for (auto const &K : {polygon(5), cube(3), complex_cube(2, 3), complex_cube(3, 2), torus44(3)}) {
    auto const c = *validate_complex(K).c;
    for (FaceId lo = 0; lo < K.size(); ++lo)
      for (FaceId hi = 0; hi < K.size(); ++hi) {
        if (!K.leq(lo, hi))
          continue;
        auto const S = section(K, lo, hi);
        auto const r = validate_complex(S);
        REQUIRE(r.is_complex);
        std::vector<int> slice;
        for (int i = K.rank_of(lo) + 1; i < K.rank_of(hi); ++i)
          slice.push_back(c[static_cast<std::size_t>(i)]);
        CHECK(*r.c == slice);
      }
  }
}

TEST_CASE("vertex-describability")
{
  CHECK(is_vertex_describable(complex_cube(2, 3)));
  CHECK(is_vertex_describable(cube(4)));
  CHECK_FALSE(is_vertex_describable(torus44(2)));
  CHECK(is_vertex_describable(torus44(3)));
  CHECK(is_vertex_describable(torus44(4)));
  CHECK_FALSE(is_vertex_describable(polygon(2)));
  auto const sets = is_vertex_describable(polygon(4));
  REQUIRE(sets);
  CHECK((*sets)[polygon(4).top()].size() == 4);
}

TEST_CASE("isomorphism examples")
{
  auto const sq = polygon(4);
  auto const id = is_isomorphic(sq, sq);
  REQUIRE(id);
  CHECK(is_isomorphism(sq, sq, *id));
  CHECK(is_isomorphic(power_complex(simplex(2), 2).complex(), polygon(4)));
  CHECK(is_isomorphic(power_complex(simplex(3), 2).complex(), cube(3)));
  CHECK_FALSE(is_isomorphic(polygon(3), polygon(4)));
  CHECK_FALSE(is_isomorphic(torus44(4), torus36(2)));
  CHECK_FALSE(is_isomorphic(fixture::prism(), cube(3)));
}

TEST_CASE("is_isomorphic is reflexive and symmetric on the catalog")
{
  auto const all = desk_complexes();
  for (std::size_t a = 0; a < all.size(); ++a) {
    CHECK(is_isomorphic(all[a], all[a]));
    for (std::size_t b = a + 1; b < all.size(); ++b)
      CHECK(is_isomorphic(all[a], all[b]).has_value() == is_isomorphic(all[b], all[a]).has_value());
  }
}

TEST_CASE("relabelled copies are isomorphic and the map is checked")
{
  auto const K = torus36(3);
  std::vector<FaceId> perm(K.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::mt19937 rng(7);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> ranks(K.size());
  for (FaceId f = 0; f < K.size(); ++f)
    ranks[perm[f]] = K.rank_of(f);
  std::vector<std::pair<FaceId, FaceId>> rel;
  for (auto [lo, hi] : K.covers())
    rel.emplace_back(perm[lo], perm[hi]);
  IncidenceComplex const shuffled(K.rank(), ranks, rel);
  auto const iso = is_isomorphic(K, shuffled);
  REQUIRE(iso);
  CHECK(is_isomorphism(K, shuffled, *iso));
}
