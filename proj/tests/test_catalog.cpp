#include <catch2/catch_amalgamated.hpp>

#include "powercx.hpp"

using namespace powercx;

TEST_CASE("catalog f-vectors")
{
  CHECK(simplex(3).f_vector() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(simplex(4).f_vector() == std::vector<std::size_t>{1, 4, 6, 4, 1});
  CHECK(polygon(5).f_vector() == std::vector<std::size_t>{1, 5, 5, 1});
  CHECK(rank1(4).f_vector() == std::vector<std::size_t>{1, 4, 1});
  CHECK(cube(3).f_vector() == std::vector<std::size_t>{1, 8, 12, 6, 1});
  CHECK(complex_cube(2, 3).f_vector() == std::vector<std::size_t>{1, 9, 6, 1});
  CHECK(torus44(3).f_vector() == std::vector<std::size_t>{1, 9, 18, 9, 1});
  CHECK(torus36(3).f_vector() == std::vector<std::size_t>{1, 9, 27, 18, 1});
}

TEST_CASE("every catalog complex validates")
{
  std::vector<CatalogKey> keys;
  for (int v = 1; v <= 5; ++v)
    keys.push_back(CatalogKey::simplex(v));
  for (int q = 2; q <= 8; ++q)
    keys.push_back(CatalogKey::polygon(q));
  for (int v = 2; v <= 5; ++v)
    keys.push_back(CatalogKey::rank1(v));
  for (int v = 1; v <= 4; ++v)
    keys.push_back(CatalogKey::cube(v));
  keys.push_back(CatalogKey::complex_cube(2, 3));
  keys.push_back(CatalogKey::complex_cube(3, 3));
  for (int s = 2; s <= 5; ++s)
    keys.push_back(CatalogKey::torus44(s));
  for (int b = 2; b <= 4; ++b)
    keys.push_back(CatalogKey::torus36(b));
  for (auto const &key : keys) {
    INFO(to_string(key.family) << " " << key.params.front());
    CHECK(validate_complex(generate(key)).is_complex);
  }
}

TEST_CASE("torus36: Euler characteristic zero")
{
  for (int b = 2; b <= 5; ++b) {
    auto const f = torus36(b).f_vector();
    CHECK(static_cast<long>(f[1]) - static_cast<long>(f[2]) + static_cast<long>(f[3]) == 0);
  }
}

TEST_CASE("cube(v) matches 2^{simplex(v)}")
{
  for (int v = 2; v <= 5; ++v)
    CHECK(is_isomorphic(cube(v), power_complex(simplex(v), 2).complex()));
}

TEST_CASE("catalog c-vectors")
{
  for (int v = 2; v <= 5; ++v) {
    CHECK(*validate_complex(simplex(v)).c == std::vector<int>(static_cast<std::size_t>(v - 1), 2));
    CHECK(*validate_complex(cube(v)).c == std::vector<int>(static_cast<std::size_t>(v), 2));
  }
  for (int q = 3; q <= 7; ++q)
    CHECK(*validate_complex(polygon(q)).c == std::vector<int>{2, 2});
  for (int v = 1; v <= 3; ++v)
    for (int n = 2; n <= 4; ++n) {
      std::vector<int> c(static_cast<std::size_t>(v), 2);
      c[0] = n;
      CHECK(*validate_complex(complex_cube(v, n)).c == c);
    }
}

TEST_CASE("vertex-describability across the catalog")
{
  for (int q = 3; q <= 8; ++q)
    CHECK(is_vertex_describable(polygon(q)));
  for (int v = 1; v <= 5; ++v)
    CHECK(is_vertex_describable(simplex(v)));
  CHECK_FALSE(is_vertex_describable(torus44(2)));
  for (int s = 3; s <= 5; ++s)
    CHECK(is_vertex_describable(torus44(s)));
}

TEST_CASE("catalog parameter checks")
{
  CHECK_THROWS_AS(simplex(0), precondition_error);
  CHECK_THROWS_AS(polygon(1), precondition_error);
  CHECK_THROWS_AS(rank1(1), precondition_error);
  CHECK_THROWS_AS(torus44(1), precondition_error);
  CHECK_THROWS_AS(complex_cube(2, 1), precondition_error);
  CHECK_THROWS_AS(parse_catalog_key("dodecahedron", {}), precondition_error);
  CHECK_THROWS_AS(parse_catalog_key("polygon", {3, 4}), precondition_error);
  auto const key = parse_catalog_key("complex_cube", {2, 3});
  CHECK(key.family == CatalogFamily::complex_cube);
  CHECK(is_isomorphic(generate(key), complex_cube(2, 3)));
}
