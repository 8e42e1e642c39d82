#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "powercx/complex.hpp"
#include "powercx/covering.hpp"
#include "powercx/errors.hpp"
#include "powercx/power.hpp"
#include "powercx/validate.hpp"

namespace powercx {

using json = nlohmann::ordered_json;

/// {"rank": k, "faces": [{"id", "rank"}], "covers": [[lo, hi]]}, faces by
/// (rank, id), covers ascending.
inline json to_json(IncidenceComplex const &K)
{
  json faces = json::array();
  for (int r = -1; r <= K.rank(); ++r)
    for (FaceId f : K.faces_of_rank(r))
      faces.push_back(json{{"id", f}, {"rank", r}});
  json covers = json::array();
  for (auto [lo, hi] : K.covers())
    covers.push_back(json::array({lo, hi}));
  return json{{"rank", K.rank()}, {"faces", std::move(faces)}, {"covers", std::move(covers)}};
}

/// Reads the complex format. Ids are kept when they are exactly 0..N-1 and
/// otherwise renumbered in listing order. Throws malformed_poset on
/// structural problems; axioms are not checked here.
inline IncidenceComplex complex_from_json(json const &j)
{
  try {
    if (!j.is_object() || !j.contains("rank") || !j.contains("faces") || !j.contains("covers"))
      throw malformed_poset("expected an object with rank, faces and covers");
    int const rank = j.at("rank").get<int>();
    auto const &faces = j.at("faces");
    if (!faces.is_array())
      throw malformed_poset("faces must be an array");

    std::vector<long long> ids;
    std::vector<int> ranks;
    for (auto const &f : faces) {
      ids.push_back(f.at("id").get<long long>());
      ranks.push_back(f.at("rank").get<int>());
    }
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw malformed_poset("duplicate face id");
    bool dense = true;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      dense = dense && sorted[i] == static_cast<long long>(i);

    std::map<long long, FaceId> local;
    std::vector<int> face_ranks(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto const id = dense ? static_cast<FaceId>(ids[i]) : static_cast<FaceId>(i);
      local[ids[i]] = id;
      face_ranks[id] = ranks[i];
    }

    std::vector<std::pair<FaceId, FaceId>> rel;
    for (auto const &c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw malformed_poset("each cover must be a pair [low, high]");
      auto lo = local.find(c[0].get<long long>());
      auto hi = local.find(c[1].get<long long>());
      if (lo == local.end() || hi == local.end())
        throw malformed_poset("cover " + c.dump() + " names an unknown face");
      rel.emplace_back(lo->second, hi->second);
    }
    return IncidenceComplex(rank, std::move(face_ranks), rel);
  } catch (json::exception const &e) {
    throw malformed_poset(std::string("bad complex JSON: ") + e.what());
  }
}

inline IncidenceComplex read_complex(std::string const &text)
{
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const &e) {
    throw malformed_poset(std::string("not valid JSON: ") + e.what());
  }
  return complex_from_json(j);
}

inline std::string write_complex(IncidenceComplex const &K) { return to_json(K).dump(); }

/// {"base": id | "BOTTOM", "fixed": {"vertexId": value}}; vertex ids are face
/// ids of the base complex.
inline json to_json(PowerComplex const &P, PowerFace const &pf)
{
  json fixed = json::object();
  for (std::size_t i = 0; i < pf.fixed.size(); ++i)
    if (pf.fixed[i] != 0 || pf.is_bottom())
      fixed[std::to_string(P.base_vertices()[i])] = pf.fixed[i];
  if (pf.is_bottom())
    return json{{"base", "BOTTOM"}, {"fixed", json::object()}};
  return json{{"base", *pf.base}, {"fixed", std::move(fixed)}};
}

/// The complex format plus "power": {"n", "base", "faces": [{"id", "base", "fixed"}]}.
inline json to_json_annotated(PowerComplex const &P)
{
  auto j = to_json(P.complex());
  json faces = json::array();
  for (FaceId f = 0; f < P.complex().size(); ++f) {
    auto pf = to_json(P, P.face(f));
    faces.push_back(json{{"id", f}, {"base", pf["base"]}, {"fixed", pf["fixed"]}});
  }
  j["power"] = json{{"n", P.n()}, {"base", to_json(P.base())}, {"faces", std::move(faces)}};
  return j;
}

inline json to_json(ComplexMap const &m)
{
  return json{{"source", to_json(m.source)}, {"target", to_json(m.target)}, {"face_map", m.face_map}};
}

inline ComplexMap map_from_json(json const &j)
{
  try {
    return ComplexMap{complex_from_json(j.at("source")), complex_from_json(j.at("target")),
                      j.at("face_map").get<std::vector<FaceId>>()};
  } catch (json::exception const &e) {
    throw malformed_poset(std::string("bad map JSON: ") + e.what());
  }
}

inline json to_json(InducedCovering const &c)
{
  auto j = to_json(c.map);
  j["source_labels"] = c.source_labels;
  j["target_labels"] = c.target_labels;
  return j;
}

inline json to_json(ValidationReport const &r)
{
  json violations = json::array();
  for (auto const &v : r.violations)
    violations.push_back(
        json{{"axiom", v.axiom}, {"detail", v.detail}, {"faces", v.faces}, {"flags", v.flags}});
  return json{{"is_complex", r.is_complex},
              {"c", r.c ? json(*r.c) : json(nullptr)},
              {"violations", std::move(violations)},
              {"malformed", r.malformed}};
}

inline json to_json(MapClass const &c)
{
  json j{{"class", c.label()},
         {"homomorphism", c.homomorphism},
         {"rank_preserving", c.rank_preserving},
         {"weak_rap", c.weak_rap},
         {"rap", c.rap},
         {"surjective", c.surjective}};
  if (c.witness) {
    json w{{"property", c.witness->property}, {"faces", c.witness->faces}};
    if (c.witness->flags)
      w["flags"] = json::array({c.witness->flags->first.faces, c.witness->flags->second.faces});
    j["witness"] = std::move(w);
  }
  return j;
}

/// Flag graph in DOT; node i is flag i, edges carry label=i.
inline void write_dot(std::ostream &out, FlagGraph const &graph)
{
  out << "graph flags {\n";
  for (std::size_t f = 0; f < graph.size(); ++f) {
    out << "  f" << f << " [label=\"";
    auto const &faces = graph.flag(f).faces;
    for (std::size_t i = 0; i < faces.size(); ++i)
      out << (i ? " " : "") << faces[i];
    out << "\"];\n";
  }
  for (auto const &e : graph.edges())
    out << "  f" << e.from << " -- f" << e.to << " [label=" << e.label << "];\n";
  out << "}\n";
}

inline std::string to_dot(FlagGraph const &graph)
{
  std::ostringstream out;
  write_dot(out, graph);
  return out.str();
}

}  // namespace powercx
