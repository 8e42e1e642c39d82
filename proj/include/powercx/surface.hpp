#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "powercx/complex.hpp"
#include "powercx/validate.hpp"

namespace powercx {

/// Topology of a rank-3 complex read as a map on a closed surface.
struct SurfaceReport {
  bool is_surface = false;
  std::string diagnostic;  // why it is not a surface, when it is not
  std::int64_t vertices = 0, edges = 0, faces = 0;
  std::int64_t euler = 0;
  bool orientable = false;
  std::int64_t genus = 0;  // orientable genus, or the number of crosscaps
};

/// Requires a valid rank-3 complex with c = (2, 2, 2): every edge has two
/// vertices and lies in two 2-faces. Orientability is bipartiteness of the
/// flag graph.
inline SurfaceReport surface_of(IncidenceComplex const &K)
{
  SurfaceReport out;
  if (K.rank() != 3) {
    out.diagnostic = "rank is " + std::to_string(K.rank()) + ", a map needs rank 3";
    return out;
  }
  auto const report = validate_complex(K);
  if (!report.is_complex) {
    out.diagnostic = "not an incidence complex";
    return out;
  }
  if (*report.c != std::vector<int>{2, 2, 2}) {
    out.diagnostic = "c-vector is not (2,2,2); the 2-faces do not tile a closed surface";
    return out;
  }
  auto const f = K.f_vector();
  out.vertices = static_cast<std::int64_t>(f[1]);
  out.edges = static_cast<std::int64_t>(f[2]);
  out.faces = static_cast<std::int64_t>(f[3]);
  out.euler = out.vertices - out.edges + out.faces;

  FlagGraph graph(K);
  std::vector<int> side(graph.size(), -1);
  out.orientable = true;
  for (std::size_t s = 0; s < graph.size() && out.orientable; ++s) {
    if (side[s] >= 0)
      continue;
    side[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t q = 0; q < queue.size() && out.orientable; ++q)
      for (int i = 0; i < graph.rank(); ++i)
        for (std::size_t t : graph.neighbors(queue[q], i)) {
          if (side[t] < 0) {
            side[t] = 1 - side[queue[q]];
            queue.push_back(t);
          } else if (side[t] == side[queue[q]]) {
            out.orientable = false;
          }
        }
  }
  out.genus = out.orientable ? (2 - out.euler) / 2 : 2 - out.euler;
  out.is_surface = true;
  return out;
}

}  // namespace powercx
