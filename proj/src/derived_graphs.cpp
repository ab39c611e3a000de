#include "nichegraph/derived_graphs.hpp"

#include <vector>

namespace nichegraph {

namespace {

template <typename Adjacent>
UndirectedGraph pairwise(const Digraph& d, Adjacent&& adjacent) {
  const std::size_t n = d.vertex_count();
  std::vector<VertexMask> rows(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (adjacent(x, y)) {
        rows[x] |= bit(y);
        rows[y] |= bit(x);
      }
    }
  }
  return UndirectedGraph::from_rows(std::move(rows));
}

}  // namespace

UndirectedGraph competition(const Digraph& d) {
  return pairwise(d, [&](Vertex x, Vertex y) { return (d.out_neighbors(x) & d.out_neighbors(y)) != 0; });
}

UndirectedGraph cce(const Digraph& d) {
  return pairwise(d, [&](Vertex x, Vertex y) {
    return (d.out_neighbors(x) & d.out_neighbors(y)) != 0 && (d.in_neighbors(x) & d.in_neighbors(y)) != 0;
  });
}

UndirectedGraph niche(const Digraph& d) {
  return pairwise(d, [&](Vertex x, Vertex y) {
    return (d.out_neighbors(x) & d.out_neighbors(y)) != 0 || (d.in_neighbors(x) & d.in_neighbors(y)) != 0;
  });
}

Digraph reverse(const Digraph& d) {
  std::vector<VertexMask> rows(d.vertex_count());
  for (Vertex v = 0; v < rows.size(); ++v) rows[v] = d.in_neighbors(v);
  return Digraph::from_out_rows(std::move(rows));
}

}  // namespace nichegraph
