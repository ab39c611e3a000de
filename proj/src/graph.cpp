#include "nichegraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nichegraph {

namespace {

void check_vertex_count(std::size_t n) {
  if (n > kMaxVertices) {
    throw SizeCapError("graph has " + std::to_string(n) + " vertices; at most " +
                       std::to_string(kMaxVertices) + " are supported");
  }
}

void check_pair(std::size_t n, const VertexPair& p) {
  if (p.first >= n || p.second >= n) {
    throw std::invalid_argument("endpoint out of range");
  }
  if (p.first == p.second) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(p.first));
  }
}

void check_permutation(std::size_t n, std::span<const Vertex> perm) {
  if (perm.size() != n) throw std::invalid_argument("permutation has wrong length");
  VertexMask seen = 0;
  for (Vertex v : perm) {
    if (v >= n || (seen & bit(v)) != 0) throw std::invalid_argument("not a permutation");
    seen |= bit(v);
  }
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

UndirectedGraph::UndirectedGraph(std::size_t n) : rows_((check_vertex_count(n), n), 0) {}

UndirectedGraph::UndirectedGraph(std::size_t n, std::span<const VertexPair> edges) : UndirectedGraph(n) {
  for (const auto& e : edges) {
    check_pair(n, e);
    if (has_edge(e.first, e.second)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.first) + ", " +
                                  std::to_string(e.second) + "}");
    }
    rows_[e.first] |= bit(e.second);
    rows_[e.second] |= bit(e.first);
  }
}

UndirectedGraph UndirectedGraph::from_rows(std::vector<VertexMask> rows) {
  check_vertex_count(rows.size());
  const VertexMask all = low_mask(rows.size());
  for (Vertex v = 0; v < rows.size(); ++v) {
    if ((rows[v] & ~all) != 0) throw std::invalid_argument("adjacency row out of range");
    if ((rows[v] & bit(v)) != 0) throw std::invalid_argument("self-loop in adjacency row");
    for_each_vertex(rows[v], [&](Vertex u) {
      if ((rows[u] & bit(v)) == 0) throw std::invalid_argument("adjacency rows are not symmetric");
    });
  }
  UndirectedGraph g;
  g.rows_ = std::move(rows);
  return g;
}

std::size_t UndirectedGraph::edge_count() const {
  std::size_t total = 0;
  for (VertexMask row : rows_) total += static_cast<std::size_t>(std::popcount(row));
  return total / 2;
}

std::vector<VertexPair> UndirectedGraph::edges() const {
  std::vector<VertexPair> out;
  for (Vertex i = 0; i < rows_.size(); ++i) {
    for_each_vertex(rows_[i] & ~low_mask(i + 1), [&](Vertex j) { out.emplace_back(i, j); });
  }
  return out;
}

Digraph::Digraph(std::size_t n) : out_((check_vertex_count(n), n), 0), in_(n, 0) {}

Digraph::Digraph(std::size_t n, std::span<const VertexPair> arcs) : Digraph(n) {
  for (const auto& a : arcs) {
    check_pair(n, a);
    if (has_arc(a.first, a.second)) {
      throw std::invalid_argument("duplicate arc (" + std::to_string(a.first) + ", " +
                                  std::to_string(a.second) + ")");
    }
    out_[a.first] |= bit(a.second);
    in_[a.second] |= bit(a.first);
  }
}

Digraph Digraph::from_out_rows(std::vector<VertexMask> out_rows) {
  check_vertex_count(out_rows.size());
  const std::size_t n = out_rows.size();
  Digraph d;
  d.in_.assign(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    if ((out_rows[x] & ~low_mask(n)) != 0) throw std::invalid_argument("arc row out of range");
    if ((out_rows[x] & bit(x)) != 0) throw std::invalid_argument("self-loop in arc row");
    for_each_vertex(out_rows[x], [&](Vertex y) { d.in_[y] |= bit(x); });
  }
  d.out_ = std::move(out_rows);
  return d;
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (VertexMask row : out_) total += static_cast<std::size_t>(std::popcount(row));
  return total;
}

std::vector<VertexPair> Digraph::arcs() const {
  std::vector<VertexPair> out;
  for (Vertex x = 0; x < out_.size(); ++x) {
    for_each_vertex(out_[x], [&](Vertex y) { out.emplace_back(x, y); });
  }
  return out;
}

UndirectedGraph complete(std::size_t k) {
  check_vertex_count(k);
  std::vector<VertexMask> rows(k);
  for (Vertex v = 0; v < k; ++v) rows[v] = low_mask(k) & ~bit(v);
  return UndirectedGraph::from_rows(std::move(rows));
}

UndirectedGraph edgeless(std::size_t k) { return UndirectedGraph(k); }

UndirectedGraph complete_bipartite(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("complete_bipartite needs m, n >= 1");
  check_vertex_count(m + n);
  const VertexMask left = low_mask(m);
  const VertexMask right = low_mask(m + n) & ~left;
  std::vector<VertexMask> rows(m + n);
  for (Vertex v = 0; v < m + n; ++v) rows[v] = v < m ? right : left;
  return UndirectedGraph::from_rows(std::move(rows));
}

UndirectedGraph disjoint_union(const UndirectedGraph& g, const UndirectedGraph& h) {
  const std::size_t shift = g.vertex_count();
  check_vertex_count(shift + h.vertex_count());
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  for (VertexMask row : h.rows()) rows.push_back(row << shift);
  return UndirectedGraph::from_rows(std::move(rows));
}

UndirectedGraph complement(const UndirectedGraph& g) {
  const VertexMask all = g.vertices();
  std::vector<VertexMask> rows(g.vertex_count());
  for (Vertex v = 0; v < rows.size(); ++v) rows[v] = all & ~g.neighbors(v) & ~bit(v);
  return UndirectedGraph::from_rows(std::move(rows));
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, VertexMask keep) {
  keep &= g.vertices();
  std::vector<Vertex> index(g.vertex_count(), 0);
  std::size_t next = 0;
  for_each_vertex(keep, [&](Vertex v) { index[v] = next++; });
  std::vector<VertexMask> rows;
  rows.reserve(next);
  for_each_vertex(keep, [&](Vertex v) {
    VertexMask row = 0;
    for_each_vertex(g.neighbors(v) & keep, [&](Vertex u) { row |= bit(index[u]); });
    rows.push_back(row);
  });
  return UndirectedGraph::from_rows(std::move(rows));
}

std::vector<VertexMask> components(const UndirectedGraph& g) {
  std::vector<VertexMask> out;
  VertexMask unseen = g.vertices();
  while (unseen != 0) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask grown = 0;
      for_each_vertex(frontier, [&](Vertex v) { grown |= g.neighbors(v); });
      frontier = grown & ~comp;
      comp |= grown;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

VertexMask isolated_vertices(const UndirectedGraph& g) {
  VertexMask out = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbors(v) == 0) out |= bit(v);
  }
  return out;
}

VertexMask universal_vertices(const UndirectedGraph& g) {
  const VertexMask all = g.vertices();
  VertexMask out = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if ((g.neighbors(v) | bit(v)) == all) out |= bit(v);
  }
  return out;
}

bool is_complete(const UndirectedGraph& g) { return universal_vertices(g) == g.vertices(); }

UndirectedGraph permute(const UndirectedGraph& g, std::span<const Vertex> perm) {
  check_permutation(g.vertex_count(), perm);
  std::vector<VertexMask> rows(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    VertexMask row = 0;
    for_each_vertex(g.neighbors(v), [&](Vertex u) { row |= bit(perm[u]); });
    rows[perm[v]] = row;
  }
  return UndirectedGraph::from_rows(std::move(rows));
}

Digraph permute(const Digraph& d, std::span<const Vertex> perm) {
  check_permutation(d.vertex_count(), perm);
  std::vector<VertexMask> rows(d.vertex_count(), 0);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    VertexMask row = 0;
    for_each_vertex(d.out_neighbors(v), [&](Vertex u) { row |= bit(perm[u]); });
    rows[perm[v]] = row;
  }
  return Digraph::from_out_rows(std::move(rows));
}

namespace {

// Branch-and-bound search for the minimal code. Position i may only hold
// vertices from the degree cell assigned to i (cells sorted by descending degree).
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const UndirectedGraph& g)
      : g_(g), n_(g.vertex_count()), total_bits_(pair_count(n_)), order_(n_), cell_of_position_(n_) {
    std::vector<Vertex> by_degree(n_);
    std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (std::size_t pos = 0; pos < n_; ++pos) {
      const std::size_t deg = g.degree(by_degree[pos]);
      if (pos == 0 || deg != g.degree(by_degree[pos - 1])) cells_.push_back(0);
      cells_.back() |= bit(by_degree[pos]);
      cell_of_position_[pos] = cells_.size() - 1;
    }
  }

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    extend(0, 0, 0);
    return best_;
  }

 private:
  void extend(std::size_t pos, VertexMask used, std::uint64_t prefix) {
    if (pos == n_) {
      if (!found_ || prefix < best_) {
        best_ = prefix;
        found_ = true;
      }
      return;
    }
    const std::size_t bits_after = pair_count(pos + 1);
    for_each_vertex(cells_[cell_of_position_[pos]] & ~used, [&](Vertex v) {
      std::uint64_t code = prefix;
      for (std::size_t j = 0; j < pos; ++j) {
        code = (code << 1) | (g_.has_edge(order_[j], v) ? 1U : 0U);
      }
      if (found_ && code > (best_ >> (total_bits_ - bits_after))) return;
      order_[pos] = v;
      extend(pos + 1, used | bit(v), code);
    });
  }

  const UndirectedGraph& g_;
  std::size_t n_;
  std::size_t total_bits_;
  std::vector<Vertex> order_;
  std::vector<VertexMask> cells_;
  std::vector<std::size_t> cell_of_position_;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

}  // namespace

CanonicalForm canonical_form(const UndirectedGraph& g) {
  if (g.vertex_count() > kMaxCanonicalVertices) {
    throw SizeCapError("canonical form is limited to " + std::to_string(kMaxCanonicalVertices) +
                       " vertices, got " + std::to_string(g.vertex_count()));
  }
  return CanonicalForm{g.vertex_count(), CanonicalSearch(g).run()};
}

UndirectedGraph from_canonical(const CanonicalForm& form) {
  if (form.n > kMaxCanonicalVertices) throw SizeCapError("canonical form too large");
  std::vector<VertexPair> edges;
  std::size_t remaining = pair_count(form.n);
  for (Vertex i = 1; i < form.n; ++i) {
    for (Vertex j = 0; j < i; ++j) {
      --remaining;
      if (((form.code >> remaining) & 1U) != 0) edges.emplace_back(j, i);
    }
  }
  return UndirectedGraph(form.n, edges);
}

bool are_isomorphic(const UndirectedGraph& g, const UndirectedGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    if (g.vertex_count() > kMaxCanonicalVertices || h.vertex_count() > kMaxCanonicalVertices) {
      throw SizeCapError("isomorphism test is limited to " + std::to_string(kMaxCanonicalVertices) + " vertices");
    }
    return false;
  }
  return canonical_form(g) == canonical_form(h);
}

}  // namespace nichegraph
