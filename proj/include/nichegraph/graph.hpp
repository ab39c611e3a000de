#ifndef NICHEGRAPH_GRAPH_HPP
#define NICHEGRAPH_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nichegraph {

using Vertex = std::size_t;
/// Vertex set over 0..63; bit v is vertex v.
using VertexMask = std::uint64_t;
using VertexPair = std::pair<Vertex, Vertex>;

/// Hard cap on vertex count for bitmask adjacency rows.
inline constexpr std::size_t kMaxVertices = 64;
/// Hard cap for canonical labeling.
inline constexpr std::size_t kMaxCanonicalVertices = 10;

/// Raised when an operation's size cap is exceeded.
class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

constexpr VertexMask low_mask(std::size_t n) {
  return n >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Calls fn(v) for each vertex in the mask, in increasing order.
template <typename Fn>
void for_each_vertex(VertexMask mask, Fn&& fn) {
  while (mask != 0) {
    fn(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

/// Finite simple undirected graph on vertices 0..n-1 stored as adjacency rows.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n);
  /// Throws std::invalid_argument on loops, out-of-range endpoints or repeated edges.
  UndirectedGraph(std::size_t n, std::span<const VertexPair> edges);

  /// Rows must be symmetric, loop-free and within range.
  static UndirectedGraph from_rows(std::vector<VertexMask> rows);

  std::size_t vertex_count() const { return rows_.size(); }
  VertexMask vertices() const { return low_mask(rows_.size()); }
  VertexMask neighbors(Vertex v) const { return rows_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return (rows_[u] & bit(v)) != 0; }
  std::size_t degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(rows_[v])); }
  std::size_t edge_count() const;
  /// Edges as (i, j) with i < j, sorted lexicographically.
  std::vector<VertexPair> edges() const;
  std::span<const VertexMask> rows() const { return rows_; }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;
  friend auto operator<=>(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::vector<VertexMask> rows_;
};

/// Finite loopless digraph with out- and in-neighborhood rows kept in sync.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);
  /// Throws std::invalid_argument on loops, out-of-range endpoints or repeated arcs.
  Digraph(std::size_t n, std::span<const VertexPair> arcs);

  static Digraph from_out_rows(std::vector<VertexMask> out_rows);

  std::size_t vertex_count() const { return out_.size(); }
  VertexMask vertices() const { return low_mask(out_.size()); }
  /// N+(x)
  VertexMask out_neighbors(Vertex x) const { return out_[x]; }
  /// N-(x)
  VertexMask in_neighbors(Vertex x) const { return in_[x]; }
  bool has_arc(Vertex x, Vertex y) const { return (out_[x] & bit(y)) != 0; }
  std::size_t arc_count() const;
  std::vector<VertexPair> arcs() const;
  std::span<const VertexMask> out_rows() const { return out_; }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }
  friend auto operator<=>(const Digraph& a, const Digraph& b) { return a.out_ <=> b.out_; }

 private:
  std::vector<VertexMask> out_;
  std::vector<VertexMask> in_;
};

UndirectedGraph complete(std::size_t k);
UndirectedGraph edgeless(std::size_t k);
/// K_{m,n} with partite sets {0..m-1} and {m..m+n-1}. Rejects m == 0 or n == 0.
UndirectedGraph complete_bipartite(std::size_t m, std::size_t n);
/// Vertices of h are shifted by |V(g)|.
UndirectedGraph disjoint_union(const UndirectedGraph& g, const UndirectedGraph& h);
UndirectedGraph complement(const UndirectedGraph& g);
/// Subgraph induced on `keep`, renumbered in increasing vertex order.
UndirectedGraph induced_subgraph(const UndirectedGraph& g, VertexMask keep);

/// Connected components ordered by smallest vertex.
std::vector<VertexMask> components(const UndirectedGraph& g);
VertexMask isolated_vertices(const UndirectedGraph& g);
/// Vertices adjacent to all n-1 others.
VertexMask universal_vertices(const UndirectedGraph& g);
bool is_complete(const UndirectedGraph& g);

/// Relabels vertex v to perm[v]. perm must be a permutation of 0..n-1.
UndirectedGraph permute(const UndirectedGraph& g, std::span<const Vertex> perm);
Digraph permute(const Digraph& d, std::span<const Vertex> perm);

/// Lexicographically minimal adjacency code over degree-respecting relabelings.
/// Bits are ordered (0,1), (0,2), (1,2), (0,3), ... with the first pair most significant.
struct CanonicalForm {
  std::size_t n = 0;
  std::uint64_t code = 0;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws SizeCapError when n > kMaxCanonicalVertices.
CanonicalForm canonical_form(const UndirectedGraph& g);
/// The labeled graph whose adjacency code is `form` under the identity labeling.
UndirectedGraph from_canonical(const CanonicalForm& form);
bool are_isomorphic(const UndirectedGraph& g, const UndirectedGraph& h);

}  // namespace nichegraph

#endif  // NICHEGRAPH_GRAPH_HPP
