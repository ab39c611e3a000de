#include "nichegraph/recognizers.hpp"

#include <algorithm>
#include <variant>

namespace nichegraph {

namespace {

std::size_t size_of(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

bool is_clique(const UndirectedGraph& g, VertexMask set) {
  bool ok = true;
  for_each_vertex(set, [&](Vertex v) { ok = ok && (set & ~bit(v) & ~g.neighbors(v)) == 0; });
  return ok;
}

// Every (r, q) with G = K_r u I_q; K_0 and K_1 both count when G is edgeless.
std::vector<CompetitionClassDescriptor> clique_plus_isolated_decompositions(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  if (g.edge_count() == 0) return {{1, n - 1}, {0, n}};
  if (auto d = decompose_clique_plus_isolated(g)) return {*d};
  return {};
}

CompetitionVerdict classify_clique_plus_isolated(const UndirectedGraph& g, std::size_t min_isolated) {
  CompetitionVerdict out;
  for (const auto& d : clique_plus_isolated_decompositions(g)) {
    if (d.r < 2 || d.q >= min_isolated) {
      out.member = true;
      out.descriptor = d;
      break;
    }
  }
  return out;
}

// Blocks X = [0, m), Z = [m, m+q), Y = [m+q, m+q+n), then r isolated vertices.
UndirectedGraph gamma_graph(std::size_t m, std::size_t n, std::size_t q, std::size_t r) {
  const std::size_t core = m + q + n;
  const VertexMask x_block = low_mask(m);
  const VertexMask y_block = low_mask(core) & ~low_mask(m + q);
  std::vector<VertexMask> rows(core + r, 0);
  for (Vertex v = 0; v < core; ++v) {
    VertexMask row = low_mask(core) & ~bit(v);
    if ((x_block & bit(v)) != 0) row &= ~y_block;
    if ((y_block & bit(v)) != 0) row &= ~x_block;
    rows[v] = row;
  }
  return UndirectedGraph::from_rows(std::move(rows));
}

}  // namespace

std::optional<CompetitionClassDescriptor> decompose_clique_plus_isolated(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::nullopt;
  VertexMask big = 0;
  std::size_t big_count = 0;
  for (VertexMask comp : components(g)) {
    if (size_of(comp) >= 2) {
      big = comp;
      ++big_count;
    }
  }
  if (big_count == 0) return CompetitionClassDescriptor{1, n - 1};
  if (big_count > 1 || !is_clique(g, big)) return std::nullopt;
  return CompetitionClassDescriptor{size_of(big), n - size_of(big)};
}

CompetitionVerdict classify_competition(const UndirectedGraph& g) { return classify_clique_plus_isolated(g, 1); }

CompetitionVerdict classify_cce(const UndirectedGraph& g) { return classify_clique_plus_isolated(g, 2); }

std::optional<GammaParameters> decompose_gamma(const UndirectedGraph& g) {
  const VertexMask isolated = isolated_vertices(g);
  const VertexMask rest = g.vertices() & ~isolated;
  if (rest == 0) return std::nullopt;

  VertexMask universal = 0;
  for_each_vertex(rest, [&](Vertex v) {
    if ((rest & ~bit(v) & ~g.neighbors(v)) == 0) universal |= bit(v);
  });
  const VertexMask sides = rest & ~universal;
  const auto parts = components(induced_subgraph(g, sides));
  if (parts.size() != 2) return std::nullopt;

  // Map component masks (in induced numbering) back to original vertices.
  std::vector<Vertex> original;
  for_each_vertex(sides, [&](Vertex v) { original.push_back(v); });
  std::vector<VertexMask> blocks;
  for (VertexMask local : parts) {
    VertexMask block = 0;
    for_each_vertex(local, [&](Vertex i) { block |= bit(original[i]); });
    if (!is_clique(g, block)) return std::nullopt;
    blocks.push_back(block);
  }
  if (size_of(blocks[0]) > size_of(blocks[1])) std::swap(blocks[0], blocks[1]);

  GammaParameters out{size_of(blocks[0]), size_of(blocks[1]), size_of(universal), size_of(isolated)};

  // Relabel into the X, Z, Y, isolated block order and compare with the literal graph.
  std::vector<Vertex> perm(g.vertex_count());
  Vertex next = 0;
  for (VertexMask block : {blocks[0], universal, blocks[1], isolated}) {
    for_each_vertex(block, [&](Vertex v) { perm[v] = next++; });
  }
  if (permute(g, perm) != gamma_graph(out.m, out.n, out.q, out.r)) return std::nullopt;
  return out;
}

ClassificationVerdict classify_niche(const UndirectedGraph& g) {
  ClassificationVerdict out;
  const auto competition = classify_competition(g);
  const auto cce = classify_cce(g);
  // Both order models share one characterization for each of these two operators.
  out.is_competition_semiorder = out.is_competition_interval = competition.member;
  out.is_cce_semiorder = out.is_cce_interval = cce.member;
  out.competition_descriptor = competition.descriptor;
  out.cce_descriptor = cce.descriptor;

  const std::size_t n = g.vertex_count();
  auto& shapes = out.niche_descriptors;
  if (n >= 1 && g.edge_count() == 0) {
    shapes.push_back(Edgeless{n});
    if (n >= 2) shapes.push_back(gamma_shape(1, 1, 0, n - 2));
  } else if (n >= 1) {
    if (auto p = decompose_gamma(g)) shapes.push_back(gamma_shape(p->m, p->n, p->q, p->r));
    // K_1 u K_k u I_r: the K_1 vertex is itself isolated.
    const VertexMask isolated = isolated_vertices(g);
    const VertexMask rest = g.vertices() & ~isolated;
    if (isolated != 0 && size_of(rest) >= 2 && is_clique(g, rest)) {
      shapes.push_back(gamma_shape(1, size_of(rest), 0, size_of(isolated) - 1));
    }
  }
  out.is_niche_interval = !shapes.empty();
  out.is_niche_semiorder = std::any_of(shapes.begin(), shapes.end(), is_semiorder_shape);
  return out;
}

UndirectedGraph build_from_descriptor(const NicheClassDescriptor& d) {
  validate(d);
  if (const auto* e = std::get_if<Edgeless>(&d)) return edgeless(e->q);
  if (const auto* t = std::get_if<TwoCliques>(&d)) return gamma_graph(t->m, t->n, 0, 0);
  if (const auto* t = std::get_if<TwoCliquesPlusIsolated>(&d)) return gamma_graph(t->m, t->n, 0, t->q);
  const auto& gm = std::get<Gamma>(d);
  return gamma_graph(gm.m, gm.n, gm.q, gm.r);
}

}  // namespace nichegraph
