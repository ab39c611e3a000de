#ifndef NICHEGRAPH_RECOGNIZERS_HPP
#define NICHEGRAPH_RECOGNIZERS_HPP

#include <optional>
#include <vector>

#include "nichegraph/descriptor.hpp"
#include "nichegraph/graph.hpp"

namespace nichegraph {

/// G = K_r u I_q. An edgeless nonempty graph reports (r = 1, q = n - 1).
std::optional<CompetitionClassDescriptor> decompose_clique_plus_isolated(const UndirectedGraph& g);

struct CompetitionVerdict {
  bool member = false;
  /// A decomposition satisfying the side condition, when member.
  std::optional<CompetitionClassDescriptor> descriptor;
};

/// K_r u I_q where r >= 2 implies q >= 1.
CompetitionVerdict classify_competition(const UndirectedGraph& g);
/// K_r u I_q where r >= 2 implies q >= 2.
CompetitionVerdict classify_cce(const UndirectedGraph& g);

struct GammaParameters {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  friend bool operator==(const GammaParameters&, const GammaParameters&) = default;
};

/// Reads G as complement(K_{m,n} u I_q) u I_r: r counts isolated vertices, q the
/// universal vertices of the rest, and the remainder must split into two cliques.
/// q == 0 is returned for plain K_m u K_n (u I_r).
std::optional<GammaParameters> decompose_gamma(const UndirectedGraph& g);

struct ClassificationVerdict {
  bool is_competition_semiorder = false;
  bool is_competition_interval = false;
  bool is_cce_semiorder = false;
  bool is_cce_interval = false;
  bool is_niche_semiorder = false;
  bool is_niche_interval = false;
  std::optional<CompetitionClassDescriptor> competition_descriptor;
  std::optional<CompetitionClassDescriptor> cce_descriptor;
  /// Every niche shape whose literal graph is isomorphic to the input.
  std::vector<NicheClassDescriptor> niche_descriptors;
};

ClassificationVerdict classify_niche(const UndirectedGraph& g);

/// Literal graph with blocks numbered X, then Z, then Y, then isolated vertices.
/// TwoCliques* shapes use X = first clique, Y = second clique and no Z block.
UndirectedGraph build_from_descriptor(const NicheClassDescriptor& d);

}  // namespace nichegraph

#endif  // NICHEGRAPH_RECOGNIZERS_HPP
