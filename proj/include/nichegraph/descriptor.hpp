#ifndef NICHEGRAPH_DESCRIPTOR_HPP
#define NICHEGRAPH_DESCRIPTOR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

namespace nichegraph {

/// I_q, q >= 1.
struct Edgeless {
  std::size_t q = 0;
  friend bool operator==(const Edgeless&, const Edgeless&) = default;
};

/// K_m u K_n, 1 <= m <= n.
struct TwoCliques {
  std::size_t m = 0;
  std::size_t n = 0;
  friend bool operator==(const TwoCliques&, const TwoCliques&) = default;
};

/// K_m u K_n u I_q, 1 <= m <= n, q >= 1.
struct TwoCliquesPlusIsolated {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t q = 0;
  friend bool operator==(const TwoCliquesPlusIsolated&, const TwoCliquesPlusIsolated&) = default;
};

/// complement(K_{m,n} u I_q) u I_r, 1 <= m <= n, q >= 1, r >= 0.
/// Equivalently the join of K_q with K_m u K_n, plus r isolated vertices.
struct Gamma {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t q = 0;
  std::size_t r = 0;
  friend bool operator==(const Gamma&, const Gamma&) = default;
};

using NicheClassDescriptor = std::variant<Edgeless, TwoCliques, TwoCliquesPlusIsolated, Gamma>;

/// Throws std::invalid_argument if a parameter invariant is violated.
void validate(const NicheClassDescriptor& d);

std::size_t vertex_count(const NicheClassDescriptor& d);

/// Descriptor for complement(K_{m,n} u I_q) u I_r with m, n >= 1 and q, r >= 0,
/// collapsed to TwoCliques / TwoCliquesPlusIsolated when q == 0 and with m, n sorted.
NicheClassDescriptor gamma_shape(std::size_t m, std::size_t n, std::size_t q, std::size_t r);

/// True for the shapes realizable by semiorders: everything except Gamma with r >= 1.
bool is_semiorder_shape(const NicheClassDescriptor& d);

/// "edgeless:q", "two-cliques:m,n", "two-cliques-isolated:m,n,q", "gamma:m,n,q,r".
std::string to_string(const NicheClassDescriptor& d);

/// Inverse of to_string. m and n may be given in either order; "gamma" with q = 0
/// collapses via gamma_shape. Throws std::invalid_argument on malformed or invalid input.
NicheClassDescriptor parse_descriptor(std::string_view text);

/// K_r u I_q for the competition and competition-common-enemy characterizations.
struct CompetitionClassDescriptor {
  std::size_t r = 0;
  std::size_t q = 0;
  friend bool operator==(const CompetitionClassDescriptor&, const CompetitionClassDescriptor&) = default;
};

/// "clique-isolated:r,q"
std::string to_string(const CompetitionClassDescriptor& d);

}  // namespace nichegraph

#endif  // NICHEGRAPH_DESCRIPTOR_HPP
