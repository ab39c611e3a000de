#ifndef NICHEGRAPH_DERIVED_GRAPHS_HPP
#define NICHEGRAPH_DERIVED_GRAPHS_HPP

#include "nichegraph/graph.hpp"

namespace nichegraph {

// All three operators are total on loopless digraphs and keep V(D).

/// Edge xy iff N+(x) and N+(y) meet.
UndirectedGraph competition(const Digraph& d);
/// Edge xy iff N+(x), N+(y) meet and N-(x), N-(y) meet.
UndirectedGraph cce(const Digraph& d);
/// Edge xy iff N+(x), N+(y) meet or N-(x), N-(y) meet.
UndirectedGraph niche(const Digraph& d);

Digraph reverse(const Digraph& d);

}  // namespace nichegraph

#endif  // NICHEGRAPH_DERIVED_GRAPHS_HPP
