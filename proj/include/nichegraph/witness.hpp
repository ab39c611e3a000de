#ifndef NICHEGRAPH_WITNESS_HPP
#define NICHEGRAPH_WITNESS_HPP

#include "nichegraph/descriptor.hpp"
#include "nichegraph/order_models.hpp"

namespace nichegraph {

/// Semiorder whose niche graph is build_from_descriptor(d), vertex for vertex.
///   Edgeless:             f = 1 everywhere, delta = 1
///   TwoCliques(+I):       f = 1 on the first clique, 4 on the second, 2 on isolated, delta = 2
///   Gamma(m, n, q, 0):    f = 1 on X, 3 on Z, 5 on Y, delta = 1
/// Throws std::invalid_argument for Gamma with r >= 1, which no semiorder realizes.
SemiorderRep niche_witness_semiorder(const NicheClassDescriptor& d);

/// Interval order whose niche graph is build_from_descriptor(d), vertex for vertex.
///   Edgeless:  [1,2] everywhere
///   otherwise: [1,2] on X, [3,4] on Z, [5,6] on Y, [1,6] on isolated vertices
IntervalRep niche_witness_interval(const NicheClassDescriptor& d);

}  // namespace nichegraph

#endif  // NICHEGRAPH_WITNESS_HPP
