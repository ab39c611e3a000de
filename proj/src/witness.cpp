#include "nichegraph/witness.hpp"

#include <stdexcept>
#include <variant>

namespace nichegraph {

namespace {

// Block sizes in build_from_descriptor order: X, Z, Y, isolated.
struct Blocks {
  std::size_t x = 0;
  std::size_t z = 0;
  std::size_t y = 0;
  std::size_t isolated = 0;
};

Blocks blocks_of(const NicheClassDescriptor& d) {
  if (const auto* t = std::get_if<TwoCliques>(&d)) return {t->m, 0, t->n, 0};
  if (const auto* t = std::get_if<TwoCliquesPlusIsolated>(&d)) return {t->m, 0, t->n, t->q};
  const auto& g = std::get<Gamma>(d);
  return {g.m, g.q, g.n, g.r};
}

template <typename T>
std::vector<T> fill_blocks(const Blocks& b, const T& x, const T& z, const T& y, const T& isolated) {
  std::vector<T> out;
  out.reserve(b.x + b.z + b.y + b.isolated);
  out.insert(out.end(), b.x, x);
  out.insert(out.end(), b.z, z);
  out.insert(out.end(), b.y, y);
  out.insert(out.end(), b.isolated, isolated);
  return out;
}

}  // namespace

SemiorderRep niche_witness_semiorder(const NicheClassDescriptor& d) {
  validate(d);
  if (const auto* e = std::get_if<Edgeless>(&d)) return SemiorderRep(std::vector<Rational>(e->q, Rational(1)), 1);
  if (const auto* g = std::get_if<Gamma>(&d)) {
    if (g->r != 0) {
      throw std::invalid_argument("shape " + to_string(d) + " has isolated vertices next to a joined part; "
                                  "no semiorder has it as niche graph");
    }
    return SemiorderRep(fill_blocks<Rational>(blocks_of(d), 1, 3, 5, 0), 1);
  }
  return SemiorderRep(fill_blocks<Rational>(blocks_of(d), 1, 0, 4, 2), 2);
}

IntervalRep niche_witness_interval(const NicheClassDescriptor& d) {
  validate(d);
  const ClosedInterval low{1, 2};
  if (const auto* e = std::get_if<Edgeless>(&d)) return IntervalRep(std::vector<ClosedInterval>(e->q, low));
  return IntervalRep(fill_blocks<ClosedInterval>(blocks_of(d), low, {3, 4}, {5, 6}, {1, 6}));
}

}  // namespace nichegraph
