#include "doctest.h"
#include "nichegraph/derived_graphs.hpp"
#include "nichegraph/recognizers.hpp"
#include "nichegraph/witness.hpp"
#include "test_support.hpp"

using namespace nichegraph;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<ClosedInterval> spans(std::initializer_list<std::pair<long, long>> list) {
  std::vector<ClosedInterval> out;
  for (const auto& [lo, hi] : list) out.push_back({lo, hi});
  return out;
}

}  // namespace

TEST_CASE("semiorder witnesses use the fixed constants") {
  const auto edgeless_rep = niche_witness_semiorder(Edgeless{3});
  CHECK(edgeless_rep.values() == rationals({1, 1, 1}));
  CHECK(edgeless_rep.delta() == 1);
  CHECK(realize_semiorder(edgeless_rep).arc_count() == 0);

  const auto cliques = niche_witness_semiorder(TwoCliquesPlusIsolated{2, 3, 1});
  CHECK(cliques.values() == rationals({1, 1, 4, 4, 4, 2}));
  CHECK(cliques.delta() == 2);

  const auto p3 = niche_witness_semiorder(Gamma{1, 1, 1, 0});
  CHECK(p3.values() == rationals({1, 3, 5}));
  CHECK(p3.delta() == 1);
  CHECK(niche(realize_semiorder(p3)) == testing::path3());
}

TEST_CASE("interval witnesses use the fixed constants") {
  const auto edgeless_rep = niche_witness_interval(Edgeless{5});
  CHECK(edgeless_rep.intervals() == spans({{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}));

  const auto gamma = niche_witness_interval(Gamma{1, 1, 1, 1});
  CHECK(gamma.intervals() == spans({{1, 2}, {3, 4}, {5, 6}, {1, 6}}));
  CHECK(niche(realize_interval(gamma)) == disjoint_union(testing::path3(), edgeless(1)));

  const auto cliques = niche_witness_interval(TwoCliques{2, 2});
  CHECK(cliques.intervals() == spans({{1, 2}, {1, 2}, {5, 6}, {5, 6}}));
  CHECK(niche(realize_interval(cliques)) == disjoint_union(complete(2), complete(2)));
}

TEST_CASE("semiorder witness refuses exactly the interval-only shapes") {
  for (const auto& d : testing::all_descriptors(8)) {
    const auto* g = std::get_if<Gamma>(&d);
    if (g != nullptr && g->r >= 1) {
      CHECK_THROWS_AS(niche_witness_semiorder(d), std::invalid_argument);
    } else {
      CHECK_NOTHROW(niche_witness_semiorder(d));
    }
    CHECK_NOTHROW(niche_witness_interval(d));
  }
  CHECK_THROWS_AS(niche_witness_interval(Gamma{3, 1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(niche_witness_semiorder(Edgeless{0}), std::invalid_argument);
}

TEST_CASE("witness round trips with labeled equality") {
  std::size_t semiorder_checked = 0;
  for (const auto& d : testing::all_descriptors(8)) {
    const auto target = build_from_descriptor(d);
    const auto interval_rep = niche_witness_interval(d);
    CHECK(interval_rep.vertex_count() == vertex_count(d));
    for (const auto& iv : interval_rep.intervals()) CHECK(iv.lo <= iv.hi);
    CHECK(niche(realize_interval(interval_rep)) == target);

    if (!is_semiorder_shape(d)) continue;
    const auto semi = niche_witness_semiorder(d);
    CHECK(semi.delta() > 0);
    CHECK(niche(realize_semiorder(semi)) == target);
    ++semiorder_checked;
  }
  CHECK(semiorder_checked > 50);
}
