#include "doctest.h"
#include "nichegraph/derived_graphs.hpp"
#include "nichegraph/order_models.hpp"
#include "test_support.hpp"

using namespace nichegraph;
using testing::edge_set;

namespace {

Digraph digraph(std::size_t n, std::initializer_list<VertexPair> arcs) { return Digraph(n, std::vector<VertexPair>(arcs)); }

void check_against_definition(const Digraph& d) {
  const auto oracle = testing::derived_by_definition(d.vertex_count(), testing::arc_set(d));
  CHECK(edge_set(competition(d)) == oracle.competition);
  CHECK(edge_set(cce(d)) == oracle.cce);
  CHECK(edge_set(niche(d)) == oracle.niche);
}

void check_identities(const Digraph& d) {
  const auto c = edge_set(competition(d));
  const auto c_rev = edge_set(competition(reverse(d)));
  testing::ArcSet both;
  testing::ArcSet either = c;
  for (const auto& e : c_rev) {
    either.insert(e);
    if (c.count(e)) both.insert(e);
  }
  const auto n_edges = edge_set(niche(d));
  const auto cce_edges = edge_set(cce(d));
  CHECK(n_edges == either);
  CHECK(cce_edges == both);
  CHECK(std::includes(c.begin(), c.end(), cce_edges.begin(), cce_edges.end()));
  CHECK(std::includes(n_edges.begin(), n_edges.end(), c.begin(), c.end()));
  CHECK(niche(d).vertex_count() == d.vertex_count());
  CHECK(competition(d).vertex_count() == d.vertex_count());
  CHECK(cce(d).vertex_count() == d.vertex_count());
}

}  // namespace

TEST_CASE("competition graph") {
  CHECK(competition(Digraph(4)).edge_count() == 0);
  // b = 1, c = 2 share prey a = 0
  const auto g = competition(digraph(3, {{1, 0}, {2, 0}}));
  CHECK(edge_set(g) == testing::ArcSet{{1, 2}});

  const auto semi = realize_semiorder(SemiorderRep({0, Rational(3, 2), 3}, 1));
  CHECK(edge_set(competition(semi)) == testing::ArcSet{{1, 2}});
  check_against_definition(semi);
}

TEST_CASE("competition-common-enemy graph") {
  CHECK(cce(Digraph(3)).edge_count() == 0);
  CHECK(cce(digraph(3, {{1, 0}, {2, 0}})).edge_count() == 0);
  // p = 0, q = 1, x = 2, y = 3
  const auto d = digraph(4, {{0, 2}, {0, 3}, {2, 1}, {3, 1}});
  CHECK(edge_set(cce(d)) == testing::ArcSet{{2, 3}});
  check_against_definition(d);
}

TEST_CASE("niche graph") {
  CHECK(niche(Digraph(5)).edge_count() == 0);

  // f = 1, 3, 5 on x = 0, z = 1, y = 2: P3 centred on z
  const auto g = niche(realize_semiorder(SemiorderRep({1, 3, 5}, 1)));
  CHECK(edge_set(g) == testing::ArcSet{{0, 1}, {1, 2}});

  std::vector<ClosedInterval> J{{1, 2}, {3, 4}, {5, 6}, {1, 6}};
  const auto h = niche(realize_interval(IntervalRep(J)));
  CHECK(edge_set(h) == testing::ArcSet{{0, 1}, {1, 2}});
  CHECK(isolated_vertices(h) == bit(3));
}

TEST_CASE("reverse") {
  const auto d = digraph(2, {{1, 0}});
  CHECK(reverse(d) == digraph(2, {{0, 1}}));
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = testing::random_digraph(testing::uniform(1, 8));
    CHECK(reverse(reverse(r)) == r);
    const auto c = competition(reverse(r));
    for (Vertex x = 0; x < r.vertex_count(); ++x) {
      for (Vertex y = x + 1; y < r.vertex_count(); ++y) {
        CHECK(c.has_edge(x, y) == ((r.in_neighbors(x) & r.in_neighbors(y)) != 0));
      }
    }
  }
}

TEST_CASE("operators match the neighborhood definitions") {
  for (std::size_t n = 1; n <= 3; ++n) testing::for_each_digraph(n, check_against_definition);
  for (int trial = 0; trial < 300; ++trial) check_against_definition(testing::random_digraph(testing::uniform(1, 7)));
}

TEST_CASE("operator identities: exhaustive n <= 4, random n <= 7") {
  for (std::size_t n = 1; n <= 4; ++n) testing::for_each_digraph(n, check_identities);
  for (int trial = 0; trial < 1000; ++trial) {
    check_identities(testing::random_digraph(testing::uniform(1, 7), 0.1 + 0.05 * (trial % 10)));
  }
}

TEST_CASE("operators are equivariant under relabeling") {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform(1, 8);
    const auto d = testing::random_digraph(n);
    const auto perm = testing::random_permutation(n);
    const auto moved = permute(d, perm);
    CHECK(niche(moved) == permute(niche(d), perm));
    CHECK(competition(moved) == permute(competition(d), perm));
    CHECK(cce(moved) == permute(cce(d), perm));
  }
}
