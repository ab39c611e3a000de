#include "doctest.h"
#include "nichegraph/derived_graphs.hpp"
#include "nichegraph/documents.hpp"
#include "nichegraph/verify.hpp"
#include "test_support.hpp"

#include <algorithm>

using namespace nichegraph;

namespace {

std::set<Digraph> as_set(const std::vector<Digraph>& v) { return {v.begin(), v.end()}; }

bool contains(const std::vector<CanonicalForm>& forms, const UndirectedGraph& g) {
  return std::binary_search(forms.begin(), forms.end(), canonical_form(g));
}

const VerificationRow& row_for(const VerificationReport& report, std::size_t n, OrderModel model) {
  for (const auto& row : report.rows) {
    if (row.n == n && row.model == model) return row;
  }
  throw std::logic_error("row not found");
}

}  // namespace

TEST_CASE("strict orders agree with the definition on every relation") {
  const std::size_t expected[] = {1, 3, 19, 219};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<Digraph> by_definition;
    testing::for_each_digraph(n, [&](const Digraph& d) {
      if (testing::is_strict_order_by_definition(n, testing::arc_set(d))) by_definition.insert(d);
    });
    const auto streamed = enumerate_strict_orders(n);
    CHECK(streamed.size() == expected[n - 1]);
    CHECK(as_set(streamed).size() == streamed.size());
    CHECK(as_set(streamed) == by_definition);
  }
}

TEST_CASE("labeled order counts") {
  const std::size_t semi[] = {1, 3, 19, 183, 2371};
  const std::size_t interval[] = {1, 3, 19, 207, 3451};
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(enumerate_semiorders(n).size() == semi[n - 1]);
    CHECK(enumerate_interval_orders(n).size() == interval[n - 1]);
  }
  CHECK(enumerate_strict_orders(2).size() == 3);
}

TEST_CASE("3+1 separates the two order classes at n = 4") {
  // 0 > 1 > 2 chain, 3 incomparable to all.
  const Digraph three_plus_one(4, std::vector<VertexPair>{{0, 1}, {1, 2}, {0, 2}});
  const auto intervals = as_set(enumerate_interval_orders(4));
  const auto semis = as_set(enumerate_semiorders(4));
  CHECK(intervals.count(three_plus_one) == 1);
  CHECK(semis.count(three_plus_one) == 0);
}

TEST_CASE("semiorders are interval orders, n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto intervals = as_set(enumerate_interval_orders(n));
    for (const auto& d : enumerate_semiorders(n)) {
      if (intervals.count(d) == 0) FAIL("semiorder missing from interval orders at n = " << n);
    }
  }
}

TEST_CASE("grid enumeration matches pattern enumeration") {
  CHECK(enumerate_semiorders_by_grid(2).size() == 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(enumerate_semiorders_by_grid(n) == as_set(enumerate_semiorders(n)));
    CHECK(enumerate_interval_orders_by_grid(n) == as_set(enumerate_interval_orders(n)));
  }
  std::size_t reps = 0;
  for_each_semiorder_grid_rep(2, [&](const SemiorderRep& rep) {
    CHECK(rep.delta() == 1);
    ++reps;
  });
  CHECK(reps == 25);
}

TEST_CASE("shards partition the orientation space") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto full = enumerate_strict_orders(n);
    std::vector<Digraph> pieces;
    for (const auto& shard : make_shards(n, 3)) {
      for_each_strict_order(n, [&](const Digraph& d) { pieces.push_back(d); }, shard);
    }
    CHECK(pieces.size() == full.size());
    CHECK(as_set(pieces) == as_set(full));
  }
  CHECK(make_shards(4, 3).size() == 27);
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(enumerate_strict_orders(7), SizeCapError);
  CHECK_THROWS_AS(for_each_semiorder_grid_rep(5, [](const SemiorderRep&) {}), SizeCapError);
  CHECK_THROWS_AS(verify_theorem(Theorem::NicheGraphsOfSemiorders, 6), SizeCapError);
  CHECK_THROWS_AS(verify_theorem(Theorem::NicheGraphsOfSemiorders, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem(Theorem::NicheGraphsOfSemiorders, 3, 0), std::invalid_argument);
}

TEST_CASE("produced sets contain the expected small graphs") {
  const auto p3i1 = disjoint_union(testing::path3(), edgeless(1));

  const auto t3 = verify_theorem(Theorem::NicheGraphsOfSemiorders, 4);
  CHECK(t3.passed());
  CHECK(contains(row_for(t3, 3, OrderModel::Semiorder).produced, testing::path3()));
  CHECK_FALSE(contains(row_for(t3, 4, OrderModel::Semiorder).produced, p3i1));

  const auto t4 = verify_theorem(Theorem::NicheGraphsOfIntervalOrders, 4);
  CHECK(t4.passed());
  CHECK(contains(row_for(t4, 4, OrderModel::IntervalOrder).produced, p3i1));

  const auto t1 = verify_theorem(Theorem::CompetitionGraphs, 3);
  CHECK(t1.passed());
  const auto& row = row_for(t1, 3, OrderModel::Semiorder);
  CHECK(contains(row.produced, disjoint_union(complete(2), edgeless(1))));
  CHECK_FALSE(contains(row.produced, complete(3)));
  CHECK(row.predicted_shapes.size() == row.predicted.size());
}

TEST_CASE("produced niche graphs match a direct computation") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<CanonicalForm> direct;
    for (const auto& d : enumerate_interval_orders(n)) direct.insert(canonical_form(niche(d)));
    const auto report = verify_theorem(Theorem::NicheGraphsOfIntervalOrders, n);
    const auto& produced = row_for(report, n, OrderModel::IntervalOrder).produced;
    CHECK(std::set<CanonicalForm>(produced.begin(), produced.end()) == direct);
  }
}

TEST_CASE("reports do not depend on the worker count") {
  for (int t = 1; t <= 4; ++t) {
    const auto theorem = static_cast<Theorem>(t);
    const auto one = serialize_report(verify_theorem(theorem, 5, 1));
    const auto four = serialize_report(verify_theorem(theorem, 5, 4));
    CHECK(one == four);
  }
}
