#ifndef NICHEGRAPH_VERIFY_HPP
#define NICHEGRAPH_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nichegraph/graph.hpp"
#include "nichegraph/order_models.hpp"

namespace nichegraph {

inline constexpr std::size_t kMaxOrderVertices = 6;
inline constexpr std::size_t kMaxGridVertices = 4;
inline constexpr std::size_t kMaxVerifyVertices = 5;

/// A slice of the 3^(n(n-1)/2) pair-orientation space: the first `fixed_pairs`
/// pair states are pinned to the base-3 digits of `index`.
struct Shard {
  std::size_t fixed_pairs = 0;
  std::size_t index = 0;
};

/// 3^fixed_pairs shards covering the orientation space on n vertices.
std::vector<Shard> make_shards(std::size_t n, std::size_t fixed_pairs);

/// Visits every labeled strict order on 0..n-1 inside the shard (all of them by default).
/// Each unordered pair is forward, backward or incomparable; candidates are kept
/// when transitive. Throws SizeCapError unless 1 <= n <= kMaxOrderVertices.
void for_each_strict_order(std::size_t n, const std::function<void(const Digraph&)>& visit, Shard shard = {});

std::vector<Digraph> enumerate_strict_orders(std::size_t n);
std::vector<Digraph> enumerate_semiorders(std::size_t n);
std::vector<Digraph> enumerate_interval_orders(std::size_t n);

/// Every f with values in {0, 1/n, 2/n, ..., n} and delta = 1. Throws unless 1 <= n <= kMaxGridVertices.
void for_each_semiorder_grid_rep(std::size_t n, const std::function<void(const SemiorderRep&)>& visit);
/// Every J with integer endpoints 1 <= lo <= hi <= 2n. Throws unless 1 <= n <= kMaxGridVertices.
void for_each_interval_grid_rep(std::size_t n, const std::function<void(const IntervalRep&)>& visit);

std::set<Digraph> enumerate_semiorders_by_grid(std::size_t n);
std::set<Digraph> enumerate_interval_orders_by_grid(std::size_t n);

enum class Theorem {
  CompetitionGraphs = 1,
  CompetitionCommonEnemyGraphs = 2,
  NicheGraphsOfSemiorders = 3,
  NicheGraphsOfIntervalOrders = 4,
};

enum class OrderModel { Semiorder, IntervalOrder };

const char* to_string(OrderModel model);

/// Comparison for one vertex count and one order model.
struct VerificationRow {
  std::size_t n = 0;
  OrderModel model = OrderModel::Semiorder;
  std::size_t enumerated = 0;
  /// Distinct derived graphs up to isomorphism, sorted.
  std::vector<CanonicalForm> produced;
  /// Graphs on n vertices accepted by the recognizer, sorted.
  std::vector<CanonicalForm> predicted;
  /// One descriptor string per predicted class, same order as `predicted`.
  std::vector<std::string> predicted_shapes;
  std::vector<CanonicalForm> missing;
  std::vector<CanonicalForm> unexpected;

  bool passed() const { return missing.empty() && unexpected.empty(); }
};

struct VerificationReport {
  Theorem theorem = Theorem::CompetitionGraphs;
  std::size_t n_max = 0;
  std::vector<VerificationRow> rows;

  bool passed() const;
};

/// Exhaustive check for n = 1..n_max. Theorems 1 and 2 get one row per order model.
/// The orientation space is cut into shards processed by `workers` threads; the
/// report does not depend on the worker count. Throws SizeCapError when
/// n_max > kMaxVerifyVertices and std::invalid_argument when n_max or workers is 0.
VerificationReport verify_theorem(Theorem theorem, std::size_t n_max, std::size_t workers = 1);

}  // namespace nichegraph

#endif  // NICHEGRAPH_VERIFY_HPP
