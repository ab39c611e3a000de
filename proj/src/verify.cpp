#include "nichegraph/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <thread>

#include "nichegraph/derived_graphs.hpp"
#include "nichegraph/recognizers.hpp"

namespace nichegraph {

namespace {

constexpr std::size_t kShardPrefix = 3;

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t power_of_three(std::size_t k) {
  std::size_t out = 1;
  while (k-- > 0) out *= 3;
  return out;
}

void check_range(std::size_t n, std::size_t cap, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " needs n >= 1");
  if (n > cap) {
    throw SizeCapError(std::string(what) + " is capped at n = " + std::to_string(cap) + ", got " + std::to_string(n));
  }
}

using Rows = std::array<VertexMask, kMaxOrderVertices>;

bool transitive(const Rows& out, std::size_t n) {
  for (Vertex x = 0; x < n; ++x) {
    const VertexMask above = out[x];
    VertexMask reach = 0;
    for_each_vertex(above, [&](Vertex y) { reach |= out[y]; });
    if ((reach & ~above) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Shard> make_shards(std::size_t n, std::size_t fixed_pairs) {
  fixed_pairs = std::min(fixed_pairs, pair_count(n));
  std::vector<Shard> out;
  for (std::size_t i = 0; i < power_of_three(fixed_pairs); ++i) out.push_back({fixed_pairs, i});
  return out;
}

void for_each_strict_order(std::size_t n, const std::function<void(const Digraph&)>& visit, Shard shard) {
  check_range(n, kMaxOrderVertices, "strict order enumeration");
  std::vector<VertexPair> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const std::size_t total = pairs.size();
  if (shard.fixed_pairs > total || shard.index >= power_of_three(shard.fixed_pairs)) {
    throw std::invalid_argument("shard out of range");
  }

  // 0: incomparable, 1: i -> j, 2: j -> i
  std::vector<std::uint8_t> state(total, 0);
  for (std::size_t k = 0, rest = shard.index; k < shard.fixed_pairs; ++k, rest /= 3) {
    state[k] = static_cast<std::uint8_t>(rest % 3);
  }
  const std::size_t first_free = shard.fixed_pairs;

  while (true) {
    Rows rows{};
    for (std::size_t k = 0; k < total; ++k) {
      const auto [i, j] = pairs[k];
      if (state[k] == 1) rows[i] |= bit(j);
      if (state[k] == 2) rows[j] |= bit(i);
    }
    if (transitive(rows, n)) visit(Digraph::from_out_rows({rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n)}));

    std::size_t k = first_free;
    while (k < total && state[k] == 2) state[k++] = 0;
    if (k == total) break;
    ++state[k];
  }
}

std::vector<Digraph> enumerate_strict_orders(std::size_t n) {
  std::vector<Digraph> out;
  for_each_strict_order(n, [&](const Digraph& d) { out.push_back(d); });
  return out;
}

std::vector<Digraph> enumerate_semiorders(std::size_t n) {
  std::vector<Digraph> out;
  for_each_strict_order(n, [&](const Digraph& d) {
    if (is_semiorder(d)) out.push_back(d);
  });
  return out;
}

std::vector<Digraph> enumerate_interval_orders(std::size_t n) {
  std::vector<Digraph> out;
  for_each_strict_order(n, [&](const Digraph& d) {
    if (is_interval_order(d)) out.push_back(d);
  });
  return out;
}

namespace {

// Calls visit(choice) for every vector in {0..options-1}^n.
template <typename Fn>
void odometer(std::size_t n, std::size_t options, Fn&& visit) {
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    visit(choice);
    std::size_t k = 0;
    while (k < n && choice[k] + 1 == options) choice[k++] = 0;
    if (k == n) return;
    ++choice[k];
  }
}

}  // namespace

void for_each_semiorder_grid_rep(std::size_t n, const std::function<void(const SemiorderRep&)>& visit) {
  check_range(n, kMaxGridVertices, "semiorder grid enumeration");
  // Step 1/n on [0, n]. A half-integer step misses the 4-chain at n = 4, since
  // consecutive values must differ by more than delta.
  std::vector<Rational> grid;
  for (std::size_t k = 0; k <= n * n; ++k) grid.emplace_back(static_cast<long>(k), static_cast<long>(n));
  odometer(n, grid.size(), [&](const std::vector<std::size_t>& choice) {
    std::vector<Rational> f;
    f.reserve(n);
    for (std::size_t c : choice) f.push_back(grid[c]);
    visit(SemiorderRep(std::move(f), 1));
  });
}

void for_each_interval_grid_rep(std::size_t n, const std::function<void(const IntervalRep&)>& visit) {
  check_range(n, kMaxGridVertices, "interval grid enumeration");
  std::vector<ClosedInterval> grid;
  for (long lo = 1; lo <= static_cast<long>(2 * n); ++lo) {
    for (long hi = lo; hi <= static_cast<long>(2 * n); ++hi) grid.push_back({lo, hi});
  }
  odometer(n, grid.size(), [&](const std::vector<std::size_t>& choice) {
    std::vector<ClosedInterval> J;
    J.reserve(n);
    for (std::size_t c : choice) J.push_back(grid[c]);
    visit(IntervalRep(std::move(J)));
  });
}

std::set<Digraph> enumerate_semiorders_by_grid(std::size_t n) {
  std::set<Digraph> out;
  for_each_semiorder_grid_rep(n, [&](const SemiorderRep& rep) { out.insert(realize_semiorder(rep)); });
  return out;
}

std::set<Digraph> enumerate_interval_orders_by_grid(std::size_t n) {
  std::set<Digraph> out;
  for_each_interval_grid_rep(n, [&](const IntervalRep& rep) { out.insert(realize_interval(rep)); });
  return out;
}

const char* to_string(OrderModel model) {
  return model == OrderModel::Semiorder ? "semiorder" : "interval-order";
}

bool VerificationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.passed(); });
}

namespace {

struct Tally {
  std::size_t enumerated = 0;
  std::map<CanonicalForm, std::size_t> produced;

  void merge(const Tally& other) {
    enumerated += other.enumerated;
    for (const auto& [form, count] : other.produced) produced[form] += count;
  }
};

UndirectedGraph derive(Theorem theorem, const Digraph& d) {
  switch (theorem) {
    case Theorem::CompetitionGraphs:
      return competition(d);
    case Theorem::CompetitionCommonEnemyGraphs:
      return cce(d);
    default:
      return niche(d);
  }
}

bool accepts(Theorem theorem, OrderModel model, const ClassificationVerdict& v) {
  const bool semi = model == OrderModel::Semiorder;
  switch (theorem) {
    case Theorem::CompetitionGraphs:
      return semi ? v.is_competition_semiorder : v.is_competition_interval;
    case Theorem::CompetitionCommonEnemyGraphs:
      return semi ? v.is_cce_semiorder : v.is_cce_interval;
    case Theorem::NicheGraphsOfSemiorders:
      return v.is_niche_semiorder;
    case Theorem::NicheGraphsOfIntervalOrders:
      return v.is_niche_interval;
  }
  return false;
}

std::string shape_of(Theorem theorem, OrderModel model, const ClassificationVerdict& v) {
  switch (theorem) {
    case Theorem::CompetitionGraphs:
      return to_string(*v.competition_descriptor);
    case Theorem::CompetitionCommonEnemyGraphs:
      return to_string(*v.cce_descriptor);
    default:
      for (const auto& d : v.niche_descriptors) {
        if (model == OrderModel::IntervalOrder || is_semiorder_shape(d)) return to_string(d);
      }
      return {};
  }
}

Tally run_shards(Theorem theorem, OrderModel model, std::size_t n, const std::vector<Shard>& shards,
                 std::size_t worker, std::size_t workers) {
  Tally tally;
  for (std::size_t s = worker; s < shards.size(); s += workers) {
    for_each_strict_order(
        n,
        [&](const Digraph& d) {
          const bool member = model == OrderModel::Semiorder ? is_semiorder(d) : is_interval_order(d);
          if (!member) return;
          ++tally.enumerated;
          ++tally.produced[canonical_form(derive(theorem, d))];
        },
        shards[s]);
  }
  return tally;
}

Tally enumerate_derived(Theorem theorem, OrderModel model, std::size_t n, std::size_t workers) {
  const auto shards = make_shards(n, kShardPrefix);
  workers = std::min(workers, shards.size());
  if (workers <= 1) return run_shards(theorem, model, n, shards, 0, 1);

  std::vector<Tally> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] { partial[w] = run_shards(theorem, model, n, shards, w, workers); });
  }
  for (auto& t : threads) t.join();
  Tally total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

// All n-vertex graphs up to isomorphism.
std::vector<CanonicalForm> all_graph_classes(std::size_t n) {
  std::vector<VertexPair> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::set<CanonicalForm> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<VertexPair> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (((mask >> k) & 1U) != 0) edges.push_back(pairs[k]);
    }
    classes.insert(canonical_form(UndirectedGraph(n, edges)));
  }
  return {classes.begin(), classes.end()};
}

}  // namespace

VerificationReport verify_theorem(Theorem theorem, std::size_t n_max, std::size_t workers) {
  check_range(n_max, kMaxVerifyVertices, "theorem verification");
  if (workers == 0) throw std::invalid_argument("need at least one worker");

  std::vector<OrderModel> models;
  switch (theorem) {
    case Theorem::CompetitionGraphs:
    case Theorem::CompetitionCommonEnemyGraphs:
      models = {OrderModel::Semiorder, OrderModel::IntervalOrder};
      break;
    case Theorem::NicheGraphsOfSemiorders:
      models = {OrderModel::Semiorder};
      break;
    case Theorem::NicheGraphsOfIntervalOrders:
      models = {OrderModel::IntervalOrder};
      break;
    default:
      throw std::invalid_argument("unknown theorem");
  }

  VerificationReport report;
  report.theorem = theorem;
  report.n_max = n_max;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto classes = all_graph_classes(n);
    for (OrderModel model : models) {
      VerificationRow row;
      row.n = n;
      row.model = model;
      for (const auto& form : classes) {
        const auto verdict = classify_niche(from_canonical(form));
        if (accepts(theorem, model, verdict)) {
          row.predicted.push_back(form);
          row.predicted_shapes.push_back(shape_of(theorem, model, verdict));
        }
      }
      const Tally tally = enumerate_derived(theorem, model, n, workers);
      row.enumerated = tally.enumerated;
      for (const auto& entry : tally.produced) row.produced.push_back(entry.first);
      std::set_difference(row.predicted.begin(), row.predicted.end(), row.produced.begin(), row.produced.end(),
                          std::back_inserter(row.missing));
      std::set_difference(row.produced.begin(), row.produced.end(), row.predicted.begin(), row.predicted.end(),
                          std::back_inserter(row.unexpected));
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace nichegraph
