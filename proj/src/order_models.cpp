#include "nichegraph/order_models.hpp"

#include <algorithm>
#include <stdexcept>

namespace nichegraph {

SemiorderRep::SemiorderRep(std::vector<Rational> values, Rational delta)
    : values_(std::move(values)), delta_(std::move(delta)) {
  if (delta_ <= 0) throw std::invalid_argument("semiorder threshold must be positive, got " + to_string(delta_));
}

IntervalRep::IntervalRep(std::vector<ClosedInterval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t v = 0; v < intervals_.size(); ++v) {
    if (intervals_[v].lo > intervals_[v].hi) {
      throw std::invalid_argument("interval for vertex " + std::to_string(v) + " has lo > hi");
    }
  }
}

Digraph realize_semiorder(const SemiorderRep& rep) {
  const std::size_t n = rep.vertex_count();
  std::vector<VertexMask> rows(n, 0);
  for (Vertex y = 0; y < n; ++y) {
    const Rational bar = rep.value(y) + rep.delta();
    for (Vertex x = 0; x < n; ++x) {
      if (rep.value(x) > bar) rows[x] |= bit(y);
    }
  }
  return Digraph::from_out_rows(std::move(rows));
}

Digraph realize_interval(const IntervalRep& rep) {
  const std::size_t n = rep.vertex_count();
  std::vector<VertexMask> rows(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (rep.interval(x).lo > rep.interval(y).hi) rows[x] |= bit(y);
    }
  }
  return Digraph::from_out_rows(std::move(rows));
}

IntervalRep semiorder_to_interval(const SemiorderRep& rep) {
  std::vector<ClosedInterval> out;
  out.reserve(rep.vertex_count());
  for (const Rational& f : rep.values()) out.push_back({f, f + rep.delta()});
  return IntervalRep(std::move(out));
}

bool is_strict_order(const Digraph& d) {
  for (Vertex x = 0; x < d.vertex_count(); ++x) {
    const VertexMask above = d.out_neighbors(x);
    bool ok = true;
    for_each_vertex(above, [&](Vertex y) { ok = ok && (d.out_neighbors(y) & ~above) == 0; });
    if (!ok) return false;
  }
  return true;
}

namespace {

// a -> b, c -> d with a not above d and c not above b.
bool has_two_plus_two(const Digraph& d) {
  const auto arcs = d.arcs();
  for (const auto& [a, b] : arcs) {
    for (const auto& [c, e] : arcs) {
      if (!d.has_arc(a, e) && !d.has_arc(c, b)) return true;
    }
  }
  return false;
}

// a -> b -> c with some fourth vertex incomparable to all three.
bool has_three_plus_one(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<VertexMask> comparable(n);
  for (Vertex v = 0; v < n; ++v) comparable[v] = d.out_neighbors(v) | d.in_neighbors(v) | bit(v);
  for (Vertex b = 0; b < n; ++b) {
    VertexMask loners = 0;
    for (Vertex v = 0; v < n; ++v) {
      if ((comparable[v] & bit(b)) == 0) loners |= bit(v);
    }
    if (loners == 0) continue;
    bool found = false;
    for_each_vertex(d.in_neighbors(b), [&](Vertex a) {
      for_each_vertex(d.out_neighbors(b), [&](Vertex c) {
        for_each_vertex(loners, [&](Vertex v) {
          if ((comparable[v] & (bit(a) | bit(c))) == 0) found = true;
        });
      });
    });
    if (found) return true;
  }
  return false;
}

}  // namespace

bool is_interval_order(const Digraph& d) { return is_strict_order(d) && !has_two_plus_two(d); }

bool is_semiorder(const Digraph& d) { return is_interval_order(d) && !has_three_plus_one(d); }

const char* to_string(AnalysisCase c) {
  switch (c) {
    case AnalysisCase::NoArcs:
      return "no-arcs";
    case AnalysisCase::TwoCliqueCase:
      return "two-cliques";
    case AnalysisCase::GammaCase:
      return "gamma";
  }
  return "unknown";
}

namespace {

template <typename Pred>
VertexMask select(std::size_t n, Pred&& pred) {
  VertexMask out = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (pred(v)) out |= bit(v);
  }
  return out;
}

std::size_t size_of(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

}  // namespace

RepresentationAnalysis analyze_semiorder_rep(const SemiorderRep& rep) {
  const std::size_t n = rep.vertex_count();
  if (n == 0) throw std::invalid_argument("analysis needs at least one vertex");
  const auto& f = rep.values();
  const Rational& delta = rep.delta();

  RepresentationAnalysis out;
  out.r1 = *std::min_element(f.begin(), f.end());
  out.r2 = *std::max_element(f.begin(), f.end());
  const Rational low_cut = out.r1 + delta;
  const Rational high_cut = out.r2 - delta;

  if (low_cut >= out.r2) {
    out.case_id = AnalysisCase::NoArcs;
    out.parts = {low_mask(n)};
    out.predicted = Edgeless{n};
    return out;
  }
  if (out.r2 <= out.r1 + 2 * delta) {
    out.case_id = AnalysisCase::TwoCliqueCase;
    const VertexMask v1 = select(n, [&](Vertex v) { return f[v] < high_cut; });
    const VertexMask v2 = select(n, [&](Vertex v) { return high_cut <= f[v] && f[v] <= low_cut; });
    const VertexMask v3 = select(n, [&](Vertex v) { return low_cut < f[v]; });
    out.parts = {v1, v2, v3};
    out.predicted = gamma_shape(size_of(v1), size_of(v3), 0, size_of(v2));
    return out;
  }
  out.case_id = AnalysisCase::GammaCase;
  const VertexMask v1 = select(n, [&](Vertex v) { return f[v] <= low_cut; });
  const VertexMask v2 = select(n, [&](Vertex v) { return low_cut < f[v] && f[v] < high_cut; });
  const VertexMask v3 = select(n, [&](Vertex v) { return high_cut <= f[v]; });
  out.parts = {v1, v2, v3};
  out.predicted = gamma_shape(size_of(v1), size_of(v3), size_of(v2), 0);
  return out;
}

RepresentationAnalysis analyze_interval_rep(const IntervalRep& rep) {
  const std::size_t n = rep.vertex_count();
  if (n == 0) throw std::invalid_argument("analysis needs at least one vertex");
  const auto& J = rep.intervals();

  RepresentationAnalysis out;
  out.r1 = std::min_element(J.begin(), J.end(), [](const auto& a, const auto& b) { return a.hi < b.hi; })->hi;
  out.r2 = std::max_element(J.begin(), J.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; })->lo;
  const Rational& r1 = out.r1;
  const Rational& r2 = out.r2;

  if (r1 >= r2) {
    out.case_id = AnalysisCase::NoArcs;
    out.parts = {low_mask(n)};
    out.predicted = Edgeless{n};
    return out;
  }
  out.case_id = AnalysisCase::GammaCase;
  const VertexMask v1 = select(n, [&](Vertex v) { return J[v].lo <= r1 && r1 <= J[v].hi && J[v].hi < r2; });
  const VertexMask v2 = select(n, [&](Vertex v) { return r1 < J[v].lo && J[v].hi < r2; });
  const VertexMask v3 = select(n, [&](Vertex v) { return r1 < J[v].lo && J[v].lo <= r2 && r2 <= J[v].hi; });
  const VertexMask v4 = select(n, [&](Vertex v) { return J[v].lo <= r1 && r2 <= J[v].hi; });
  out.parts = {v1, v2, v3, v4};
  out.predicted = gamma_shape(size_of(v1), size_of(v3), size_of(v2), size_of(v4));
  return out;
}

}  // namespace nichegraph
