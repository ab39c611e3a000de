#ifndef NICHEGRAPH_ORDER_MODELS_HPP
#define NICHEGRAPH_ORDER_MODELS_HPP

#include <cstddef>
#include <vector>

#include "nichegraph/descriptor.hpp"
#include "nichegraph/graph.hpp"
#include "nichegraph/rational.hpp"

namespace nichegraph {

/// Values f(v) for v = 0..n-1 and a positive threshold delta; arc (x, y) iff f(x) > f(y) + delta.
class SemiorderRep {
 public:
  /// Throws std::invalid_argument unless delta > 0.
  SemiorderRep(std::vector<Rational> values, Rational delta);

  std::size_t vertex_count() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(Vertex v) const { return values_[v]; }
  const Rational& delta() const { return delta_; }

  friend bool operator==(const SemiorderRep&, const SemiorderRep&) = default;

 private:
  std::vector<Rational> values_;
  Rational delta_;
};

struct ClosedInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// One closed interval per vertex; arc (x, y) iff lo(x) > hi(y).
class IntervalRep {
 public:
  /// Throws std::invalid_argument if some interval has lo > hi.
  explicit IntervalRep(std::vector<ClosedInterval> intervals);

  std::size_t vertex_count() const { return intervals_.size(); }
  const std::vector<ClosedInterval>& intervals() const { return intervals_; }
  const ClosedInterval& interval(Vertex v) const { return intervals_[v]; }

  friend bool operator==(const IntervalRep&, const IntervalRep&) = default;

 private:
  std::vector<ClosedInterval> intervals_;
};

Digraph realize_semiorder(const SemiorderRep& rep);
Digraph realize_interval(const IntervalRep& rep);

/// J(v) = [f(v), f(v) + delta].
IntervalRep semiorder_to_interval(const SemiorderRep& rep);

/// Strict order (transitive, hence asymmetric) with no induced 2+2.
bool is_interval_order(const Digraph& d);
/// Interval order with no induced 3+1.
bool is_semiorder(const Digraph& d);
/// Transitivity on a loopless digraph; rejects 2-cycles.
bool is_strict_order(const Digraph& d);

enum class AnalysisCase {
  NoArcs,         // r1 + delta >= r2 (semiorder) or r1 >= r2 (interval)
  TwoCliqueCase,  // semiorder only: r1 + delta < r2 <= r1 + 2 delta
  GammaCase,      // semiorder: r1 + 2 delta < r2; interval: r1 < r2
};

const char* to_string(AnalysisCase c);

/// The niche-graph case split applied to a concrete representation.
/// For semiorders r1 = min f, r2 = max f. For interval orders r1 = min hi, r2 = max lo.
/// parts holds V1, V2, V3 (and V4 for interval orders); NoArcs yields a single part.
struct RepresentationAnalysis {
  Rational r1;
  Rational r2;
  AnalysisCase case_id = AnalysisCase::NoArcs;
  std::vector<VertexMask> parts;
  NicheClassDescriptor predicted;
};

/// Requires at least one vertex.
RepresentationAnalysis analyze_semiorder_rep(const SemiorderRep& rep);
/// Requires at least one vertex.
RepresentationAnalysis analyze_interval_rep(const IntervalRep& rep);

}  // namespace nichegraph

#endif  // NICHEGRAPH_ORDER_MODELS_HPP
