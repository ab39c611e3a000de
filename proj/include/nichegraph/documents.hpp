#ifndef NICHEGRAPH_DOCUMENTS_HPP
#define NICHEGRAPH_DOCUMENTS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nichegraph/graph.hpp"
#include "nichegraph/order_models.hpp"
#include "nichegraph/recognizers.hpp"
#include "nichegraph/verify.hpp"

namespace nichegraph {

enum class DocumentErrorCode {
  Syntax,             // not parseable JSON
  Schema,             // missing field, wrong type, unknown kind
  EmptyName,
  DuplicateName,
  DanglingReference,  // pair names an undeclared vertex
  Loop,
  DuplicatePair,
  BadRational,
  InvalidRepresentation,  // delta <= 0 or lo > hi
  TooLarge,               // more vertices than the bitmask rows hold
};

const char* to_string(DocumentErrorCode code);

/// Parse failure with a stable code and the offending location ("line 3, column 7" or a JSON pointer).
class DocumentError : public std::runtime_error {
 public:
  DocumentError(DocumentErrorCode code, std::string context, const std::string& message);

  DocumentErrorCode code() const { return code_; }
  const std::string& context() const { return context_; }

 private:
  DocumentErrorCode code_;
  std::string context_;
};

enum class GraphKind { Graph, Digraph };

/// Named graph or digraph. Canonical form: vertices sorted, each undirected
/// pair stored with its smaller name first, pairs sorted.
struct NamedGraphDocument {
  GraphKind kind = GraphKind::Graph;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> pairs;

  friend bool operator==(const NamedGraphDocument&, const NamedGraphDocument&) = default;
};

/// Vertex i is vertices[i] after sorting; the representation follows that order.
struct RepresentationDocument {
  std::vector<std::string> vertices;
  std::variant<SemiorderRep, IntervalRep> rep;

  friend bool operator==(const RepresentationDocument&, const RepresentationDocument&) = default;
};

/// Parses and canonicalizes. Throws DocumentError.
NamedGraphDocument parse_graph(std::string_view text);
std::string serialize_graph(const NamedGraphDocument& doc);
/// "graph" with "--" edges or "digraph" with "->" arcs.
std::string emit_dot(const NamedGraphDocument& doc);

RepresentationDocument parse_representation(std::string_view text);
std::string serialize_representation(const RepresentationDocument& doc);

/// Throws DocumentError(Schema) if the document kind does not match.
UndirectedGraph to_graph(const NamedGraphDocument& doc);
Digraph to_digraph(const NamedGraphDocument& doc);
NamedGraphDocument from_graph(const UndirectedGraph& g, std::vector<std::string> names);
NamedGraphDocument from_digraph(const Digraph& d, std::vector<std::string> names);

/// "v0".."v9", zero-padded so that sorted order equals index order.
std::vector<std::string> default_vertex_names(std::size_t n);

std::string serialize_analysis(const RepresentationAnalysis& analysis, const RepresentationDocument& source);
std::string serialize_verdict(const ClassificationVerdict& verdict);
std::string serialize_report(const VerificationReport& report);

}  // namespace nichegraph

#endif  // NICHEGRAPH_DOCUMENTS_HPP
