#include "nichegraph/documents.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace nichegraph {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const char* to_string(DocumentErrorCode code) {
  switch (code) {
    case DocumentErrorCode::Syntax:
      return "syntax";
    case DocumentErrorCode::Schema:
      return "schema";
    case DocumentErrorCode::EmptyName:
      return "empty-name";
    case DocumentErrorCode::DuplicateName:
      return "duplicate-name";
    case DocumentErrorCode::DanglingReference:
      return "dangling-reference";
    case DocumentErrorCode::Loop:
      return "loop";
    case DocumentErrorCode::DuplicatePair:
      return "duplicate-pair";
    case DocumentErrorCode::BadRational:
      return "bad-rational";
    case DocumentErrorCode::InvalidRepresentation:
      return "invalid-representation";
    case DocumentErrorCode::TooLarge:
      return "too-large";
  }
  return "unknown";
}

DocumentError::DocumentError(DocumentErrorCode code, std::string context, const std::string& message)
    : std::runtime_error(std::string(nichegraph::to_string(code)) + " error at " + context + ": " + message),
      code_(code),
      context_(std::move(context)) {}

namespace {

[[noreturn]] void fail(DocumentErrorCode code, const std::string& context, const std::string& message) {
  throw DocumentError(code, context, message);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// Parses JSON, rejecting repeated keys inside any object.
json parse_json(std::string_view text) {
  std::vector<std::set<std::string>> seen_keys;
  std::string duplicate;
  const json::parser_callback_t track = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        seen_keys.emplace_back();
        break;
      case json::parse_event_t::object_end:
        seen_keys.pop_back();
        break;
      case json::parse_event_t::key:
        if (!seen_keys.back().insert(parsed.get<std::string>()).second && duplicate.empty()) {
          duplicate = parsed.get<std::string>();
        }
        break;
      default:
        break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), track);
  } catch (const json::parse_error& e) {
    fail(DocumentErrorCode::Syntax, line_column(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  if (!duplicate.empty()) fail(DocumentErrorCode::DuplicateName, "key \"" + duplicate + "\"", "repeated object key");
  if (!doc.is_object()) fail(DocumentErrorCode::Schema, "/", "document must be an object");
  return doc;
}

const json& field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) fail(DocumentErrorCode::Schema, std::string("/") + name, "missing field");
  return *it;
}

void only_fields(const json& doc, std::initializer_list<const char*> allowed) {
  for (const auto& item : doc.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return item.key() == a; })) {
      fail(DocumentErrorCode::Schema, "/" + item.key(), "unknown field");
    }
  }
}

std::string string_at(const json& value, const std::string& where) {
  if (!value.is_string()) fail(DocumentErrorCode::Schema, where, "expected a string");
  return value.get<std::string>();
}

void check_name(const std::string& name, const std::string& where) {
  if (name.empty()) fail(DocumentErrorCode::EmptyName, where, "vertex names must be nonempty");
}

void check_size(std::size_t n, const std::string& where) {
  if (n > kMaxVertices) {
    fail(DocumentErrorCode::TooLarge, where, std::to_string(n) + " vertices; at most " + std::to_string(kMaxVertices));
  }
}

Rational rational_at(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (!value.is_string()) fail(DocumentErrorCode::BadRational, where, "expected a rational string like \"3/2\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(DocumentErrorCode::BadRational, where, e.what());
  }
}

std::map<std::string, Vertex> index_of(const std::vector<std::string>& names) {
  std::map<std::string, Vertex> out;
  for (Vertex i = 0; i < names.size(); ++i) out.emplace(names[i], i);
  return out;
}

ordered_json names_json(const std::vector<std::string>& names, VertexMask set) {
  ordered_json out = ordered_json::array();
  for_each_vertex(set, [&](Vertex v) { out.push_back(names[v]); });
  return out;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

NamedGraphDocument parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  const std::string kind = string_at(field(doc, "kind"), "/kind");
  NamedGraphDocument out;
  const char* pairs_key = nullptr;
  if (kind == "graph") {
    out.kind = GraphKind::Graph;
    pairs_key = "edges";
  } else if (kind == "digraph") {
    out.kind = GraphKind::Digraph;
    pairs_key = "arcs";
  } else {
    fail(DocumentErrorCode::Schema, "/kind", "expected \"graph\" or \"digraph\", got \"" + kind + "\"");
  }
  only_fields(doc, {"kind", "vertices", pairs_key});

  const json& vertices = field(doc, "vertices");
  if (!vertices.is_array()) fail(DocumentErrorCode::Schema, "/vertices", "expected an array");
  check_size(vertices.size(), "/vertices");
  std::set<std::string> declared;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    std::string name = string_at(vertices[i], where);
    check_name(name, where);
    if (!declared.insert(name).second) fail(DocumentErrorCode::DuplicateName, where, "\"" + name + "\" declared twice");
  }
  out.vertices.assign(declared.begin(), declared.end());

  const std::string pairs_root = std::string("/") + pairs_key;
  const json& pairs = field(doc, pairs_key);
  if (!pairs.is_array()) fail(DocumentErrorCode::Schema, pairs_root, "expected an array");
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = pairs_root + "/" + std::to_string(i);
    const json& p = pairs[i];
    if (!p.is_array() || p.size() != 2) fail(DocumentErrorCode::Schema, where, "expected a two-element array");
    std::string a = string_at(p[0], where + "/0");
    std::string b = string_at(p[1], where + "/1");
    if (declared.count(a) == 0) fail(DocumentErrorCode::DanglingReference, where + "/0", "undeclared vertex \"" + a + "\"");
    if (declared.count(b) == 0) fail(DocumentErrorCode::DanglingReference, where + "/1", "undeclared vertex \"" + b + "\"");
    if (a == b) fail(DocumentErrorCode::Loop, where, "loop at \"" + a + "\"");
    if (out.kind == GraphKind::Graph && b < a) std::swap(a, b);
    if (!seen.emplace(a, b).second) fail(DocumentErrorCode::DuplicatePair, where, "\"" + a + "\", \"" + b + "\" repeated");
  }
  out.pairs.assign(seen.begin(), seen.end());
  return out;
}

std::string serialize_graph(const NamedGraphDocument& doc) {
  ordered_json out;
  const bool directed = doc.kind == GraphKind::Digraph;
  out["kind"] = directed ? "digraph" : "graph";
  out["vertices"] = doc.vertices;
  ordered_json pairs = ordered_json::array();
  for (const auto& [a, b] : doc.pairs) pairs.push_back({a, b});
  out[directed ? "arcs" : "edges"] = std::move(pairs);
  return dump(out);
}

std::string emit_dot(const NamedGraphDocument& doc) {
  const bool directed = doc.kind == GraphKind::Digraph;
  // JSON string escaping is a valid DOT quoted ID.
  const auto quote = [](const std::string& s) { return json(s).dump(); };
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " G {\n";
  for (const auto& v : doc.vertices) out << "  " << quote(v) << ";\n";
  for (const auto& [a, b] : doc.pairs) out << "  " << quote(a) << (directed ? " -> " : " -- ") << quote(b) << ";\n";
  out << "}\n";
  return out.str();
}

RepresentationDocument parse_representation(std::string_view text) {
  const json doc = parse_json(text);
  const std::string kind = string_at(field(doc, "kind"), "/kind");
  const char* map_key = kind == "semiorder" ? "f" : kind == "interval" ? "J" : nullptr;
  if (map_key == nullptr) {
    fail(DocumentErrorCode::Schema, "/kind", "expected \"semiorder\" or \"interval\", got \"" + kind + "\"");
  }
  if (kind == "semiorder") {
    only_fields(doc, {"kind", "f", "delta"});
  } else {
    only_fields(doc, {"kind", "J"});
  }

  const std::string root = std::string("/") + map_key;
  const json& values = field(doc, map_key);
  if (!values.is_object()) fail(DocumentErrorCode::Schema, root, "expected an object keyed by vertex name");
  check_size(values.size(), root);

  // nlohmann::json objects iterate in sorted key order, which is the vertex order.
  std::vector<std::string> names;
  for (const auto& item : values.items()) {
    check_name(item.key(), root);
    names.push_back(item.key());
  }

  try {
    if (kind == "semiorder") {
      std::vector<Rational> f;
      for (const auto& item : values.items()) f.push_back(rational_at(item.value(), root + "/" + item.key()));
      Rational delta = rational_at(field(doc, "delta"), "/delta");
      return {std::move(names), SemiorderRep(std::move(f), std::move(delta))};
    }
    std::vector<ClosedInterval> J;
    for (const auto& item : values.items()) {
      const std::string where = root + "/" + item.key();
      const json& pair = item.value();
      if (!pair.is_array() || pair.size() != 2) fail(DocumentErrorCode::Schema, where, "expected [lo, hi]");
      J.push_back({rational_at(pair[0], where + "/0"), rational_at(pair[1], where + "/1")});
    }
    return {std::move(names), IntervalRep(std::move(J))};
  } catch (const std::invalid_argument& e) {
    fail(DocumentErrorCode::InvalidRepresentation, root, e.what());
  }
}

std::string serialize_representation(const RepresentationDocument& doc) {
  ordered_json out;
  if (const auto* semi = std::get_if<SemiorderRep>(&doc.rep)) {
    out["kind"] = "semiorder";
    ordered_json f = ordered_json::object();
    for (Vertex v = 0; v < doc.vertices.size(); ++v) f[doc.vertices[v]] = to_string(semi->value(v));
    out["f"] = std::move(f);
    out["delta"] = to_string(semi->delta());
  } else {
    const auto& intervals = std::get<IntervalRep>(doc.rep);
    out["kind"] = "interval";
    ordered_json J = ordered_json::object();
    for (Vertex v = 0; v < doc.vertices.size(); ++v) {
      const auto& iv = intervals.interval(v);
      J[doc.vertices[v]] = {to_string(iv.lo), to_string(iv.hi)};
    }
    out["J"] = std::move(J);
  }
  return dump(out);
}

UndirectedGraph to_graph(const NamedGraphDocument& doc) {
  if (doc.kind != GraphKind::Graph) fail(DocumentErrorCode::Schema, "/kind", "expected an undirected graph");
  const auto index = index_of(doc.vertices);
  std::vector<VertexPair> edges;
  for (const auto& [a, b] : doc.pairs) edges.emplace_back(index.at(a), index.at(b));
  return UndirectedGraph(doc.vertices.size(), edges);
}

Digraph to_digraph(const NamedGraphDocument& doc) {
  if (doc.kind != GraphKind::Digraph) fail(DocumentErrorCode::Schema, "/kind", "expected a digraph");
  const auto index = index_of(doc.vertices);
  std::vector<VertexPair> arcs;
  for (const auto& [a, b] : doc.pairs) arcs.emplace_back(index.at(a), index.at(b));
  return Digraph(doc.vertices.size(), arcs);
}

NamedGraphDocument from_graph(const UndirectedGraph& g, std::vector<std::string> names) {
  NamedGraphDocument out{GraphKind::Graph, std::move(names), {}};
  for (const auto& [i, j] : g.edges()) {
    auto a = out.vertices.at(i);
    auto b = out.vertices.at(j);
    if (b < a) std::swap(a, b);
    out.pairs.emplace_back(std::move(a), std::move(b));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

NamedGraphDocument from_digraph(const Digraph& d, std::vector<std::string> names) {
  NamedGraphDocument out{GraphKind::Digraph, std::move(names), {}};
  for (const auto& [x, y] : d.arcs()) out.pairs.emplace_back(out.vertices.at(x), out.vertices.at(y));
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::vector<std::string> default_vertex_names(std::size_t n) {
  const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    out.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

std::string serialize_analysis(const RepresentationAnalysis& analysis, const RepresentationDocument& source) {
  ordered_json out;
  const auto* semi = std::get_if<SemiorderRep>(&source.rep);
  out["model"] = semi != nullptr ? "semiorder" : "interval";
  out["case"] = to_string(analysis.case_id);
  out["r1"] = to_string(analysis.r1);
  out["r2"] = to_string(analysis.r2);
  if (semi != nullptr) out["delta"] = to_string(semi->delta());
  ordered_json parts = ordered_json::array();
  for (VertexMask part : analysis.parts) parts.push_back(names_json(source.vertices, part));
  out["parts"] = std::move(parts);
  out["predicted"] = to_string(analysis.predicted);
  return dump(out);
}

std::string serialize_verdict(const ClassificationVerdict& v) {
  ordered_json out;
  const auto shape = [](const std::optional<CompetitionClassDescriptor>& d) {
    return d ? ordered_json(to_string(*d)) : ordered_json(nullptr);
  };
  out["competition"] = {{"semiorder", v.is_competition_semiorder},
                        {"interval", v.is_competition_interval},
                        {"shape", shape(v.competition_descriptor)}};
  out["cce"] = {{"semiorder", v.is_cce_semiorder}, {"interval", v.is_cce_interval}, {"shape", shape(v.cce_descriptor)}};
  ordered_json shapes = ordered_json::array();
  for (const auto& d : v.niche_descriptors) shapes.push_back(to_string(d));
  out["niche"] = {{"semiorder", v.is_niche_semiorder}, {"interval", v.is_niche_interval}, {"shapes", shapes}};
  return dump(out);
}

namespace {

ordered_json forms_json(const std::vector<CanonicalForm>& forms) {
  ordered_json out = ordered_json::array();
  for (const auto& form : forms) {
    ordered_json edges = ordered_json::array();
    for (const auto& [i, j] : from_canonical(form).edges()) edges.push_back({i, j});
    out.push_back({{"n", form.n}, {"edges", edges}});
  }
  return out;
}

}  // namespace

std::string serialize_report(const VerificationReport& report) {
  ordered_json out;
  out["theorem"] = static_cast<int>(report.theorem);
  out["n_max"] = report.n_max;
  out["verdict"] = report.passed() ? "pass" : "fail";
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["n"] = row.n;
    r["model"] = to_string(row.model);
    r["enumerated"] = row.enumerated;
    r["produced"] = row.produced.size();
    r["predicted"] = row.predicted.size();
    r["missing"] = forms_json(row.missing);
    r["unexpected"] = forms_json(row.unexpected);
    r["classes"] = row.predicted_shapes;
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);
  return dump(out);
}

}  // namespace nichegraph
