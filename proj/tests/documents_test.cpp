#include "doctest.h"
#include "nichegraph/documents.hpp"
#include "test_support.hpp"

using namespace nichegraph;

namespace {

DocumentError graph_error(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const DocumentError& e) {
    return e;
  }
  FAIL("expected a document error for: " << text);
  throw std::logic_error("unreachable");
}

DocumentError rep_error(std::string_view text) {
  try {
    parse_representation(text);
  } catch (const DocumentError& e) {
    return e;
  }
  FAIL("expected a document error for: " << text);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("graph documents canonicalize and round trip") {
  const auto doc = parse_graph(R"({"kind":"graph","vertices":["c","a","b"],"edges":[["c","b"],["b","a"]]})");
  CHECK(doc.kind == GraphKind::Graph);
  CHECK(doc.vertices == std::vector<std::string>{"a", "b", "c"});
  CHECK(doc.pairs == std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
  CHECK(to_graph(doc) == testing::path3());
  CHECK(parse_graph(serialize_graph(doc)) == doc);
  CHECK_THROWS_AS(to_digraph(doc), DocumentError);

  const auto d = parse_graph(R"({"kind":"digraph","vertices":["x","y"],"arcs":[["y","x"]]})");
  CHECK(d.pairs == std::vector<std::pair<std::string, std::string>>{{"y", "x"}});
  CHECK(to_digraph(d).has_arc(1, 0));
  CHECK(parse_graph(serialize_graph(d)) == d);
}

TEST_CASE("random graph documents round trip") {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testing::uniform(0, 12);
    const auto d = testing::random_digraph(n);
    const auto doc = from_digraph(d, default_vertex_names(n));
    CHECK(to_digraph(parse_graph(serialize_graph(doc))) == d);
    const auto g = testing::random_graph(n);
    CHECK(to_graph(parse_graph(serialize_graph(from_graph(g, default_vertex_names(n))))) == g);
  }
}

TEST_CASE("default vertex names sort in index order") {
  CHECK(default_vertex_names(3) == std::vector<std::string>{"v0", "v1", "v2"});
  const auto names = default_vertex_names(12);
  CHECK(names[3] == "v03");
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("graph document errors carry a code and a location") {
  auto e = graph_error(R"({"kind":"graph","vertices":["a"],"edges":[["a","a"]]})");
  CHECK(e.code() == DocumentErrorCode::Loop);
  CHECK(e.context() == "/edges/0");

  e = graph_error(R"({"kind":"graph","vertices":["a","a"],"edges":[]})");
  CHECK(e.code() == DocumentErrorCode::DuplicateName);
  CHECK(e.context() == "/vertices/1");

  e = graph_error(R"({"kind":"graph","vertices":["a"],"edges":[["a","b"]]})");
  CHECK(e.code() == DocumentErrorCode::DanglingReference);
  CHECK(e.context() == "/edges/0/1");

  e = graph_error("{\"kind\":\"graph\",\n\"vertices\":[\"a\",]}");
  CHECK(e.code() == DocumentErrorCode::Syntax);
  CHECK(e.context().rfind("line 2,", 0) == 0);

  e = graph_error(R"({"kind":"graph","vertices":["a","b"],"edges":[["a","b"],["b","a"]]})");
  CHECK(e.code() == DocumentErrorCode::DuplicatePair);
  CHECK(e.context() == "/edges/1");
  CHECK_NOTHROW(parse_graph(R"({"kind":"digraph","vertices":["a","b"],"arcs":[["a","b"],["b","a"]]})"));

  e = graph_error(R"({"kind":"graph","vertices":[""],"edges":[]})");
  CHECK(e.code() == DocumentErrorCode::EmptyName);

  e = graph_error(R"({"kind":"tree","vertices":[],"edges":[]})");
  CHECK(e.code() == DocumentErrorCode::Schema);
  CHECK(e.context() == "/kind");
  CHECK(graph_error(R"({"kind":"graph","vertices":[]})").code() == DocumentErrorCode::Schema);
  CHECK(graph_error(R"({"kind":"graph","vertices":[],"edges":[],"extra":1})").code() == DocumentErrorCode::Schema);
  CHECK(graph_error(R"({"kind":"graph","vertices":[1],"edges":[]})").code() == DocumentErrorCode::Schema);
  CHECK(graph_error(R"({"kind":"graph","kind":"graph","vertices":[],"edges":[]})").code() ==
        DocumentErrorCode::DuplicateName);
  CHECK(graph_error("[]").code() == DocumentErrorCode::Schema);

  std::string big = R"({"kind":"graph","vertices":[)";
  for (int i = 0; i < 65; ++i) big += (i ? ",\"" : "\"") + std::to_string(i) + "\"";
  big += R"(],"edges":[]})";
  CHECK(graph_error(big).code() == DocumentErrorCode::TooLarge);
}

TEST_CASE("representation documents") {
  const auto semi = parse_representation(R"({"kind":"semiorder","f":{"b":"3/2","a":0,"c":"6/2"},"delta":"1"})");
  CHECK(semi.vertices == std::vector<std::string>{"a", "b", "c"});
  const auto& rep = std::get<SemiorderRep>(semi.rep);
  CHECK(rep.value(1) == Rational(3, 2));
  CHECK(rep.value(2) == 3);
  CHECK(serialize_representation(semi).find("\"c\": \"3\"") != std::string::npos);

  const auto iv = parse_representation(R"({"kind":"interval","J":{"x":["1","2"],"y":["-1/3","5"]}})");
  CHECK(std::get<IntervalRep>(iv.rep).interval(1).lo == Rational(-1, 3));
  CHECK(parse_representation(serialize_representation(iv)) == iv);
}

TEST_CASE("representation document errors") {
  auto e = rep_error(R"({"kind":"semiorder","f":{"a":"1/0"},"delta":"1"})");
  CHECK(e.code() == DocumentErrorCode::BadRational);
  CHECK(e.context() == "/f/a");
  CHECK(rep_error(R"({"kind":"semiorder","f":{"a":"x"},"delta":"1"})").code() == DocumentErrorCode::BadRational);
  CHECK(rep_error(R"({"kind":"semiorder","f":{"a":1.5},"delta":"1"})").code() == DocumentErrorCode::BadRational);
  CHECK(rep_error(R"({"kind":"semiorder","f":{"a":"1"},"delta":"0"})").code() ==
        DocumentErrorCode::InvalidRepresentation);
  CHECK(rep_error(R"({"kind":"interval","J":{"a":["3","2"]}})").code() == DocumentErrorCode::InvalidRepresentation);
  CHECK(rep_error(R"({"kind":"interval","J":{"a":["1"]}})").code() == DocumentErrorCode::Schema);
  CHECK(rep_error(R"({"kind":"interval","J":{"a":["1","2"]},"delta":"1"})").code() == DocumentErrorCode::Schema);
  CHECK(rep_error(R"({"kind":"semiorder","f":{"a":"1"}})").code() == DocumentErrorCode::Schema);
  CHECK(rep_error(R"({"kind":"interval","J":{"a":["1","2"],"a":["1","2"]}})").code() ==
        DocumentErrorCode::DuplicateName);
  CHECK(rep_error(R"({"kind":"interval","J":{"":["1","2"]}})").code() == DocumentErrorCode::EmptyName);
}

TEST_CASE("rationals survive a document round trip exactly") {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::uniform(0, 8);
    const auto names = default_vertex_names(n);
    const RepresentationDocument semi{names, testing::random_semiorder_rep(n)};
    CHECK(parse_representation(serialize_representation(semi)) == semi);
    const RepresentationDocument iv{names, testing::random_interval_rep(n)};
    CHECK(parse_representation(serialize_representation(iv)) == iv);
  }
}

TEST_CASE("dot output") {
  const auto dot = emit_dot(from_graph(testing::path3(), {"a", "b", "c"}));
  CHECK(dot.rfind("graph G {", 0) == 0);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (line.find(" -- ") != std::string::npos) {
      ++edges;
    } else if (line.find(';') != std::string::npos) {
      ++nodes;
    }
  }
  CHECK(nodes == 3);
  CHECK(edges == 2);

  const auto directed = emit_dot(from_digraph(Digraph(2, std::vector<VertexPair>{{0, 1}}), {"p", "q"}));
  CHECK(directed.find("\"p\" -> \"q\";") != std::string::npos);
}

TEST_CASE("verdict and report serialization") {
  const auto verdict = serialize_verdict(classify_niche(disjoint_union(testing::path3(), edgeless(1))));
  CHECK(verdict.find("\"gamma:1,1,1,1\"") != std::string::npos);
  const auto report = serialize_report(verify_theorem(Theorem::NicheGraphsOfSemiorders, 3));
  CHECK(report.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(report.find("\"model\": \"semiorder\"") != std::string::npos);
}
