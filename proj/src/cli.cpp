#include "nichegraph/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nichegraph/derived_graphs.hpp"
#include "nichegraph/documents.hpp"
#include "nichegraph/recognizers.hpp"
#include "nichegraph/verify.hpp"
#include "nichegraph/witness.hpp"

namespace nichegraph {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int run_derive(const std::string& kind, const std::string& path, bool dot, std::ostream& out) {
  const auto doc = parse_graph(read_input(path));
  const Digraph d = to_digraph(doc);
  UndirectedGraph g;
  if (kind == "competition") {
    g = competition(d);
  } else if (kind == "cce") {
    g = cce(d);
  } else {
    g = niche(d);
  }
  const auto result = from_graph(g, doc.vertices);
  out << (dot ? emit_dot(result) : serialize_graph(result));
  return kExitOk;
}

Digraph realize(const RepresentationDocument& doc) {
  if (const auto* semi = std::get_if<SemiorderRep>(&doc.rep)) return realize_semiorder(*semi);
  return realize_interval(std::get<IntervalRep>(doc.rep));
}

int run_realize(const std::string& path, bool dot, std::ostream& out) {
  const auto doc = parse_representation(read_input(path));
  const auto result = from_digraph(realize(doc), doc.vertices);
  out << (dot ? emit_dot(result) : serialize_graph(result));
  return kExitOk;
}

int run_analyze(const std::string& path, std::ostream& out) {
  const auto doc = parse_representation(read_input(path));
  if (doc.vertices.empty()) throw InputError("analysis needs at least one vertex");
  const auto analysis = std::holds_alternative<SemiorderRep>(doc.rep)
                            ? analyze_semiorder_rep(std::get<SemiorderRep>(doc.rep))
                            : analyze_interval_rep(std::get<IntervalRep>(doc.rep));
  out << serialize_analysis(analysis, doc);
  return kExitOk;
}

int run_classify(const std::string& path, std::ostream& out) {
  const auto doc = parse_graph(read_input(path));
  out << serialize_verdict(classify_niche(to_graph(doc)));
  return kExitOk;
}

int run_witness(const std::string& model, const std::string& shape, std::ostream& out) {
  const auto descriptor = parse_descriptor(shape);
  RepresentationDocument doc{default_vertex_names(vertex_count(descriptor)), IntervalRep({})};
  if (model == "semiorder") {
    doc.rep = niche_witness_semiorder(descriptor);
  } else {
    doc.rep = niche_witness_interval(descriptor);
  }
  out << serialize_representation(doc);
  return kExitOk;
}

int run_verify(int theorem, std::size_t n_max, std::size_t shards, std::ostream& out) {
  const auto report = verify_theorem(static_cast<Theorem>(theorem), n_max, shards);
  out << serialize_report(report);
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Competition, competition-common-enemy and niche graphs of semiorders and interval orders"};
  app.require_subcommand(1);

  std::string in_path;
  std::string kind;
  bool dot = false;
  auto* derive = app.add_subcommand("derive", "Derived graph of a digraph document");
  derive->add_option("--kind", kind, "competition, cce or niche")
      ->required()
      ->check(CLI::IsMember({"competition", "cce", "niche"}));
  derive->add_option("--in", in_path, "Digraph document ('-' for stdin)")->required();
  derive->add_flag("--dot", dot, "Emit DOT instead of JSON");

  auto* realize_cmd = app.add_subcommand("realize", "Digraph of a semiorder or interval representation");
  realize_cmd->add_option("--in", in_path, "Representation document ('-' for stdin)")->required();
  realize_cmd->add_flag("--dot", dot, "Emit DOT instead of JSON");

  auto* analyze = app.add_subcommand("analyze", "Case analysis of a representation");
  analyze->add_option("--in", in_path, "Representation document ('-' for stdin)")->required();

  auto* classify = app.add_subcommand("classify", "Membership of a graph in each characterized class");
  classify->add_option("--in", in_path, "Graph document ('-' for stdin)")->required();

  std::string model;
  std::string shape;
  auto* witness = app.add_subcommand("witness", "Representation realizing a niche-graph shape");
  witness->add_option("--model", model, "semiorder or interval")
      ->required()
      ->check(CLI::IsMember({"semiorder", "interval"}));
  witness->add_option("--shape", shape, "e.g. gamma:1,1,1,1 or two-cliques:2,3")->required();

  int theorem = 0;
  std::size_t n_max = 0;
  std::size_t shards = 1;
  auto* verify = app.add_subcommand("verify", "Exhaustive check of a characterization");
  verify->add_option("--theorem", theorem, "1, 2, 3 or 4")->required()->check(CLI::Range(1, 4));
  verify->add_option("--n-max", n_max, "Largest vertex count")->required();
  verify->add_option("--shards", shards, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*derive) return run_derive(kind, in_path, dot, out);
    if (*realize_cmd) return run_realize(in_path, dot, out);
    if (*analyze) return run_analyze(in_path, out);
    if (*classify) return run_classify(in_path, out);
    if (*witness) return run_witness(model, shape, out);
    if (*verify) return run_verify(theorem, n_max, shards, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace nichegraph
