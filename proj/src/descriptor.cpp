#include "nichegraph/descriptor.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nichegraph {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_ordered(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "clique sizes must be positive");
  require(m <= n, "clique sizes must be given as m <= n");
}

std::vector<std::size_t> parse_parameters(std::string_view text) {
  std::vector<std::size_t> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view field = text.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("bad shape parameter \"" + std::string(field) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

void validate(const NicheClassDescriptor& d) {
  std::visit(overloaded{
                 [](const Edgeless& e) { require(e.q >= 1, "edgeless shape needs q >= 1"); },
                 [](const TwoCliques& t) { require_ordered(t.m, t.n); },
                 [](const TwoCliquesPlusIsolated& t) {
                   require_ordered(t.m, t.n);
                   require(t.q >= 1, "isolated part needs q >= 1");
                 },
                 [](const Gamma& g) {
                   require_ordered(g.m, g.n);
                   require(g.q >= 1, "gamma shape needs q >= 1");
                 },
             },
             d);
}

std::size_t vertex_count(const NicheClassDescriptor& d) {
  return std::visit(overloaded{
                        [](const Edgeless& e) { return e.q; },
                        [](const TwoCliques& t) { return t.m + t.n; },
                        [](const TwoCliquesPlusIsolated& t) { return t.m + t.n + t.q; },
                        [](const Gamma& g) { return g.m + g.n + g.q + g.r; },
                    },
                    d);
}

NicheClassDescriptor gamma_shape(std::size_t m, std::size_t n, std::size_t q, std::size_t r) {
  require(m >= 1 && n >= 1, "clique sizes must be positive");
  if (m > n) std::swap(m, n);
  if (q == 0) {
    if (r == 0) return TwoCliques{m, n};
    return TwoCliquesPlusIsolated{m, n, r};
  }
  return Gamma{m, n, q, r};
}

bool is_semiorder_shape(const NicheClassDescriptor& d) {
  const auto* g = std::get_if<Gamma>(&d);
  return g == nullptr || g->r == 0;
}

std::string to_string(const NicheClassDescriptor& d) {
  const auto join = [](std::initializer_list<std::size_t> values) {
    std::string out;
    for (std::size_t v : values) {
      if (!out.empty()) out += ',';
      out += std::to_string(v);
    }
    return out;
  };
  return std::visit(overloaded{
                        [&](const Edgeless& e) { return "edgeless:" + join({e.q}); },
                        [&](const TwoCliques& t) { return "two-cliques:" + join({t.m, t.n}); },
                        [&](const TwoCliquesPlusIsolated& t) {
                          return "two-cliques-isolated:" + join({t.m, t.n, t.q});
                        },
                        [&](const Gamma& g) { return "gamma:" + join({g.m, g.n, g.q, g.r}); },
                    },
                    d);
}

NicheClassDescriptor parse_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("shape must look like name:params, got \"" + std::string(text) + "\"");
  }
  const std::string_view name = text.substr(0, colon);
  const auto p = parse_parameters(text.substr(colon + 1));
  const auto arity = [&](std::size_t k) {
    require(p.size() == k, "shape \"" + std::string(name) + "\" takes " + std::to_string(k) + " parameters");
  };
  NicheClassDescriptor d;
  if (name == "edgeless") {
    arity(1);
    d = Edgeless{p[0]};
  } else if (name == "two-cliques") {
    arity(2);
    d = TwoCliques{std::min(p[0], p[1]), std::max(p[0], p[1])};
  } else if (name == "two-cliques-isolated") {
    arity(3);
    d = TwoCliquesPlusIsolated{std::min(p[0], p[1]), std::max(p[0], p[1]), p[2]};
  } else if (name == "gamma") {
    arity(4);
    d = gamma_shape(p[0], p[1], p[2], p[3]);
  } else {
    throw std::invalid_argument("unknown shape \"" + std::string(name) + "\"");
  }
  validate(d);
  return d;
}

std::string to_string(const CompetitionClassDescriptor& d) {
  return "clique-isolated:" + std::to_string(d.r) + "," + std::to_string(d.q);
}

}  // namespace nichegraph
