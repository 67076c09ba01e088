#include "nqr/serialize.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

#include "nqr/errors.hpp"

namespace nqr {

namespace {

// Exact values that fit in 64 bits stay numbers; anything else becomes a string.
Json rational_json(const Rational& q) {
  if (is_integral(q)) {
    const BigInt v = numerator(q);
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(v);
  }
  return to_string(q);
}

std::uint64_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw DomainError(std::string("expected a nonnegative integer for ") + what);
  return j.get<std::uint64_t>();
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("graph JSON must be an object");
  if (!j.contains("n") && j.contains("graph")) return graph_from_json(j.at("graph"));
  if (!j.contains("n") || !j.contains("edges") || !j.at("edges").is_array())
    throw DomainError("graph JSON needs \"n\" and \"edges\"");
  const std::size_t n = as_index(j.at("n"), "n");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw DomainError("each edge must be a pair [u, v]");
    edges.emplace_back(static_cast<Vertex>(as_index(e[0], "edge endpoint")),
                       static_cast<Vertex>(as_index(e[1], "edge endpoint")));
  }
  return Graph::from_edges(n, edges);
}

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(std::vector<Point>(p.images().begin(), p.images().end()));
  return Json{{"degree", g.degree()}, {"generators", std::move(gens)}};
}

PermGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators") || !j.at("generators").is_array())
    throw DomainError("group JSON needs \"degree\" and \"generators\"");
  const std::size_t degree = as_index(j.at("degree"), "degree");
  std::vector<Permutation> gens;
  for (const auto& g : j.at("generators")) {
    if (g.is_string()) {
      gens.push_back(Permutation::from_cycles(degree, g.get<std::string>()));
    } else if (g.is_array()) {
      std::vector<Point> images;
      for (const auto& x : g) images.push_back(static_cast<Point>(as_index(x, "image")));
      gens.emplace_back(std::move(images));
    } else {
      throw DomainError("generator must be an image array or a cycle string");
    }
  }
  return PermGroup(degree, std::move(gens));
}

Json to_json(const FieldElem& e) { return e.coeffs; }

Json to_json(const FiniteField& f) {
  return Json{{"p", f.characteristic()}, {"a", f.degree()}, {"modulus", f.modulus()}};
}

Json to_json(const VertexLabel& label) {
  return std::visit(
      [](const auto& l) -> Json {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, IndexLabel>) return l.value;
        else if constexpr (std::is_same_v<T, PairLabel>) return Json::array({l.first, l.second});
        else if constexpr (std::is_same_v<T, SubsetLabel>) return Json{{"subset", {l.lo, l.hi}}};
        else if constexpr (std::is_same_v<T, FieldLabel>) return to_json(l.value);
        else return Json::array({to_json(l.first), to_json(l.second)});
      },
      label);
}

Json to_json(const FamilyInstance& f) {
  Json labels = Json::array();
  for (const auto& l : f.vertex_labels) labels.push_back(to_json(l));
  Json groups = Json::object();
  for (const auto& g : f.companion_groups) groups[g.name] = to_json(g.group);
  return Json{{"label", f.label}, {"graph", to_json(f.graph)}, {"vertex_labels", std::move(labels)},
              {"groups", std::move(groups)}};
}

Json to_json(const SrgParams& p) {
  return Json{{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

Json to_json(const SpectralData& s) {
  return Json{{"theta", rational_json(s.theta)},     {"tau", rational_json(s.tau)},
              {"m_theta", rational_json(s.m_theta)}, {"m_tau", rational_json(s.m_tau)},
              {"discriminant", to_string(s.discriminant)}, {"degenerate", s.degenerate}};
}

Json to_json(const Lemma23Report& r) {
  Json j{{"connected", r.connected},
         {"vertex_transitive", r.vertex_transitive},
         {"diameter_nonincreasing", r.diameter_nonincreasing},
         {"no_intra_orbit_edges", r.no_intra_orbit_edges},
         {"edge_transitive", r.edge_transitive}};
  j["multicover"] = r.multicover ? Json(*r.multicover) : Json(nullptr);
  j["all_hold"] = r.all_hold();
  return j;
}

Json to_json(const ConstraintReport& r) {
  Json items = Json::array();
  for (const auto& item : r.items)
    items.push_back(Json{{"number", item.number},
                         {"statement", item.statement},
                         {"lhs", to_string(item.lhs)},
                         {"rhs", to_string(item.rhs)},
                         {"applicable", item.applicable},
                         {"pass", item.pass}});
  return Json{{"items", std::move(items)}, {"all_pass", r.all_pass()}};
}

Json to_json(const FeasibleRecord& r) {
  const auto& p = r.params;
  return Json{{"m", p.m},
              {"ell", p.ell},
              {"r", p.r},
              {"b", p.b},
              {"n", p.derived.n},
              {"k", p.derived.k},
              {"lambda", p.derived.lambda},
              {"mu", p.derived.mu},
              {"theta", rational_json(p.spectral.theta)},
              {"tau", rational_json(p.spectral.tau)},
              {"m_theta", rational_json(p.spectral.m_theta)},
              {"m_tau", rational_json(p.spectral.m_tau)},
              {"complete_multipartite", r.complete_multipartite},
              {"family_matches", r.family_matches}};
}

Json to_json(const Classification& c) {
  return Json{{"tag", std::string(to_string(c.tag))},
              {"label", c.label},
              {"params", to_json(c.params)},
              {"m", c.m},
              {"ell", c.ell},
              {"b", c.b}};
}

std::string graph_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto feed = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  feed(g.order());
  for (const auto& [u, v] : g.edges()) {
    feed(u);
    feed(v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const ReductionChain& chain) {
  Json steps = Json::array();
  for (const auto& s : chain.steps) {
    Json step{{"graph_digest", graph_digest(s.graph)},
              {"n", s.graph.order()},
              {"group_order", to_string(group_order(s.group))},
              {"normal_order", to_string(group_order(s.normal))},
              {"quotient_digest", graph_digest(s.result.quotient)},
              {"quotient_n", s.result.quotient.order()}};
    step["b"] = s.result.b ? Json(*s.result.b) : Json(nullptr);
    step["ell"] = s.result.ell ? Json(*s.result.ell) : Json(nullptr);
    if (auto p = srg_params(s.result.quotient)) step["quotient_srg"] = to_json(*p);
    else step["quotient_srg"] = nullptr;
    step["report"] = s.result.report ? to_json(*s.result.report) : Json(nullptr);
    steps.push_back(std::move(step));
  }
  Json j{{"steps", std::move(steps)},
         {"terminal_digest", graph_digest(chain.terminal)},
         {"terminal_n", chain.terminal.order()},
         {"terminal_group_order", to_string(group_order(chain.terminal_group))},
         {"terminal_reason", std::string(to_string(chain.reason))},
         {"edge_transitive_hypothesis", chain.edge_transitive_hypothesis}};
  return j;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string feasibility_table(const std::vector<FeasibleRecord>& records) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%3s %3s %3s %4s %6s %5s %6s %5s %6s %5s %8s %8s  %s\n", "m", "l", "r", "b",
                "n", "k", "lambda", "mu", "theta", "tau", "m_theta", "m_tau", "families");
  out << line;
  for (const auto& r : records) {
    const auto& p = r.params;
    std::string families;
    for (const auto& f : r.family_matches) families += (families.empty() ? "" : ",") + f;
    std::snprintf(line, sizeof line, "%3lld %3lld %3lld %4lld %6lld %5lld %6lld %5lld %6s %5s %8s %8s  ",
                  static_cast<long long>(p.m), static_cast<long long>(p.ell), static_cast<long long>(p.r),
                  static_cast<long long>(p.b), static_cast<long long>(p.derived.n),
                  static_cast<long long>(p.derived.k), static_cast<long long>(p.derived.lambda),
                  static_cast<long long>(p.derived.mu), to_string(p.spectral.theta).c_str(),
                  to_string(p.spectral.tau).c_str(), to_string(p.spectral.m_theta).c_str(),
                  to_string(p.spectral.m_tau).c_str());
    out << line << families << '\n';
  }
  return out.str();
}

}  // namespace nqr
