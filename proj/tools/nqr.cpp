#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nqr/errors.hpp"
#include "nqr/feasibility.hpp"
#include "nqr/holomorph.hpp"
#include "nqr/quotient.hpp"
#include "nqr/serialize.hpp"
#include "specs.hpp"

namespace {

using namespace nqr;

enum Exit : int { kOk = 0, kUsage = 1, kResource = 2, kViolation = 3 };

struct Options {
  std::string graph;
  std::string group;
  std::string normal;
  std::string table;
  std::string family;
  std::string format = "json";
  std::string out;
  std::uint64_t cap = kDefaultGroupCap;
  bool json_errors = false;
  bool stop_at_cap = false;
  bool vertex_transitive_only = false;
  std::int64_t m_max = 8, l_max = 8, r_max = 8;
};

class UsageError : public DomainError {
 public:
  using DomainError::DomainError;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format '" + o.format + "' is not available for this command");
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string params_line(const SrgParams& p) {
  return "srg(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
         std::to_string(p.mu) + ")";
}

Json srg_report(const Graph& g) {
  Json j{{"n", g.order()}, {"edges", g.edge_count()}};
  const auto p = srg_params(g);
  j["strongly_regular"] = p.has_value();
  if (!p) return j;
  j["params"] = to_json(*p);
  try {
    j["spectral"] = to_json(spectral_data(*p));
  } catch (const UnsupportedParameters& e) {
    j["spectral"] = nullptr;
    j["spectral_note"] = e.what();
  }
  return j;
}

std::string graph_output(const Options& o, const Graph& g, const Json& json) {
  if (o.format == "dot") return to_dot(g);
  if (o.format == "edges") return to_edge_list(g);
  return dump(json);
}

int run_family(const Options& o) {
  require_format(o, {"json", "dot", "edges", "table"});
  const FamilyInstance f = cli::load_family(o.family);
  if (o.format == "table") {
    const auto p = srg_params(f.graph);
    std::string text = f.label + "\nvertices " + std::to_string(f.graph.order()) + "\nedges " +
                       std::to_string(f.graph.edge_count()) + "\n" + (p ? params_line(*p) : "not strongly regular") +
                       "\n";
    for (const auto& g : f.companion_groups)
      text += "group " + g.name + " order " + to_string(group_order(g.group)) + "\n";
    emit(o, text);
  } else {
    emit(o, graph_output(o, f.graph, to_json(f)));
  }
  return kOk;
}

int run_verify_srg(const Options& o) {
  require_format(o, {"json", "table"});
  require(o.graph, "--graph");
  const Graph g = cli::load_family(o.graph).graph;
  const Json j = srg_report(g);
  if (o.format == "table") {
    const auto p = srg_params(g);
    emit(o, p ? params_line(*p) + "\n" : std::string("not strongly regular\n"));
  } else {
    emit(o, dump(j));
  }
  return kOk;
}

int run_quotient(const Options& o) {
  require_format(o, {"json", "dot", "edges", "table"});
  require(o.graph, "--graph");
  require(o.normal, "--normal");
  const FamilyInstance f = cli::load_family(o.graph);
  const PermGroup n = cli::load_group(o.normal, cli::GroupRole::normal, &f);
  const QuotientResult q = quotient_graph(f.graph, n);
  Json j{{"quotient", to_json(q.quotient)}, {"orbits", q.orbits}};
  j["b"] = q.b ? Json(*q.b) : Json(nullptr);
  j["ell"] = q.ell ? Json(*q.ell) : Json(nullptr);
  j["srg"] = srg_report(q.quotient);
  if (o.format == "table") {
    const auto p = srg_params(q.quotient);
    emit(o, "orbits " + std::to_string(q.orbits.size()) + "\nb " + (q.b ? std::to_string(*q.b) : "-") + "\nell " +
                (q.ell ? std::to_string(*q.ell) : "-") + "\nquotient " +
                (p ? params_line(*p) : "not strongly regular") + "\n");
  } else {
    emit(o, graph_output(o, q.quotient, j));
  }
  return kOk;
}

int run_lemma23(const Options& o) {
  require_format(o, {"json", "table"});
  require(o.graph, "--graph");
  require(o.group, "--group");
  require(o.normal, "--normal");
  const FamilyInstance f = cli::load_family(o.graph);
  const PermGroup g = cli::load_group(o.group, cli::GroupRole::acting, &f);
  const PermGroup n = cli::load_group(o.normal, cli::GroupRole::normal, &f);
  const Lemma23Report r = check_lemma23(f.graph, g, n);
  const Json j = to_json(r);
  if (o.format == "table") {
    std::string text;
    for (const auto& [k, v] : j.items()) text += k + " " + v.dump() + "\n";
    emit(o, text);
  } else {
    emit(o, dump(j));
  }
  return kOk;
}

int run_reduce(const Options& o) {
  require_format(o, {"json", "table"});
  require(o.graph, "--graph");
  require(o.group, "--group");
  const FamilyInstance f = cli::load_family(o.graph);
  const PermGroup g = cli::load_group(o.group, cli::GroupRole::acting, &f);
  ReduceOptions ro;
  ro.cap = o.cap;
  ro.stop_at_cap = o.stop_at_cap;
  ro.vertex_transitive_only = o.vertex_transitive_only;
  const ReductionChain chain = reduce_chain(f.graph, g, ro);
  if (o.format == "table") {
    std::string text;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
      const auto& s = chain.steps[i];
      const auto p = srg_params(s.result.quotient);
      text += "step " + std::to_string(i) + ": n=" + std::to_string(s.graph.order()) +
              " |G|=" + to_string(group_order(s.group)) + " |N|=" + to_string(group_order(s.normal)) +
              " b=" + (s.result.b ? std::to_string(*s.result.b) : "-") +
              " ell=" + (s.result.ell ? std::to_string(*s.result.ell) : "-") + " -> " +
              (p ? params_line(*p) : "not strongly regular") + "\n";
    }
    text += "terminal: n=" + std::to_string(chain.terminal.order()) + " reason=" +
            std::string(to_string(chain.reason)) + "\n";
    emit(o, text);
  } else {
    emit(o, dump(to_json(chain)));
  }
  return kOk;
}

int run_quasiprimitive(const Options& o) {
  require_format(o, {"json", "table"});
  require(o.group, "--group");
  std::optional<FamilyInstance> f;
  if (!o.graph.empty()) f = cli::load_family(o.graph);
  const PermGroup g = cli::load_group(o.group, cli::GroupRole::acting, f ? &*f : nullptr);
  if (!is_transitive(g)) throw DomainError("quasiprimitivity needs a transitive group");
  const auto witness = find_intransitive_normal(g, o.cap);
  Json j{{"degree", g.degree()}, {"order", to_string(group_order(g))}, {"quasiprimitive", !witness}};
  if (witness) {
    j["witness"] = to_json(*witness);
    j["witness_order"] = to_string(group_order(*witness));
    j["witness_orbits"] = orbit_partition(*witness);
  }
  if (o.format == "table")
    emit(o, std::string("quasiprimitive ") + (witness ? "false" : "true") + "\norder " + to_string(group_order(g)) +
                "\n");
  else
    emit(o, dump(j));
  return kOk;
}

int run_feasibility(const Options& o) {
  require_format(o, {"json", "table"});
  const auto records = enumerate_feasible(o.m_max, o.l_max, o.r_max);
  if (o.format == "table") {
    emit(o, feasibility_table(records));
    return kOk;
  }
  std::string lines;
  for (const auto& r : records) lines += to_json(r).dump() + "\n";
  emit(o, lines);
  return kOk;
}

int run_classify(const Options& o) {
  require_format(o, {"json", "table"});
  require(o.graph, "--graph");
  require(o.group, "--group");
  require(o.normal, "--normal");
  const FamilyInstance f = cli::load_family(o.graph);
  const PermGroup g = cli::load_group(o.group, cli::GroupRole::acting, &f);
  const PermGroup n = cli::load_group(o.normal, cli::GroupRole::normal, &f);
  const Classification c = classify_small_complete_quotient(f.graph, g, n);
  const ConstraintReport constraints = check_complete_quotient_constraints(
      c.b, c.m, c.ell, c.params.lambda, c.params.mu, c.tag == QuotientClass::complete_multipartite || c.tag == QuotientClass::complete_bipartite);
  if (!constraints.all_pass())
    throw TheoremViolation("necessary conditions fail for a complete normal quotient: " +
                           to_json(constraints).dump());
  Json j = to_json(c);
  j["constraints"] = to_json(constraints);
  if (o.format == "table")
    emit(o, std::string(to_string(c.tag)) + "\n" + c.label + "\n" + params_line(c.params) + "\n");
  else
    emit(o, dump(j));
  return kOk;
}

int run_falsify_holomorph(const Options& o) {
  require_format(o, {"json", "table"});
  require(o.table, "--table");
  require(o.group, "--group");
  const GroupTable t = cli::load_table(o.table);
  const PermGroup h = cli::load_group(o.group, cli::GroupRole::acting, nullptr);
  const HolomorphReport r = falsify_holomorph(t, h);
  if (!r.nonabelian_simple) std::cerr << "warning: T is not nonabelian simple\n";
  if (o.format == "table") {
    std::string text = "order " + std::to_string(r.group_order) + "\n";
    for (const auto& c : r.candidates)
      text += std::string(to_string(c.candidate.shape)) + " |S|=" + std::to_string(c.candidate.set.size()) + " " +
              (c.complete ? "complete" : c.params ? params_line(*c.params) : "not strongly regular") + "\n";
    emit(o, text);
  } else {
    emit(o, dump(to_json(r)));
  }
  for (const auto& c : r.candidates)
    if (!c.shape_verified) throw TheoremViolation("candidate does not split into H-orbits as tagged");
  if (const auto bad = r.violations(); !bad.empty()) {
    const auto& c = r.candidates[bad.front()];
    throw TheoremViolation("candidate of size " + std::to_string(c.candidate.set.size()) + " gives " +
                           params_line(*c.params));
  }
  return kOk;
}

int report_error(const Options& o, const std::string& kind, const std::string& message, int code) {
  if (o.json_errors)
    std::cerr << Json{{"error", kind}, {"message", message}, {"exit", code}}.dump() << "\n";
  else
    std::cerr << "nqr: " << kind << ": " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Normal quotient reduction tools for vertex- and edge-transitive strongly regular graphs"};
  app.require_subcommand(1);
  app.add_flag("--json-errors", o.json_errors, "Report errors as JSON on stderr");

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, dot, edges or table");
    sub->add_option("--out,--emit", o.out, "Write output to a file");
    sub->add_option("--cap", o.cap, "Cap on group orders");
    sub->add_flag("--json-errors", o.json_errors, "Report errors as JSON on stderr");
  };
  const auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "Family spec or graph JSON"); };
  const auto group_opt = [&](CLI::App* sub) { sub->add_option("--group", o.group, "Group spec or group JSON"); };
  const auto normal_opt = [&](CLI::App* sub) { sub->add_option("--normal", o.normal, "Normal subgroup spec"); };

  std::map<CLI::App*, int (*)(const Options&)> handlers;
  const auto verb = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[sub] = fn;
    return sub;
  };

  auto* family = verb("family", "Build a family graph", run_family);
  family->add_option("spec", o.family, "complete:n, multipartite:p,s, multipartite-minus:b, box:b, paley:q, kneser2:n")
      ->required();
  graph_opt(verb("verify-srg", "Strongly regular parameters and spectrum", run_verify_srg));
  auto* quotient = verb("quotient", "Normal quotient by N", run_quotient);
  graph_opt(quotient);
  normal_opt(quotient);
  auto* reduce = verb("reduce", "Reduction chain under G", run_reduce);
  graph_opt(reduce);
  group_opt(reduce);
  reduce->add_flag("--stop-at-cap", o.stop_at_cap, "End the chain instead of failing when |G| exceeds the cap");
  reduce->add_flag("--vertex-transitive-only", o.vertex_transitive_only, "Allow G that is not edge-transitive");
  auto* quasi = verb("quasiprimitive", "Quasiprimitivity of G", run_quasiprimitive);
  group_opt(quasi);
  graph_opt(quasi);
  auto* feas = verb("feasibility", "Sweep (m, l, r) for complete quotients", run_feasibility);
  feas->add_option("--m-max", o.m_max, "Largest m (default 8)")->check(CLI::PositiveNumber);
  feas->add_option("--l-max", o.l_max, "Largest l (default 8)")->check(CLI::PositiveNumber);
  feas->add_option("--r-max", o.r_max, "Largest r (default 8)")->check(CLI::PositiveNumber);
  for (auto* sub : {verb("lemma23", "Properties of the normal quotient", run_lemma23),
                    verb("classify", "Classify a complete normal quotient", run_classify)}) {
    graph_opt(sub);
    group_opt(sub);
    normal_opt(sub);
  }
  auto* holo = verb("falsify-holomorph", "Cayley candidates from holomorph orbits", run_falsify_holomorph);
  holo->add_option("--table", o.table, "builtin:A5, builtin:cyclic:n or table JSON");
  group_opt(holo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (app.get_subcommands().empty()) return kUsage;
  if (o.format == "json" && app.got_subcommand("feasibility") && app.get_subcommands().front()->count("--format") == 0)
    o.format = "table";

  try {
    return handlers.at(app.get_subcommands().front())(o);
  } catch (const ChainCapExceeded& e) {
    return report_error(o, "resource", e.what(), kResource);
  } catch (const TheoremViolation& e) {
    return report_error(o, e.kind(), e.what(), kViolation);
  } catch (const ResourceError& e) {
    return report_error(o, e.kind(), e.what(), kResource);
  } catch (const Error& e) {
    return report_error(o, e.kind(), e.what(), kUsage);
  } catch (const Json::exception& e) {
    return report_error(o, "parse", e.what(), kUsage);
  } catch (const std::exception& e) {
    return report_error(o, "error", e.what(), kUsage);
  }
}
