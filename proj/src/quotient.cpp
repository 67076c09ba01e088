#include "nqr/quotient.hpp"

#include <string>

namespace nqr {

namespace {

// Block index of every point; DomainError unless blocks partition 0..n-1.
std::vector<std::uint32_t> block_index(std::size_t n, const Partition& partition) {
  std::vector<std::uint32_t> owner(n, UINT32_MAX);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty()) throw DomainError("partition block " + std::to_string(i) + " is empty");
    for (Point x : partition[i]) {
      if (x >= n) throw DomainError("partition mentions point " + std::to_string(x) + " >= " + std::to_string(n));
      if (owner[x] != UINT32_MAX)
        throw DomainError("point " + std::to_string(x) + " lies in two partition blocks");
      owner[x] = static_cast<std::uint32_t>(i);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (owner[x] == UINT32_MAX)
      throw DomainError("partition does not cover point " + std::to_string(x));
  return owner;
}

bool has_intra_block_edge(const Graph& gamma, const std::vector<std::uint32_t>& owner) {
  for (const auto& [u, v] : gamma.edges())
    if (owner[u] == owner[v]) return true;
  return false;
}

}  // namespace

std::optional<std::size_t> multicover_degree(const Graph& gamma, const Partition& partition) {
  const auto owner = block_index(gamma.order(), partition);
  if (has_intra_block_edge(gamma, owner)) return std::nullopt;

  const std::size_t blocks = partition.size();
  std::vector<std::vector<bool>> linked(blocks, std::vector<bool>(blocks, false));
  for (const auto& [u, v] : gamma.edges()) {
    linked[owner[u]][owner[v]] = true;
    linked[owner[v]][owner[u]] = true;
  }

  std::optional<std::size_t> ell;
  std::vector<std::size_t> count(blocks);
  for (Vertex v = 0; v < gamma.order(); ++v) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex w : gamma.neighbours(v)) ++count[owner[w]];
    for (std::size_t blk = 0; blk < blocks; ++blk) {
      if (!linked[owner[v]][blk]) continue;
      if (!ell) ell = count[blk];
      if (count[blk] != *ell) return std::nullopt;
    }
  }
  if (ell && *ell == 0) return std::nullopt;
  return ell;
}

QuotientResult quotient_graph(const Graph& gamma, const PermGroup& n) {
  require_automorphisms(n, gamma);
  if (n.is_trivial()) throw DomainError("quotient by the trivial group requested");
  if (is_transitive(n)) throw DomainError("N is transitive: quotient undefined");

  QuotientResult r;
  r.orbits = orbit_partition(n);
  r.orbit_of.assign(gamma.order(), 0);
  for (std::size_t i = 0; i < r.orbits.size(); ++i)
    for (Point x : r.orbits[i]) r.orbit_of[x] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (const auto& [u, v] : gamma.edges())
    if (r.orbit_of[u] != r.orbit_of[v]) edges.emplace_back(r.orbit_of[u], r.orbit_of[v]);
  r.quotient = Graph::from_edges(r.orbits.size(), edges);

  r.b = r.orbits.front().size();
  for (const auto& o : r.orbits)
    if (o.size() != *r.b) r.b.reset();
  r.ell = multicover_degree(gamma, r.orbits);
  return r;
}

PermGroup induced_action(const PermGroup& g, const Partition& partition) {
  const auto owner = block_index(g.degree(), partition);
  std::vector<Permutation> gens;
  for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
    const Permutation& x = g.generators()[gi];
    std::vector<Point> images(partition.size());
    for (std::size_t blk = 0; blk < partition.size(); ++blk) {
      const std::uint32_t target = owner[x(partition[blk].front())];
      if (partition[target].size() != partition[blk].size())
        throw DomainError("generator " + std::to_string(gi) + " maps block " + std::to_string(blk) +
                          " onto a block of different size");
      for (Point p : partition[blk])
        if (owner[x(p)] != target)
          throw DomainError("generator " + std::to_string(gi) + " splits block " + std::to_string(blk) +
                            ": point " + std::to_string(partition[blk].front()) + " goes to block " +
                            std::to_string(target) + " but point " + std::to_string(p) +
                            " goes to block " + std::to_string(owner[x(p)]));
      images[blk] = target;
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(partition.size(), std::move(gens));
}

Lemma23Report check_lemma23(const Graph& gamma, const PermGroup& g, const PermGroup& n) {
  if (!is_connected(gamma)) throw DomainError("hypothesis failed: graph is not connected");
  require_automorphisms(g, gamma);
  if (!is_transitive(g)) throw DomainError("hypothesis failed: G is not vertex-transitive");
  if (!is_normal_in(n, g)) throw DomainError("hypothesis failed: N is not normal in G");
  if (n.is_trivial()) throw DomainError("hypothesis failed: N is trivial");
  if (is_transitive(n)) throw DomainError("hypothesis failed: N is transitive");

  const QuotientResult q = quotient_graph(gamma, n);
  const PermGroup induced = induced_action(g, q.orbits);
  const auto owner = block_index(gamma.order(), q.orbits);

  Lemma23Report report;
  report.connected = is_connected(q.quotient);
  report.vertex_transitive = is_transitive(induced);
  const auto dq = diameter(q.quotient);
  report.diameter_nonincreasing = dq.has_value() && *dq <= *diameter(gamma);
  report.no_intra_orbit_edges = !has_intra_block_edge(gamma, owner);
  report.edge_transitive = is_edge_transitive(induced, q.quotient);
  report.multicover = q.ell;
  return report;
}

Rational predicted_quotient_mu(std::int64_t b, std::int64_t mu, std::int64_t ell) {
  if (b <= 0 || mu <= 0 || ell <= 0) throw DomainError("predicted_quotient_mu needs positive b, mu, l");
  return Rational(BigInt(b) * mu, BigInt(ell) * ell);
}

std::string_view to_string(TerminalReason reason) {
  switch (reason) {
    case TerminalReason::complete: return "complete";
    case TerminalReason::quasiprimitive: return "quasiprimitive";
    case TerminalReason::no_normal_found_under_cap: return "no-normal-found-under-cap";
  }
  return "unknown";
}

namespace {

void assert_step(const Graph& current, const SrgParams& params, const QuotientResult& q) {
  const std::string where = "normal quotient on " + std::to_string(current.order()) + " vertices: ";
  if (!q.report->all_hold())
    throw TheoremViolation(where + "quotient properties fail for an edge-transitive G");
  const auto qp = srg_params(q.quotient);
  if (!qp || !is_connected(q.quotient))
    throw TheoremViolation(where + "quotient is not a connected strongly regular graph");
  if (params.k % static_cast<std::int64_t>(*q.ell) != 0)
    throw TheoremViolation(where + "multicover degree does not divide the valency");
  if (!is_complete(q.quotient)) {
    const Rational predicted = predicted_quotient_mu(static_cast<std::int64_t>(*q.b), params.mu,
                                                     static_cast<std::int64_t>(*q.ell));
    if (predicted != qp->mu)
      throw TheoremViolation(where + "quotient mu " + std::to_string(qp->mu) + " != b*mu/l^2 = " +
                             to_string(predicted));
  }
  if (q.quotient.order() == 2) {
    const auto shape = is_complete_multipartite(current);
    if (!shape || shape->parts != 2)
      throw TheoremViolation(where + "K_2 quotient but the graph is not complete bipartite");
  }
}

}  // namespace

ReductionChain reduce_chain(const Graph& gamma, const PermGroup& g, const ReduceOptions& options) {
  if (!is_connected(gamma)) throw DomainError("hypothesis failed: graph is not connected");
  if (!srg_params(gamma)) throw DomainError("hypothesis failed: graph is not strongly regular");
  require_automorphisms(g, gamma);
  if (!is_transitive(g)) throw DomainError("hypothesis failed: G is not vertex-transitive");
  if (!options.vertex_transitive_only && !is_edge_transitive(g, gamma))
    throw DomainError("hypothesis failed: G is not edge-transitive");

  ReductionChain chain;
  chain.edge_transitive_hypothesis = !options.vertex_transitive_only;
  Graph current = gamma;
  PermGroup group = g;
  for (;;) {
    if (is_complete(current)) {
      chain.reason = TerminalReason::complete;
      break;
    }
    const BigInt order = group_order(group);
    if (order > options.cap) {
      if (options.stop_at_cap) {
        chain.reason = TerminalReason::no_normal_found_under_cap;
        break;
      }
      chain.terminal = current;
      chain.terminal_group = group;
      chain.reason = TerminalReason::no_normal_found_under_cap;
      throw ChainCapExceeded("acting group of order " + order.str() + " exceeds the cap of " +
                                 std::to_string(options.cap) + " after " +
                                 std::to_string(chain.steps.size()) + " step(s)",
                             std::move(chain));
    }
    auto normal = find_intransitive_normal(group, options.cap);
    if (!normal) {
      chain.reason = TerminalReason::quasiprimitive;
      break;
    }
    QuotientResult q = quotient_graph(current, *normal);
    q.report = check_lemma23(current, group, *normal);
    if (!options.vertex_transitive_only) assert_step(current, *srg_params(current), q);

    PermGroup next_group = induced_action(group, q.orbits);
    Graph next_graph = q.quotient;
    chain.steps.push_back({current, group, *normal, std::move(q)});
    current = std::move(next_graph);
    group = std::move(next_group);
  }
  chain.terminal = current;
  chain.terminal_group = group;
  return chain;
}

}  // namespace nqr
