#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nqr/errors.hpp"
#include "nqr/graph.hpp"
#include "nqr/permgrp.hpp"
#include "nqr/rational.hpp"

namespace nqr {

using Partition = std::vector<std::vector<Point>>;

/// Properties of a normal quotient, each computed directly on the quotient.
struct Lemma23Report {
  bool connected = false;
  bool vertex_transitive = false;
  bool diameter_nonincreasing = false;
  bool no_intra_orbit_edges = false;
  bool edge_transitive = false;
  std::optional<std::size_t> multicover;

  bool all_hold() const {
    return connected && vertex_transitive && diameter_nonincreasing && no_intra_orbit_edges &&
           edge_transitive && multicover.has_value();
  }
};

struct QuotientResult {
  Graph quotient;
  std::vector<Vertex> orbit_of;  // vertex -> quotient vertex
  Partition orbits;              // quotient vertex -> orbit, canonical order
  std::optional<std::size_t> b;  // common orbit size, absent if sizes differ
  std::optional<std::size_t> ell;
  std::optional<Lemma23Report> report;
};

/// Graph on the orbits of N; distinct orbits adjacent iff some edge joins them.
/// DomainError if N is trivial, transitive, or not a group of automorphisms.
QuotientResult quotient_graph(const Graph& gamma, const PermGroup& n);

/// The constant l such that every vertex has exactly l neighbours in each
/// block adjacent to its own, or empty. A partition whose blocks contain
/// edges is not a multicover. DomainError unless `partition` partitions V.
std::optional<std::size_t> multicover_degree(const Graph& gamma, const Partition& partition);

/// DomainError naming the failed hypothesis if gamma is disconnected, G is
/// not a vertex-transitive automorphism group, or N is not a nontrivial
/// intransitive normal subgroup of G.
Lemma23Report check_lemma23(const Graph& gamma, const PermGroup& g, const PermGroup& n);

/// b*mu / l^2.
Rational predicted_quotient_mu(std::int64_t b, std::int64_t mu, std::int64_t ell);

/// Action of G on the blocks of `partition`, by block index. DomainError with
/// a witness if some generator splits a block.
PermGroup induced_action(const PermGroup& g, const Partition& partition);

enum class TerminalReason { complete, quasiprimitive, no_normal_found_under_cap };

std::string_view to_string(TerminalReason reason);

struct ReductionStep {
  Graph graph;
  PermGroup group;
  PermGroup normal;
  QuotientResult result;
};

struct ReductionChain {
  std::vector<ReductionStep> steps;
  Graph terminal;
  PermGroup terminal_group{PermGroup::trivial(0)};
  TerminalReason reason = TerminalReason::complete;
  bool edge_transitive_hypothesis = true;
};

struct ReduceOptions {
  std::uint64_t cap = kDefaultGroupCap;
  /// End with no_normal_found_under_cap instead of throwing when |G| > cap.
  bool stop_at_cap = false;
  /// Accept a vertex-transitive G that is not edge-transitive; quotient
  /// properties are then reported but not asserted.
  bool vertex_transitive_only = false;
};

/// Thrown when the acting group outgrows the cap part-way through a chain.
class ChainCapExceeded : public ResourceError {
 public:
  ChainCapExceeded(const std::string& what, ReductionChain partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  const ReductionChain& partial() const noexcept { return partial_; }

 private:
  ReductionChain partial_;
};

/// Repeated normal quotients of a connected ve-srg under the supplied G and
/// the groups it induces. Each step is checked against the quotient theory;
/// a failure throws TheoremViolation.
ReductionChain reduce_chain(const Graph& gamma, const PermGroup& g, const ReduceOptions& options = {});

}  // namespace nqr
