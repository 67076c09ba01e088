#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nqr/families.hpp"
#include "nqr/feasibility.hpp"
#include "nqr/galois.hpp"
#include "nqr/graph.hpp"
#include "nqr/permgrp.hpp"
#include "nqr/quotient.hpp"

namespace nqr {

using Json = nlohmann::ordered_json;

// Graph JSON: {"n": int, "edges": [[u, v], ...]} with u < v ascending.
Json to_json(const Graph& g);
/// Accepts a graph object or any object carrying one under "graph".
/// DomainError on schema violations.
Graph graph_from_json(const Json& j);

// Group JSON: {"degree": n, "generators": [[images...] | "(cycles)", ...]}.
Json to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

Json to_json(const FieldElem& e);
Json to_json(const FiniteField& f);
Json to_json(const VertexLabel& label);
Json to_json(const FamilyInstance& f);

Json to_json(const SrgParams& p);
Json to_json(const SpectralData& s);
Json to_json(const Lemma23Report& r);
Json to_json(const ConstraintReport& r);
Json to_json(const FeasibleRecord& r);
Json to_json(const Classification& c);

/// FNV-1a over the edge list, as 16 hex digits.
std::string graph_digest(const Graph& g);

/// Per-step digests, group orders, b, l, quotient properties, terminal reason.
Json to_json(const ReductionChain& chain);

/// `graph G {` then one `  i -- j;` per edge, ascending.
std::string to_dot(const Graph& g);
/// One "u v" line per edge, ascending.
std::string to_edge_list(const Graph& g);

std::string feasibility_table(const std::vector<FeasibleRecord>& records);

}  // namespace nqr
