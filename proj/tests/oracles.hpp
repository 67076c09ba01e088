#pragma once

#include <optional>
#include <vector>

#include "nqr/families.hpp"
#include "nqr/graph.hpp"

namespace oracle {

// Triple-loop srg counter over an adjacency matrix, sharing no code with the
// bit-row implementation.
inline std::optional<nqr::SrgParams> srg_params(const nqr::Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  long k = -1, lambda = -1, mu = -1;
  for (std::size_t u = 0; u < n; ++u) {
    long deg = 0;
    for (std::size_t v = 0; v < n; ++v) deg += adj[u][v];
    if (k < 0) k = deg;
    if (deg != k) return std::nullopt;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      long common = 0;
      for (std::size_t w = 0; w < n; ++w) common += adj[u][w] & adj[v][w];
      long& slot = adj[u][v] ? lambda : mu;
      if (slot < 0) slot = common;
      if (slot != common) return std::nullopt;
    }
  return nqr::SrgParams{static_cast<std::int64_t>(n), k, lambda < 0 ? 0 : lambda, mu < 0 ? 0 : mu};
}

struct CorpusGraph {
  std::string name;
  nqr::Graph graph;
};

inline std::vector<CorpusGraph> corpus() {
  using namespace nqr;
  std::vector<CorpusGraph> out;
  for (std::size_t n : {2u, 5u, 8u}) out.push_back({"complete:" + std::to_string(n), complete(n).graph});
  for (std::size_t b = 2; b <= 7; ++b) out.push_back({"box:" + std::to_string(b), cartesian_square(b).graph});
  for (std::size_t b = 3; b <= 6; ++b)
    out.push_back({"multipartite-minus:" + std::to_string(b), multipartite_minus(b).graph});
  for (auto [p, s] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {3, 2}, {3, 3}, {3, 4}, {4, 3}})
    out.push_back({"multipartite:" + std::to_string(p) + "," + std::to_string(s), complete_multipartite(p, s).graph});
  for (std::uint64_t q : {5u, 9u, 13u, 17u, 25u}) out.push_back({"paley:" + std::to_string(q), paley(q).graph});
  for (std::size_t n : {5u, 6u, 7u, 8u}) out.push_back({"kneser2:" + std::to_string(n), kneser2(n).graph});
  const std::vector<std::uint32_t> odd{1, 3, 5, 7};
  out.push_back({"cayley:Z8", cayley_graph(cyclic_group_table(8), odd).graph});
  return out;
}

}  // namespace oracle
