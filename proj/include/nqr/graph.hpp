#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nqr/rational.hpp"

namespace nqr {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Undirected simple graph on {0..n-1}; adjacency is one bit row per vertex.
 */
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws DomainError on an out-of-range endpoint or a loop; duplicates collapse.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Graph with u ~ v (u != v) exactly when adjacent(u, v); the predicate is
  /// evaluated for u < v only.
  template <typename Pred>
  static Graph from_predicate(std::size_t n, Pred&& adjacent) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (adjacent(u, v)) g.set_edge(u, v);
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  std::size_t degree(Vertex u) const;
  std::vector<Vertex> neighbours(Vertex u) const;
  std::size_t common_neighbours(Vertex u, Vertex v) const;

  /// All edges with u < v, ascending.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  const std::uint64_t* row(Vertex u) const noexcept { return bits_.data() + u * words_; }
  void set_edge(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Eigenvalue data of an srg other than the principal eigenvalue k.
struct SpectralData {
  Rational theta;
  Rational tau;
  Rational m_theta;
  Rational m_tau;
  BigInt discriminant;  // (lambda - mu)^2 + 4(k - mu)
  /// Complete graph: single non-principal eigenvalue -1, tau == theta, m_tau == 0.
  bool degenerate = false;
};

/// (n, k, lambda, mu) by exhaustive pair counting, or empty if not strongly
/// regular. K_n yields (n, n-1, n-2, 0); graphs on fewer than 2 vertices are
/// not classified.
std::optional<SrgParams> srg_params(const Graph& g);

/// Throws UnsupportedParameters when the discriminant is not a perfect square
/// or the parameters are degenerate (k == 0).
SpectralData spectral_data(const SrgParams& p);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
Graph complement(const Graph& g);

/// Eccentricity maximum over all vertices; empty when disconnected.
std::optional<std::size_t> diameter(const Graph& g);

struct MultipartiteShape {
  std::size_t parts = 0;
  std::size_t part_size = 0;
  friend bool operator==(const MultipartiteShape&, const MultipartiteShape&) = default;
};

/// (parts, size) if g is K_{parts[size]} with equal part sizes.
std::optional<MultipartiteShape> is_complete_multipartite(const Graph& g);

inline constexpr std::size_t kDefaultIsomorphismCap = 40;

/// Exact isomorphism test by refined backtracking. ResourceError if either
/// graph has more than `cap` vertices.
bool are_isomorphic_small(const Graph& a, const Graph& b, std::size_t cap = kDefaultIsomorphismCap);

}  // namespace nqr
