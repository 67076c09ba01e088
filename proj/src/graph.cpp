#include "nqr/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "nqr/errors.hpp"

namespace nqr {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    g.set_edge(u, v);
  }
  return g;
}

void Graph::set_edge(Vertex u, Vertex v) {
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(u)[w]));
  return d;
}

std::vector<Vertex> Graph::neighbours(Vertex u) const {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = row(u)[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Graph::common_neighbours(Vertex u, Vertex v) const {
  std::size_t c = 0;
  const std::uint64_t* a = row(u);
  const std::uint64_t* b = row(v);
  for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbours(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

std::optional<SrgParams> srg_params(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (Vertex u = 1; u < n; ++u)
    if (g.degree(u) != k) return std::nullopt;

  const auto sn = static_cast<std::int64_t>(n);
  if (k == n - 1) return SrgParams{sn, sn - 1, sn - 2, 0};

  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = g.common_neighbours(u, v);
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  }
  return SrgParams{sn, static_cast<std::int64_t>(k), static_cast<std::int64_t>(lambda.value_or(0)),
                   static_cast<std::int64_t>(mu.value_or(0))};
}

SpectralData spectral_data(const SrgParams& p) {
  SpectralData s;
  if (p.k == p.n - 1) {
    s.theta = -1;
    s.tau = -1;
    s.m_theta = p.n - 1;
    s.m_tau = 0;
    s.discriminant = BigInt(p.n) * p.n;
    s.degenerate = true;
    return s;
  }
  if (p.k == 0) throw UnsupportedParameters("edgeless graph has no srg spectrum in scope");

  const BigInt diff = BigInt(p.lambda) - p.mu;
  s.discriminant = diff * diff + 4 * (BigInt(p.k) - p.mu);
  if (s.discriminant <= 0)
    throw UnsupportedParameters("discriminant " + s.discriminant.str() + " is not positive");
  const BigInt root = boost::multiprecision::sqrt(s.discriminant);
  if (root * root != s.discriminant)
    throw UnsupportedParameters("discriminant " + s.discriminant.str() +
                                " is not a perfect square (conference graph parameters)");

  s.theta = Rational(diff + root, 2);
  s.tau = Rational(diff - root, 2);
  const Rational n1 = p.n - 1;
  s.m_theta = (n1 * s.tau + p.k) / (s.tau - s.theta);
  s.m_tau = (n1 * s.theta + p.k) / (s.theta - s.tau);
  return s;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return diameter(g).has_value();
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u)
    if (g.degree(u) + 1 != n) return false;
  return true;
}

Graph complement(const Graph& g) {
  return Graph::from_predicate(g.order(), [&](Vertex u, Vertex v) { return !g.adjacent(u, v); });
}

std::optional<std::size_t> diameter(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    std::size_t reached = 1;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.neighbours(u)) {
        if (dist[v] != SIZE_MAX) continue;
        dist[v] = dist[u] + 1;
        best = std::max(best, dist[v]);
        ++reached;
        queue.push(v);
      }
    }
    if (reached != n) return std::nullopt;
  }
  return best;
}

std::optional<MultipartiteShape> is_complete_multipartite(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  // Non-adjacency (plus equality) must be an equivalence relation whose
  // classes all have the same size; cross pairs are then adjacent by definition.
  std::vector<std::int64_t> part(n, -1);
  std::vector<std::size_t> sizes;
  for (Vertex u = 0; u < n; ++u) {
    if (part[u] >= 0) continue;
    const auto id = static_cast<std::int64_t>(sizes.size());
    std::size_t size = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (v != u && g.adjacent(u, v)) continue;
      if (part[v] >= 0) return std::nullopt;
      part[v] = id;
      ++size;
    }
    sizes.push_back(size);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if ((part[u] == part[v]) == g.adjacent(u, v)) return std::nullopt;
  for (std::size_t s : sizes)
    if (s != sizes.front()) return std::nullopt;
  return MultipartiteShape{sizes.size(), sizes.front()};
}

}  // namespace nqr
