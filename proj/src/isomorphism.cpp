#include <algorithm>
#include <array>
#include <string>

#include "nqr/errors.hpp"
#include "nqr/graph.hpp"

namespace nqr {

namespace {

// Per-vertex invariant: degree, triangles through v, vertices at distance two.
using Signature = std::array<std::size_t, 3>;

std::vector<Signature> signatures(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Signature> sig(n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t triangles = 0;
    std::size_t second = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      const std::size_t c = g.common_neighbours(u, v);
      if (g.adjacent(u, v)) triangles += c;
      else if (c > 0) ++second;
    }
    sig[v] = {g.degree(v), triangles / 2, second};
  }
  return sig;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<Signature> sa, std::vector<Signature> sb)
      : a_(a), b_(b), sig_a_(std::move(sa)), sig_b_(std::move(sb)), map_(a.order(), 0),
        used_(a.order(), false) {
    order_vertices();
  }

  bool run() { return extend(0); }

 private:
  void order_vertices() {
    const std::size_t n = a_.order();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = 0;
      bool found = false;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (!found || links[v] > links[best]) {
          best = v;
          found = true;
        }
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex u : a_.neighbours(best)) ++links[u];
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_[w] || sig_a_[v] != sig_b_[w]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d)
        consistent = a_.adjacent(v, order_[d]) == b_.adjacent(w, map_[order_[d]]);
      if (!consistent) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

bool are_isomorphic_small(const Graph& a, const Graph& b, std::size_t cap) {
  if (a.order() > cap || b.order() > cap)
    throw ResourceError("isomorphism test limited to " + std::to_string(cap) + " vertices (got " +
                        std::to_string(a.order()) + " and " + std::to_string(b.order()) + ")");
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;

  auto sa = signatures(a);
  auto sb = signatures(b);
  auto sorted_a = sa;
  auto sorted_b = sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;

  return Matcher(a, b, std::move(sa), std::move(sb)).run();
}

}  // namespace nqr
