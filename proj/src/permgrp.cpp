#include "nqr/permgrp.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>

#include "nqr/errors.hpp"

namespace nqr {

struct PermGroup::ChainCell {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cell_(std::make_shared<ChainCell>()) {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].degree() != degree_)
      throw DomainError("generator " + std::to_string(i) + " has degree " +
                        std::to_string(generators_[i].degree()) + ", expected " +
                        std::to_string(degree_));
  if (generators_.empty()) generators_.push_back(Permutation::identity(degree_));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(degree, {Permutation::identity(degree)});
}

bool PermGroup::is_trivial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Permutation& g) { return g.is_identity(); });
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cell_->once, [this] {
    cell_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
  });
  return *cell_->chain;
}

std::vector<Point> orbit(const PermGroup& g, Point point) {
  if (point >= g.degree())
    throw DomainError("point " + std::to_string(point) + " outside 0.." +
                      std::to_string(g.degree()) + "-1");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& gen : g.generators()) {
      const Point y = gen(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> orbit_partition(const PermGroup& g) {
  std::vector<bool> covered(g.degree(), false);
  std::vector<std::vector<Point>> parts;
  for (Point x = 0; x < g.degree(); ++x) {
    if (covered[x]) continue;
    parts.push_back(orbit(g, x));
    for (Point y : parts.back()) covered[y] = true;
  }
  return parts;
}

bool is_transitive(const PermGroup& g) {
  if (g.degree() == 0) return false;
  return orbit(g, 0).size() == g.degree();
}

std::vector<Permutation> enumerate_elements(const PermGroup& g, std::uint64_t cap) {
  std::set<Permutation> seen{Permutation::identity(g.degree())};
  std::vector<Permutation> frontier{Permutation::identity(g.degree())};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& gen : g.generators()) {
        Permutation y = x * gen;
        if (seen.insert(y).second) {
          if (seen.size() > cap)
            throw ResourceError("group exceeds the enumeration cap of " + std::to_string(cap) +
                                " elements");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

BigInt group_order(const PermGroup& g, OrderMethod method, std::uint64_t cap) {
  if (method == OrderMethod::enumeration) return BigInt(enumerate_elements(g, cap).size());
  return g.chain().order();
}

bool contains(const PermGroup& g, const Permutation& p) {
  if (p.degree() != g.degree())
    throw DomainError("membership test: permutation degree " + std::to_string(p.degree()) +
                      " differs from group degree " + std::to_string(g.degree()));
  return g.chain().contains(p);
}

bool contains_by_enumeration(const PermGroup& g, const Permutation& p, std::uint64_t cap) {
  if (p.degree() != g.degree())
    throw DomainError("membership test: permutation degree " + std::to_string(p.degree()) +
                      " differs from group degree " + std::to_string(g.degree()));
  const auto elements = enumerate_elements(g, cap);
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  if (n.degree() != g.degree())
    throw DomainError("normality test: degrees " + std::to_string(n.degree()) + " and " +
                      std::to_string(g.degree()) + " differ");
  for (std::size_t i = 0; i < n.generators().size(); ++i)
    if (!contains(g, n.generators()[i]))
      throw DomainError("normality test: generator " + std::to_string(i) + " " +
                        n.generators()[i].to_cycles() + " of N is not in G");
  for (const auto& x : g.generators())
    for (const auto& y : n.generators())
      if (!contains(n, conjugate(y, x))) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, const Permutation& p) {
  if (p.is_identity()) throw DomainError("normal closure of the identity requested");
  if (!contains(g, p)) throw DomainError("normal closure: " + p.to_cycles() + " is not in G");
  std::vector<Permutation> gens{p};
  PermGroup closure(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = conjugate(gens[i], x);
      if (contains(closure, c)) continue;
      gens.push_back(std::move(c));
      closure = PermGroup(g.degree(), gens);
    }
  }
  return closure;
}

std::optional<Edge> automorphism_violation(const Graph& gamma, const Permutation& p) {
  for (const auto& [u, v] : gamma.edges())
    if (!gamma.adjacent(p(u), p(v))) return Edge{u, v};
  return std::nullopt;
}

void require_automorphisms(const PermGroup& g, const Graph& gamma) {
  if (g.degree() != gamma.order())
    throw DomainError("group degree " + std::to_string(g.degree()) + " differs from vertex count " +
                      std::to_string(gamma.order()));
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (auto bad = automorphism_violation(gamma, g.generators()[i]))
      throw DomainError("generator " + std::to_string(i) + " " + g.generators()[i].to_cycles() +
                        " is not an automorphism: edge {" +
                        std::to_string(bad->first) + "," + std::to_string(bad->second) +
                        "} maps to a non-edge");
  }
}

bool is_edge_transitive(const PermGroup& g, const Graph& gamma) {
  require_automorphisms(g, gamma);
  const auto edges = gamma.edges();
  if (edges.empty()) return true;
  auto index_of = [&](Vertex a, Vertex b) {
    const Edge e = a < b ? Edge{a, b} : Edge{b, a};
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };
  std::vector<bool> seen(edges.size(), false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [u, v] = edges[queue[i]];
    for (const auto& gen : g.generators()) {
      const std::size_t j = index_of(gen(u), gen(v));
      if (!seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  return queue.size() == edges.size();
}

std::vector<PrimeClass> prime_order_classes(const PermGroup& g, std::uint64_t cap) {
  const StabilizerChain& chain = g.chain();
  const BigInt order = chain.order();
  if (order > cap)
    throw ResourceError("group order " + order.str() + " exceeds the cap of " + std::to_string(cap));
  const auto total = order.convert_to<std::uint64_t>();

  std::vector<bool> visited(total, false);
  std::vector<PrimeClass> classes;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (visited[r]) continue;
    Permutation x = chain.unrank(r);
    const std::uint32_t p = x.prime_order();
    if (p == 0) continue;

    PrimeClass cls{x, p, 0};
    visited[r] = true;
    std::vector<Permutation> queue{std::move(x)};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& gen : g.generators()) {
        Permutation y = conjugate(queue[i], gen);
        const std::uint64_t ry = *chain.rank(y);
        if (visited[ry]) continue;
        visited[ry] = true;
        if (y < cls.least) cls.least = y;
        queue.push_back(std::move(y));
      }
    }
    cls.size = queue.size();
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const PrimeClass& a, const PrimeClass& b) { return a.least < b.least; });
  return classes;
}

bool is_quasiprimitive(const PermGroup& g, std::uint64_t cap) {
  if (!is_transitive(g)) throw DomainError("quasiprimitivity is defined for transitive groups only");
  // Every nontrivial normal subgroup contains a prime-order element, and the
  // normal closure of an element depends only on its conjugacy class.
  for (const auto& cls : prime_order_classes(g, cap))
    if (!is_transitive(normal_closure(g, cls.least))) return false;
  return true;
}

std::optional<PermGroup> find_intransitive_normal(const PermGroup& g, std::uint64_t cap) {
  for (const auto& cls : prime_order_classes(g, cap)) {
    PermGroup closure = normal_closure(g, cls.least);
    if (!is_transitive(closure)) return closure;
  }
  return std::nullopt;
}

}  // namespace nqr
