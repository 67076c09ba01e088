#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "nqr/errors.hpp"
#include "nqr/families.hpp"
#include "nqr/graph.hpp"
#include "oracles.hpp"

using namespace nqr;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(n, e);
}

Graph disjoint_triangles(std::size_t count) {
  std::vector<Edge> e;
  for (Vertex t = 0; t < count; ++t)
    for (Vertex i = 0; i < 3; ++i)
      for (Vertex j = i + 1; j < 3; ++j) e.emplace_back(3 * t + i, 3 * t + j);
  return Graph::from_edges(3 * count, e);
}

}  // namespace

TEST(FromEdges, Examples) {
  const auto k2 = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  EXPECT_TRUE(is_complete(k2));
  const auto c4 = cycle(4);
  EXPECT_EQ(c4.edge_count(), 4u);
  EXPECT_TRUE(c4.adjacent(3, 0));
  EXPECT_EQ(Graph::from_edges(3, std::vector<Edge>{}).edge_count(), 0u);
  EXPECT_EQ(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}}).edge_count(), 1u);
}

TEST(FromEdges, Errors) {
  EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), DomainError);
  EXPECT_THROW(Graph::from_edges(3, std::vector<Edge>{{1, 1}}), DomainError);
}

TEST(SrgParams, Examples) {
  EXPECT_EQ(srg_params(complete(5).graph), (SrgParams{5, 4, 3, 0}));
  EXPECT_EQ(srg_params(cartesian_square(4).graph), (SrgParams{16, 6, 2, 2}));
  EXPECT_EQ(srg_params(kneser2(5).graph), (SrgParams{10, 3, 0, 1}));
  EXPECT_FALSE(srg_params(path(3)));
  EXPECT_FALSE(srg_params(Graph(1)));
}

TEST(SrgParams, AgreesWithTripleLoopOracle) {
  for (const auto& [name, g] : oracle::corpus()) {
    EXPECT_EQ(srg_params(g), oracle::srg_params(g)) << name;
    const auto c = complement(g);
    EXPECT_EQ(srg_params(c), oracle::srg_params(c)) << "complement of " << name;
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    EXPECT_EQ(srg_params(path(n)), oracle::srg_params(path(n)));
    EXPECT_EQ(srg_params(cycle(n)), oracle::srg_params(cycle(n)));
  }
}

TEST(SpectralData, Examples) {
  const auto a = spectral_data({16, 6, 2, 2});
  EXPECT_EQ(a.theta, 2);
  EXPECT_EQ(a.tau, -2);
  EXPECT_EQ(a.m_theta, 6);
  EXPECT_EQ(a.m_tau, 9);
  EXPECT_EQ(a.discriminant, 16);
  const auto b = spectral_data({9, 4, 1, 2});
  EXPECT_EQ(b.theta, 1);
  EXPECT_EQ(b.tau, -2);
  EXPECT_EQ(b.m_theta, 4);
  EXPECT_EQ(b.m_tau, 4);
  const auto k5 = spectral_data({5, 4, 3, 0});
  EXPECT_TRUE(k5.degenerate);
  EXPECT_EQ(k5.theta, -1);
  EXPECT_EQ(k5.m_theta, 4);
  EXPECT_EQ(k5.m_tau, 0);
}

TEST(SpectralData, RejectsConferenceAndDegenerate) {
  EXPECT_THROW(spectral_data({5, 2, 0, 1}), UnsupportedParameters);
  EXPECT_THROW(spectral_data({13, 6, 2, 3}), UnsupportedParameters);
  EXPECT_THROW(spectral_data({4, 0, 0, 0}), UnsupportedParameters);
}

TEST(SpectralData, TraceIdentitiesOnCorpus) {
  for (const auto& [name, g] : oracle::corpus()) {
    const auto p = srg_params(g);
    ASSERT_TRUE(p) << name;
    SpectralData s;
    try {
      s = spectral_data(*p);
    } catch (const UnsupportedParameters&) {
      continue;
    }
    EXPECT_GE(s.m_theta, 0) << name;
    EXPECT_GE(s.m_tau, 0) << name;
    EXPECT_EQ(s.m_theta + s.m_tau + 1, p->n) << name;
    EXPECT_EQ(Rational(p->k) + s.m_theta * s.theta + s.m_tau * s.tau, 0) << name;
  }
}

TEST(SrgProperty, CountingIdentityOnConnectedNonComplete) {
  for (const auto& [name, g] : oracle::corpus()) {
    if (!is_connected(g) || is_complete(g)) continue;
    const auto p = srg_params(g);
    ASSERT_TRUE(p) << name;
    EXPECT_EQ(p->k * (p->k - p->lambda - 1), p->mu * (p->n - p->k - 1)) << name;
    EXPECT_GE(p->lambda, 0);
    EXPECT_LE(p->lambda, p->k - 1);
    EXPECT_LE(p->mu, p->k);
  }
}

TEST(SrgProperty, PairCountsAreExact) {
  for (const auto& [name, g] : oracle::corpus()) {
    const auto p = srg_params(g);
    ASSERT_TRUE(p);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        ASSERT_EQ(static_cast<std::int64_t>(g.common_neighbours(u, v)), g.adjacent(u, v) ? p->lambda : p->mu)
            << name;
  }
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(cycle(4)));
  EXPECT_FALSE(is_connected(disjoint_triangles(2)));
  EXPECT_EQ(complement(complete_multipartite(3, 3).graph), disjoint_triangles(3));
  EXPECT_EQ(diameter(cycle(6)), 3u);
  EXPECT_FALSE(diameter(disjoint_triangles(2)));
}

TEST(Complement, Involution) {
  for (const auto& [name, g] : oracle::corpus()) {
    const auto c = complement(g);
    EXPECT_EQ(complement(c), g) << name;
    for (Vertex v = 0; v < c.order(); ++v) EXPECT_FALSE(c.adjacent(v, v));
    EXPECT_EQ(c.edge_count() + g.edge_count(), g.order() * (g.order() - 1) / 2);
  }
}

TEST(CompleteMultipartite, Examples) {
  EXPECT_EQ(is_complete_multipartite(complete_multipartite(3, 4).graph), (MultipartiteShape{3, 4}));
  EXPECT_FALSE(is_complete_multipartite(cartesian_square(4).graph));
  EXPECT_EQ(is_complete_multipartite(complete(6).graph), (MultipartiteShape{6, 1}));
  EXPECT_FALSE(is_complete_multipartite(path(3)));
}

TEST(Isomorphism, Examples) {
  const auto box3 = cartesian_square(3).graph;
  EXPECT_TRUE(are_isomorphic_small(box3, paley(9).graph));
  EXPECT_TRUE(are_isomorphic_small(box3, multipartite_minus(3).graph));
  EXPECT_FALSE(are_isomorphic_small(cycle(5), path(5)));
  EXPECT_FALSE(are_isomorphic_small(cartesian_square(4).graph, multipartite_minus(4).graph));
}

TEST(Isomorphism, DistinguishesSameParameters) {
  // Both cubic on 6 vertices with equal degree sequences.
  const auto prism = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  const auto k33 = complete_multipartite(2, 3).graph;
  EXPECT_FALSE(are_isomorphic_small(prism, k33));
  EXPECT_TRUE(are_isomorphic_small(prism, prism));
}

TEST(Isomorphism, RelabelledCopies) {
  std::mt19937 rng(3);
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.order() > 40) continue;
    std::vector<Vertex> perm(g.order());
    for (Vertex i = 0; i < g.order(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    EXPECT_TRUE(are_isomorphic_small(g, Graph::from_edges(g.order(), e))) << name;
  }
}

TEST(Isomorphism, Cap) {
  EXPECT_THROW(are_isomorphic_small(cartesian_square(7).graph, cartesian_square(7).graph), ResourceError);
  EXPECT_NO_THROW(are_isomorphic_small(cartesian_square(7).graph, cartesian_square(7).graph, 49));
}
