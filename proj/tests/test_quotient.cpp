#include <gtest/gtest.h>

#include "nqr/errors.hpp"
#include "nqr/families.hpp"
#include "nqr/quotient.hpp"

using namespace nqr;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph k44() {
  const std::vector<std::uint32_t> odd{1, 3, 5, 7};
  return cayley_graph(cyclic_group_table(8), odd).graph;
}

// S_b x 1 on the first coordinate of K_b box K_b.
PermGroup first_coordinate_symmetric(std::size_t b) {
  std::vector<Permutation> gens;
  for (int which = 0; which < 2; ++which) {
    std::vector<Point> img(b * b);
    for (std::size_t i = 0; i < b; ++i) {
      const std::size_t to = which == 0 ? (i < 2 ? 1 - i : i) : (i + 1) % b;
      for (std::size_t j = 0; j < b; ++j) img[i * b + j] = static_cast<Point>(to * b + j);
    }
    gens.emplace_back(img);
  }
  return PermGroup(b * b, gens);
}

struct Case {
  std::string name;
  Graph graph;
  PermGroup group;
};

std::vector<Case> ve_corpus() {
  std::vector<Case> out;
  for (std::size_t b : {3u, 4u, 5u, 7u})
    out.push_back({"box:" + std::to_string(b), cartesian_square(b).graph, cartesian_reduction_groups(b).g});
  for (std::size_t b : {3u, 4u}) {
    const auto f = multipartite_minus(b);
    out.push_back({"multipartite-minus:" + std::to_string(b), f.graph, f.group("fullB")});
  }
  out.push_back({"K44", k44(), cyclic_affine(8)});
  for (std::uint64_t q : {9u, 13u, 25u}) {
    const auto f = paley(q);
    out.push_back({"paley:" + std::to_string(q), f.graph, f.group("affineSquares")});
  }
  for (auto [p, s] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {2, 4}, {4, 2}}) {
    const auto f = complete_multipartite(p, s);
    out.push_back({"multipartite:" + std::to_string(p) + "," + std::to_string(s), f.graph, f.group("wreath")});
  }
  out.push_back({"kneser2:6", kneser2(6).graph, kneser2(6).group("symmetric")});
  return out;
}

}  // namespace

TEST(QuotientGraph, Examples) {
  const auto box3 = cartesian_square(3);
  const auto q1 = quotient_graph(box3.graph, box3.group("diagonalN"));
  EXPECT_TRUE(is_complete(q1.quotient));
  EXPECT_EQ(q1.quotient.order(), 3u);
  EXPECT_EQ(q1.b, 3u);
  EXPECT_EQ(q1.ell, 2u);

  const auto q2 = quotient_graph(k44(), cyclic_translations(8, 4));
  EXPECT_TRUE(are_isomorphic_small(q2.quotient, cycle(4)));
  EXPECT_EQ(q2.b, 2u);
  EXPECT_EQ(q2.ell, 2u);

  const auto box6 = cartesian_square(6);
  const auto q3 = quotient_graph(box6.graph, first_coordinate_symmetric(6));
  EXPECT_TRUE(is_complete(q3.quotient));
  EXPECT_EQ(q3.quotient.order(), 6u);
  EXPECT_FALSE(q3.ell);
}

TEST(QuotientGraph, OrbitOfIsConsistent) {
  const auto box4 = cartesian_square(4);
  const auto q = quotient_graph(box4.graph, box4.group("diagonalN"));
  for (std::size_t i = 0; i < q.orbits.size(); ++i)
    for (auto v : q.orbits[i]) EXPECT_EQ(q.orbit_of[v], i);
}

TEST(QuotientGraph, Errors) {
  const auto box3 = cartesian_square(3);
  EXPECT_THROW(quotient_graph(box3.graph, PermGroup::trivial(9)), DomainError);
  EXPECT_THROW(quotient_graph(box3.graph, box3.group("translations")), DomainError);
  EXPECT_THROW(quotient_graph(cycle(4), PermGroup(4, {Permutation::from_cycles(4, "(0 1)")})), DomainError);
}

TEST(QuotientGraph, NonUniformFibers) {
  const auto p3 = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto q = quotient_graph(p3, PermGroup(3, {Permutation::from_cycles(3, "(0 2)")}));
  EXPECT_FALSE(q.b);
  EXPECT_EQ(q.quotient.order(), 2u);
}

TEST(Multicover, Examples) {
  const auto box4 = cartesian_square(4);
  EXPECT_EQ(multicover_degree(box4.graph, orbit_partition(box4.group("diagonalN"))), 2u);
  EXPECT_EQ(multicover_degree(cycle(4), {{0, 2}, {1, 3}}), 2u);
  const auto p3 = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_FALSE(multicover_degree(p3, {{0, 2}, {1}}));
}

TEST(Multicover, InvalidPartition) {
  EXPECT_THROW(multicover_degree(cycle(4), {{0, 1}, {1, 2, 3}}), DomainError);
  EXPECT_THROW(multicover_degree(cycle(4), {{0, 1}, {2}}), DomainError);
  EXPECT_THROW(multicover_degree(cycle(4), {{0, 1}, {2, 3}, {}}), DomainError);
  EXPECT_THROW(multicover_degree(cycle(4), {{0, 1}, {2, 7}}), DomainError);
}

TEST(Lemma23, Examples) {
  const auto rg = cartesian_reduction_groups(5);
  const auto r1 = check_lemma23(cartesian_square(5).graph, rg.g, rg.n);
  EXPECT_TRUE(r1.all_hold());
  EXPECT_EQ(r1.multicover, 2u);

  const auto r2 = check_lemma23(k44(), cyclic_dihedral(8), cyclic_translations(8, 4));
  EXPECT_TRUE(r2.all_hold());
  EXPECT_EQ(r2.multicover, 2u);

  const auto box6 = cartesian_square(6);
  const auto r3 = check_lemma23(box6.graph, box6.group("fullB"), first_coordinate_symmetric(6));
  EXPECT_TRUE(r3.connected);
  EXPECT_TRUE(r3.vertex_transitive);
  EXPECT_TRUE(r3.diameter_nonincreasing);
  EXPECT_FALSE(r3.no_intra_orbit_edges);
  EXPECT_FALSE(r3.all_hold());
}

TEST(Lemma23, HypothesisErrors) {
  const auto box4 = cartesian_square(4);
  const auto rg = cartesian_reduction_groups(4);
  // N not normal.
  EXPECT_THROW(check_lemma23(box4.graph, box4.group("wreath"), box4.group("diagonalN")), DomainError);
  // G not transitive.
  EXPECT_THROW(check_lemma23(box4.graph, rg.n, rg.n), DomainError);
  // Disconnected graph.
  const auto m2 = multipartite_minus(2);
  EXPECT_THROW(check_lemma23(m2.graph, m2.group("fullB"), m2.group("partN")), DomainError);
}

TEST(PredictedMu, Examples) {
  EXPECT_EQ(predicted_quotient_mu(2, 4, 2), 2);
  EXPECT_EQ(predicted_quotient_mu(3, 2, 2), Rational(3, 2));
  EXPECT_EQ(predicted_quotient_mu(7, 5, 1), 35);
  EXPECT_THROW(predicted_quotient_mu(0, 1, 1), DomainError);
  EXPECT_THROW(predicted_quotient_mu(2, 1, 0), DomainError);
}

TEST(InducedAction, Examples) {
  const auto z8 = cyclic_translations(8);
  const auto induced = induced_action(z8, orbit_partition(cyclic_translations(8, 4)));
  EXPECT_EQ(induced.degree(), 4u);
  EXPECT_TRUE(is_transitive(induced));
  EXPECT_EQ(group_order(induced), 4);

  const auto rg = cartesian_reduction_groups(4);
  const auto on_lines = induced_action(rg.g, orbit_partition(rg.n));
  EXPECT_TRUE(is_transitive(on_lines));
  EXPECT_EQ(group_order(on_lines), 12);

  Partition singletons;
  for (Point i = 0; i < 8; ++i) singletons.push_back({i});
  EXPECT_EQ(induced_action(z8, singletons).generators(), z8.generators());

  EXPECT_THROW(induced_action(z8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}), DomainError);
}

TEST(ReduceChain, Examples) {
  const auto c1 = reduce_chain(cartesian_square(4).graph, cartesian_reduction_groups(4).g);
  ASSERT_EQ(c1.steps.size(), 1u);
  EXPECT_EQ(c1.reason, TerminalReason::complete);
  EXPECT_TRUE(are_isomorphic_small(c1.terminal, complete(4).graph));

  const auto box6 = cartesian_square(6);
  const auto c2 = reduce_chain(box6.graph, box6.group("wreath"));
  EXPECT_TRUE(c2.steps.empty());
  EXPECT_EQ(c2.reason, TerminalReason::quasiprimitive);

  const auto k5 = complete(5);
  const auto c3 = reduce_chain(k5.graph, k5.group("symmetric"));
  EXPECT_TRUE(c3.steps.empty());
  EXPECT_EQ(c3.reason, TerminalReason::complete);
}

TEST(ReduceChain, Hypotheses) {
  const auto box6 = cartesian_square(6);
  EXPECT_THROW(reduce_chain(box6.graph, box6.group("fullB")), DomainError);
  ReduceOptions vt;
  vt.vertex_transitive_only = true;
  const auto c = reduce_chain(box6.graph, box6.group("fullB"), vt);
  EXPECT_FALSE(c.edge_transitive_hypothesis);
  EXPECT_FALSE(c.steps.empty());
  EXPECT_EQ(reduce_chain(cycle(5), cyclic_dihedral(5)).reason, TerminalReason::quasiprimitive);
  EXPECT_THROW(reduce_chain(cycle(6), cyclic_dihedral(6)), DomainError);
}

TEST(ReduceChain, CapHandling) {
  const auto box5 = cartesian_square(5).graph;
  const auto g = cartesian_reduction_groups(5).g;
  ReduceOptions small;
  small.cap = 100;
  try {
    reduce_chain(box5, g, small);
    FAIL() << "expected ChainCapExceeded";
  } catch (const ChainCapExceeded& e) {
    EXPECT_TRUE(e.partial().steps.empty());
  }
  small.stop_at_cap = true;
  const auto c = reduce_chain(box5, g, small);
  EXPECT_EQ(c.reason, TerminalReason::no_normal_found_under_cap);
}

TEST(QuotientProperty, CorpusChains) {
  for (const auto& [name, graph, group] : ve_corpus()) {
    const auto chain = reduce_chain(graph, group);
    std::size_t previous = graph.order();
    for (const auto& step : chain.steps) {
      const auto& q = step.result;
      ASSERT_TRUE(q.b && q.ell) << name;
      EXPECT_LT(q.quotient.order(), previous) << name;
      previous = q.quotient.order();

      const auto p = srg_params(step.graph);
      const auto pq = srg_params(q.quotient);
      ASSERT_TRUE(p && pq) << name;
      EXPECT_TRUE(is_connected(q.quotient)) << name;
      EXPECT_EQ(p->k % static_cast<std::int64_t>(*q.ell), 0) << name;
      EXPECT_EQ(static_cast<std::int64_t>(*q.ell) * pq->k, p->k) << name;
      if (!is_complete(q.quotient)) {
        EXPECT_EQ(Rational(pq->mu), predicted_quotient_mu(static_cast<std::int64_t>(*q.b), p->mu,
                                                          static_cast<std::int64_t>(*q.ell)))
            << name;
      }
      if (q.quotient.order() == 2) {
        const auto shape = is_complete_multipartite(step.graph);
        ASSERT_TRUE(shape) << name;
        EXPECT_EQ(shape->parts, 2u) << name;
      }
      ASSERT_TRUE(q.report) << name;
      EXPECT_TRUE(q.report->all_hold()) << name;
    }
  }
}

TEST(QuotientProperty, CompleteBipartiteFromTwoVertexQuotient) {
  const auto q = quotient_graph(k44(), cyclic_translations(8, 2));
  EXPECT_EQ(q.quotient.order(), 2u);
  EXPECT_EQ(is_complete_multipartite(k44()), (MultipartiteShape{2, 4}));
  const auto r = check_lemma23(k44(), cyclic_affine(8), cyclic_translations(8, 2));
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.multicover, 4u);
}
