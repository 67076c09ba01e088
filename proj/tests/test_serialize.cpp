#include <gtest/gtest.h>

#include "nqr/errors.hpp"
#include "nqr/serialize.hpp"

using namespace nqr;

TEST(GraphJson, RoundTrip) {
  const auto g = cartesian_square(3).graph;
  const auto j = to_json(g);
  EXPECT_EQ(j.at("n"), 9);
  EXPECT_EQ(j.at("edges").size(), 18u);
  EXPECT_EQ(j.at("edges")[0], Json::array({0, 1}));
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_EQ(graph_from_json(Json::parse(j.dump())), g);
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 3})")), DomainError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 5]]})")), DomainError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0]]})")), DomainError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": -1, "edges": []})")), DomainError);
  EXPECT_THROW(graph_from_json(Json::parse("[1, 2]")), DomainError);
}

TEST(GroupJson, ImagesAndCycles) {
  const auto g = group_from_json(Json::parse(R"j({"degree": 4, "generators": [[1, 2, 3, 0], "(0 2)"]})j"));
  EXPECT_EQ(group_order(g), 8);
  const auto j = to_json(g);
  EXPECT_EQ(j.at("generators")[1], Json::array({2, 1, 0, 3}));
  EXPECT_EQ(group_from_json(j).generators(), g.generators());
  EXPECT_THROW(group_from_json(Json::parse(R"({"degree": 3, "generators": [[0, 0, 1]]})")), DomainError);
  EXPECT_THROW(group_from_json(Json::parse(R"({"degree": 3, "generators": [5]})")), DomainError);
}

TEST(FieldJson, Schema) {
  const auto f = make_field(2, 3);
  const auto j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"p":2,"a":3,"modulus":[1,0,1,1]})");
  EXPECT_EQ(to_json(f.element(6)).dump(), "[0,1,1]");
}

TEST(Exports, DotAndEdgeList) {
  const auto c4 = Graph::from_edges(4, std::vector<Edge>{{3, 0}, {0, 1}, {2, 1}, {3, 2}});
  EXPECT_EQ(to_dot(c4), "graph G {\n  0 -- 1;\n  0 -- 3;\n  1 -- 2;\n  2 -- 3;\n}\n");
  EXPECT_EQ(to_edge_list(c4), "0 1\n0 3\n1 2\n2 3\n");
  EXPECT_EQ(to_dot(Graph(2)), "graph G {\n  0;\n  1;\n}\n");
}

TEST(Exports, DigestIsDeterministicAndSensitive) {
  const auto a = cartesian_square(4).graph;
  EXPECT_EQ(graph_digest(a), graph_digest(cartesian_square(4).graph));
  EXPECT_NE(graph_digest(a), graph_digest(multipartite_minus(4).graph));
  EXPECT_NE(graph_digest(Graph(3)), graph_digest(Graph(4)));
  EXPECT_EQ(graph_digest(a).size(), 16u);
}

TEST(FamilyJson, RoundTripPreservesParameters) {
  for (const auto& f : {cartesian_square(4), paley(13), kneser2(6), multipartite_minus(3)}) {
    const auto j = Json::parse(to_json(f).dump());
    const auto g = graph_from_json(j);
    EXPECT_EQ(srg_params(g), srg_params(f.graph)) << f.label;
    EXPECT_EQ(j.at("vertex_labels").size(), f.graph.order());
    for (const auto& named : f.companion_groups)
      EXPECT_EQ(group_from_json(j.at("groups").at(named.name)).generators(), named.group.generators());
  }
}

TEST(ChainJson, Fields) {
  const auto chain = reduce_chain(cartesian_square(4).graph, cartesian_reduction_groups(4).g);
  const auto j = to_json(chain);
  ASSERT_EQ(j.at("steps").size(), 1u);
  const auto& step = j.at("steps")[0];
  EXPECT_EQ(step.at("group_order"), "96");
  EXPECT_EQ(step.at("b"), 4);
  EXPECT_EQ(step.at("ell"), 2);
  EXPECT_EQ(step.at("report").at("all_hold"), true);
  EXPECT_EQ(j.at("terminal_reason"), "complete");
  EXPECT_EQ(j.at("terminal_n"), 4);
  EXPECT_EQ(j.dump(), to_json(reduce_chain(cartesian_square(4).graph, cartesian_reduction_groups(4).g)).dump());
}

TEST(FeasibilityJson, RecordKeys) {
  const auto records = enumerate_feasible(2, 2, 1);
  ASSERT_FALSE(records.empty());
  const auto j = to_json(records.back());
  for (const char* key : {"m", "ell", "r", "b", "n", "k", "lambda", "mu", "theta", "tau", "m_theta", "m_tau",
                          "family_matches"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("m_theta"), 4);
  const auto table = feasibility_table(records);
  EXPECT_NE(table.find("box(3)"), std::string::npos);
}
