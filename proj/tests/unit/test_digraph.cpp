#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qcs/digraph.hpp"
#include "qcs/error.hpp"

namespace {

qcs::Digraph from_edges(std::initializer_list<std::pair<const char*, const char*>> edges) {
  qcs::Digraph g;
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

qcs::Digraph six_vertex() {
  return from_edges({{"1", "2"}, {"2", "3"}, {"2", "4"}, {"3", "4"}, {"3", "5"}, {"4", "1"},
                     {"4", "6"}, {"5", "1"}, {"5", "2"}, {"5", "4"}, {"6", "3"}, {"6", "5"}});
}

qcs::WeightedDigraph mavlo(double x) {
  qcs::WeightedDigraph g;
  g.add_edge("A", "B", 1.0);
  g.add_edge("B", "C", 1.0);
  g.add_edge("C", "A", 1.0);
  g.add_edge("B", "A", x * x);
  g.add_edge("C", "B", x * x);
  g.add_edge("A", "C", x * x);
  return g;
}

TEST(Digraph, IndicesFollowFirstAppearance) {
  auto g = from_edges({{"b", "a"}, {"a", "c"}});
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.id(0), "b");
  EXPECT_EQ(g.id(1), "a");
  EXPECT_EQ(g.id(2), "c");
  EXPECT_EQ(*g.index_of("c"), 2u);
  EXPECT_FALSE(g.index_of("z").has_value());
}

TEST(Digraph, RejectsDuplicatesAndSelfLoops) {
  qcs::Digraph g;
  g.add_edge("a", "b");
  EXPECT_THROW(g.add_edge("a", "b"), qcs::ValidationError);
  EXPECT_THROW(g.add_edge("a", "a"), qcs::ValidationError);
  qcs::Digraph loops(true);
  EXPECT_NO_THROW(loops.add_edge("a", "a"));
  EXPECT_THROW(g.add_edge(0, 7), qcs::ValidationError);
}

TEST(Digraph, WeightsMustBePositive) {
  qcs::WeightedDigraph g;
  EXPECT_THROW(g.add_edge("a", "b", 0.0), qcs::ValidationError);
  EXPECT_THROW(g.add_edge("a", "b", -1.0), qcs::ValidationError);
  g.add_edge("a", "b", 2.5);
  EXPECT_DOUBLE_EQ(g.weight(0), 2.5);
}

TEST(Scc, ThreeCycleIsOneFinalComponent) {
  auto d = qcs::scc(from_edges({{"1", "2"}, {"2", "3"}, {"3", "1"}}));
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0].size(), 3u);
  EXPECT_TRUE(d.final[0]);
}

TEST(Scc, PathHasOnlyTheSinkFinal) {
  auto g = from_edges({{"a", "b"}, {"b", "c"}});
  auto d = qcs::scc(g);
  EXPECT_EQ(d.components.size(), 3u);
  const auto finals = qcs::final_strong_components(g);
  ASSERT_EQ(finals.size(), 1u);
  EXPECT_EQ(g.id(finals[0][0]), "c");
}

TEST(Scc, TailIntoTwoCycle) {
  auto g = from_edges({{"a", "b"}, {"b", "c"}, {"c", "b"}});
  auto d = qcs::scc(g);
  ASSERT_EQ(d.components.size(), 2u);
  const auto finals = qcs::final_strong_components(g);
  ASSERT_EQ(finals.size(), 1u);
  EXPECT_EQ(finals[0], (std::vector<std::size_t>{1, 2}));
}

TEST(Scc, DownstreamTwoCycleIsTheOnlyFinal) {
  auto g = from_edges({{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}, {"b", "c"}});
  const auto finals = qcs::final_strong_components(g);
  ASSERT_EQ(finals.size(), 1u);
  EXPECT_EQ(finals[0], (std::vector<std::size_t>{2, 3}));
}

TEST(Scc, AgreesWithReachabilityOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_digraph(2 + trial % 7, 0.25, rng);
    const auto reach = oracle::reachability(g);
    const auto d = qcs::scc(g);
    std::size_t total = 0;
    for (const auto& c : d.components) total += c.size();
    ASSERT_EQ(total, g.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        const bool same = reach[u][v] && reach[v][u];
        ASSERT_EQ(same, d.component_of[u] == d.component_of[v]);
      }
    }
    for (const auto& e : d.condensation.edges()) ASSERT_LT(e.from, e.to);
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      ASSERT_EQ(bool(d.final[c]), d.condensation.out_degree(c) == 0);
    }
    ASSERT_EQ(qcs::is_strongly_connected(g), oracle::strongly_connected(g));
    ASSERT_EQ(qcs::is_strongly_connected(g), d.components.size() == 1);
  }
}

TEST(Girth, SmallCases) {
  EXPECT_EQ(qcs::girth(from_edges({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}})), 4u);
  EXPECT_EQ(qcs::girth(six_vertex()), 3u);
  EXPECT_FALSE(qcs::girth(from_edges({{"a", "b"}, {"b", "c"}})).has_value());
  qcs::Digraph loop(true);
  loop.add_edge("a", "b");
  loop.add_edge("b", "b");
  EXPECT_EQ(qcs::girth(loop), 1u);
}

TEST(Girth, MatchesCycleEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = oracle::random_digraph(2 + trial % 7, 0.3, rng);
    const auto expect = oracle::girth_by_enumeration(g);
    const auto got = qcs::girth(g);
    if (expect == 0) {
      ASSERT_FALSE(got.has_value());
    } else {
      ASSERT_EQ(got.value_or(0), expect);
    }
  }
}

TEST(ShortestCycle, LexicographicallySmallest) {
  auto g = six_vertex();
  const auto c = qcs::shortest_cycle(g);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<std::size_t>{0, 1, 3}));  // 1 -> 2 -> 4 -> 1
}

TEST(ShortestCycle, IsACycleOfGirthLength) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_digraph(3 + trial % 6, 0.3, rng);
    const auto c = qcs::shortest_cycle(g);
    const auto len = qcs::girth(g);
    ASSERT_EQ(c.has_value(), len.has_value());
    if (!c) continue;
    ASSERT_EQ(c->size(), *len);
    EXPECT_EQ(*std::min_element(c->begin(), c->end()), c->front());
    for (std::size_t i = 0; i < c->size(); ++i) {
      ASSERT_TRUE(g.has_edge((*c)[i], (*c)[(i + 1) % c->size()]));
    }
  }
}

TEST(DistancesTo, ForwardEdgeCounts) {
  auto g = from_edges({{"a", "b"}, {"b", "c"}, {"c", "b"}, {"d", "a"}});
  const std::vector<std::size_t> targets{2};
  const auto d = qcs::distances_to(g, targets);
  EXPECT_EQ(d[0], 2u);
  EXPECT_EQ(d[1], 1u);
  EXPECT_EQ(d[2], 0u);
  EXPECT_EQ(d[3], 3u);
}

TEST(Automorphism, MavloRotationAndTransposition) {
  const auto g = mavlo(2.0);
  const std::vector<std::size_t> rotation{1, 2, 0}, swap{1, 0, 2}, id{0, 1, 2};
  EXPECT_TRUE(qcs::check_automorphism(g, rotation));
  EXPECT_FALSE(qcs::check_automorphism(g, swap));
  EXPECT_TRUE(qcs::check_automorphism(g, id));
  EXPECT_TRUE(qcs::check_automorphism(mavlo(1.0), swap));
  const std::vector<std::size_t> bad{0, 0, 1};
  EXPECT_THROW(qcs::check_automorphism(g, bad), qcs::ValidationError);
}

TEST(Automorphism, PreservesGirthAndComponentSizes) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto base = oracle::random_digraph(5, 0.35, rng);
    std::vector<std::size_t> perm(base.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    qcs::Digraph image;
    for (std::size_t v = 0; v < base.size(); ++v) image.add_vertex(base.id(v));
    for (const auto& e : base.edges()) image.add_edge(perm[e.from], perm[e.to]);
    qcs::WeightedDigraph wg(base);
    const bool automorphic = qcs::check_automorphism(wg, perm);
    bool same_edges = image.edge_count() == base.edge_count();
    for (const auto& e : image.edges()) same_edges = same_edges && base.has_edge(e.from, e.to);
    ASSERT_EQ(automorphic, same_edges);
    EXPECT_EQ(qcs::girth(image), qcs::girth(base));
    auto sizes = [](const qcs::Digraph& g) {
      std::vector<std::size_t> s;
      for (const auto& c : qcs::scc(g).components) s.push_back(c.size());
      std::sort(s.begin(), s.end());
      return s;
    };
    EXPECT_EQ(sizes(image), sizes(base));
  }
}

TEST(Digraph, InducedKeepsIdsAndInternalEdges) {
  auto g = six_vertex();
  const std::vector<std::size_t> keep{0, 1, 3};
  const auto h = g.induced(keep);
  EXPECT_EQ(h.size(), 3u);
  EXPECT_EQ(h.id(2), "4");
  EXPECT_EQ(h.edge_count(), 3u);  // 1->2, 2->4, 4->1
}

}  // namespace
