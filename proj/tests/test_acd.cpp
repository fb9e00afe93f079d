#include <doctest.h>

#include <map>
#include <set>

#include "acdkit/acd.hpp"
#include "examples.hpp"
#include "oracles.hpp"

using namespace acdkit;

namespace {

std::string edge_letters(const TransitionSystem& ts, const EdgeSet& l) {
  std::string s;
  for (auto e : elements(l)) s += ts.edge(e).name;
  return s;
}

// Transform edges as "source -name:priority-> target".
std::set<std::string> arcs(const AcdTransform& t) {
  const auto& g = t.system.graph;
  const auto& p = std::get<Parity>(t.system.condition).priority;
  std::set<std::string> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    out.insert(g.vertex_name(g.source(e)) + " -" + std::to_string(p[g.colour(e)]) + "-> " +
               g.vertex_name(g.target(e)));
  return out;
}

}  // namespace

TEST_SUITE("acd") {
  TEST_CASE("decomposition of the six-state example") {
    auto s = ex::six_state();
    auto acd = build_acd(s);
    REQUIRE(acd.trees.size() == 3);
    CHECK(acd.tag == AcdTag::Odd);
    CHECK(edge_letters(s.graph, acd.trees[0].nodes[0].label) == "abf");
    CHECK(acd.trees[0].nodes[0].priority == 1);
    CHECK(edge_letters(s.graph, acd.trees[1].nodes[0].label) == "cde");
    CHECK(edge_letters(s.graph, acd.trees[2].nodes[0].label) == "ghijkl");

    std::multiset<std::pair<std::string, int>> t1, t2;
    for (const auto& n : acd.trees[1].nodes) t1.insert({edge_letters(s.graph, n.label), n.priority});
    for (const auto& n : acd.trees[2].nodes) t2.insert({edge_letters(s.graph, n.label), n.priority});
    CHECK(t1 == std::multiset<std::pair<std::string, int>>{{"cde", 2}, {"cd", 3}});
    CHECK(t2 == std::multiset<std::pair<std::string, int>>{
                    {"ghijkl", 1}, {"hijk", 2}, {"ghi", 2}, {"l", 2}, {"hi", 3}, {"hi", 3}, {"g", 3}});
    // Parent structure of t_2: children of the root, then of ghi and hijk.
    const auto& t = acd.trees[2];
    std::multiset<std::string> root_children;
    for (int c : t.nodes[0].children) root_children.insert(edge_letters(s.graph, t.nodes[c].label));
    CHECK(root_children == std::multiset<std::string>{"ghi", "hijk", "l"});
    for (int c : t.nodes[0].children) {
      std::multiset<std::string> kids;
      for (int k : t.nodes[c].children) kids.insert(edge_letters(s.graph, t.nodes[k].label));
      const auto name = edge_letters(s.graph, t.nodes[c].label);
      if (name == "ghi") CHECK(kids == std::multiset<std::string>{"g", "hi"});
      if (name == "hijk") CHECK(kids == std::multiset<std::string>{"hi"});
      if (name == "l") CHECK(kids.empty());
    }
    CHECK(acd.vertex_tree == std::vector<int>{0, 1, 1, 2, 2, 2});
  }

  TEST_CASE("subtree of q4 has two branches") {
    auto s = ex::six_state();
    auto acd = build_acd(s);
    CHECK(acd.branches(4).size() == 2);
    CHECK(acd.branches(3).size() == 3);
    CHECK(acd.branches(0).size() == 1);
  }

  TEST_CASE("transform of the six-state example") {
    auto s = ex::six_state();
    auto t = acd_transform(s);
    CHECK(t.system.graph.num_vertices() == 10);
    std::vector<int> copies(6, 0);
    for (auto v : t.vertex_origin) ++copies[v];
    CHECK(copies == std::vector<int>{1, 1, 1, 3, 2, 2});
    // Siblings are ordered by decreasing size, so t_2 reads <0>=hijk, <1>=ghi, <2>=l.
    // Edge b: the root of t_2 has priority 1 under the definition.
    std::set<std::string> expected = {
        "(q0,0,<>) -2-> (q1,1,<0>)",          "(q0,0,<>) -1-> (q3,2,<0,0>)",
        "(q1,1,<0>) -3-> (q2,1,<0>)",         "(q2,1,<0>) -3-> (q1,1,<0>)",
        "(q2,1,<0>) -2-> (q2,1,<0>)",         "(q1,1,<0>) -1-> (q4,2,<0,0>)",
        "(q3,2,<1,1>) -3-> (q3,2,<1,1>)",     "(q3,2,<1,1>) -2-> (q4,2,<1,0>)",
        "(q3,2,<1,0>) -2-> (q3,2,<1,1>)",     "(q3,2,<1,0>) -3-> (q4,2,<1,0>)",
        "(q3,2,<0,0>) -1-> (q3,2,<1,0>)",     "(q3,2,<0,0>) -3-> (q4,2,<0,0>)",
        "(q4,2,<1,0>) -3-> (q3,2,<1,0>)",     "(q4,2,<1,0>) -1-> (q5,2,<2>)",
        "(q4,2,<0,0>) -3-> (q3,2,<0,0>)",     "(q4,2,<0,0>) -2-> (q5,2,<0>)",
        "(q5,2,<0>) -2-> (q4,2,<0,0>)",       "(q5,2,<0>) -1-> (q5,2,<2>)",
        "(q5,2,<2>) -1-> (q4,2,<0,0>)",       "(q5,2,<2>) -2-> (q5,2,<2>)"};
    CHECK(arcs(t) == expected);
    auto st = acd_stats(build_acd(s));
    CHECK(st.size == 10);
    CHECK(st.priorities == Interval{1, 3});
    CHECK(st.heights == std::vector<int>{1, 2, 3});
  }

  TEST_CASE("transform of automaton A has three states") {
    auto a = ex::automaton_a();
    auto acd = build_acd(a);
    REQUIRE(acd.trees.size() == 2);
    CHECK(acd.trees[0].nodes[0].label.none());
    CHECK(acd.trees[1].nodes.size() == 3);
    auto t = acd_transform(a);
    CHECK(t.system.graph.num_vertices() == 3);
    // The b node holds two edges, so it comes first: <0> = b, <1> = a.
    std::set<std::string> expected = {"(A,1,<1>) -2-> (A,1,<1>)", "(A,1,<1>) -1-> (B,1,<0>)",
                                      "(B,1,<0>) -1-> (B,1,<0>)", "(B,1,<0>) -2-> (A,1,<0>)",
                                      "(A,1,<0>) -2-> (B,1,<0>)", "(A,1,<0>) -1-> (A,1,<1>)"};
    CHECK(arcs(t) == expected);
    CHECK(acd_stats(acd).heights == std::vector<int>{2});
  }

  TEST_CASE("multi_supp jumps to the target tree on tree changes") {
    auto s = ex::six_state();
    auto acd = build_acd(s);
    auto n = multi_supp(acd, s.graph, 0, 0, 1);  // b from q0 into t_2
    CHECK(n.tree == 2);
    CHECK(n.node == 0);
  }

  TEST_CASE("transform satisfies the loop criterion on random systems") {
    oracle::Gen gen(41);
    int brute = 0;
    for (int round = 0; round < 150; ++round) {
      auto ts = gen.graph(6, 10);
      System sys{ts, gen.loop_family(ts)};
      auto t = acd_transform(sys);
      std::vector<std::size_t> label(t.edge_origin.begin(), t.edge_origin.end());
      auto status = [&](const Bits& l) { return oracle::loop_accepted(sys, l); };
      // Size equals the number of branches summed over states.
      std::size_t branches = 0;
      auto acd = build_acd(sys);
      for (VertexId q = 0; q < ts.num_vertices(); ++q) branches += acd.branches(q).size();
      CHECK(t.system.graph.num_vertices() == branches);
      auto masks = oracle::loop_masks(ts);
      CHECK_FALSE(oracle::parity_loop_criterion(t.system, label, ts.num_edges(), status, masks).has_value());
      if (t.system.graph.num_edges() <= 16) {
        ++brute;
        CHECK_FALSE(oracle::parity_loop_criterion_brute(t.system, label, ts.num_edges(), status).has_value());
      }
    }
    CHECK(brute > 30);
  }

  TEST_CASE("number of priorities is the maximal height, plus one when ambiguous") {
    oracle::Gen gen(43);
    for (int round = 0; round < 100; ++round) {
      auto ts = gen.graph(5, 9);
      System sys{ts, gen.loop_family(ts)};
      auto acd = build_acd(sys);
      auto st = acd_stats(acd);
      int h = 0;
      for (std::size_t i = 1; i < acd.trees.size(); ++i) h = std::max(h, acd.trees[i].height);
      if (h == 0) continue;
      auto used = st.priorities.hi - st.priorities.lo + 1;
      CHECK(used <= h + (acd.tag == AcdTag::Ambiguous ? 1 : 0));
    }
  }
}
