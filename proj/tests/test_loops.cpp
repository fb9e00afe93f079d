#include <doctest.h>

#include <set>

#include "acdkit/loops.hpp"
#include "examples.hpp"
#include "oracles.hpp"

using namespace acdkit;

namespace {

std::set<std::vector<std::size_t>> as_set(const std::vector<Bits>& v) {
  std::set<std::vector<std::size_t>> s;
  for (const auto& b : v) s.insert(elements(b));
  return s;
}

}  // namespace

TEST_SUITE("loops") {
  TEST_CASE("maximal loops of the six-state example") {
    auto s = ex::six_state();
    auto d = sccs(s.graph);
    REQUIRE(d.loops.size() == 2);
    CHECK(elements(d.loops[0]) == std::vector<std::size_t>{2, 3, 4});
    CHECK(elements(d.loops[1]) == std::vector<std::size_t>{6, 7, 8, 9, 10, 11});
    CHECK(elements(d.transient) == std::vector<std::size_t>{0, 1, 5});
    CHECK(d.loop_of_vertex == std::vector<int>{-1, 0, 0, 1, 1, 1});
  }

  TEST_CASE("loop enumeration matches subset brute force") {
    oracle::Gen gen(3);
    for (int round = 0; round < 150; ++round) {
      auto ts = gen.graph(5, 9);
      auto mine = enumerate_reachable_loops(ts);
      CHECK(as_set(mine) == as_set(oracle::loops(ts)));
      for (std::size_t k = 1; k < mine.size(); ++k) CHECK_FALSE(canonical_less(mine[k], mine[k - 1]));
      for (const auto& l : mine) CHECK(is_loop(ts, l));
    }
  }

  TEST_CASE("is_loop against BFS strong connectivity on every subset") {
    auto s = ex::six_state();
    for (std::uint32_t m = 0; m < (1u << 12); m += 7) {
      Bits b(12);
      for (std::size_t e = 0; e < 12; ++e)
        if (m >> e & 1u) b.set(e);
      CHECK(is_loop(s.graph, b) == oracle::is_loop(s.graph, b));
    }
  }

  TEST_CASE("alternating children are the maximal flipped subloops") {
    oracle::Gen gen(5);
    for (int round = 0; round < 80; ++round) {
      auto ts = gen.graph(4, 8);
      auto fam = gen.loop_family(ts);
      System sys{ts, fam};
      EdgeStatus status(sys);
      auto all = oracle::loops(ts);
      for (const auto& l : all) {
        bool st = oracle::loop_accepted(sys, l);
        std::vector<Bits> flipped;
        for (const auto& k : all)
          if (k.is_proper_subset_of(l) && oracle::loop_accepted(sys, k) != st) flipped.push_back(k);
        std::vector<Bits> maximal;
        for (const auto& k : flipped) {
          bool dominated = false;
          for (const auto& o : flipped) dominated |= k.is_proper_subset_of(o);
          if (!dominated) maximal.push_back(k);
        }
        CHECK(as_set(alternating_children(ts, status, l)) == as_set(maximal));
      }
    }
  }

  TEST_CASE("cap is reported with the offending component") {
    std::vector<TransitionSystem::Edge> edges;
    for (int k = 0; k < 6; ++k) edges.push_back({"x" + std::to_string(k), 0, 0});
    TransitionSystem ts({"v"}, edges, {0});
    Limits lim;
    lim.loop_cap = 5;
    try {
      enumerate_reachable_loops(ts, lim);
      FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
      CHECK(std::string(e.what()).find("6 edges") != std::string::npos);
    }
    lim.loop_cap = 6;
    CHECK(enumerate_reachable_loops(ts, lim).size() == 63);
  }

  TEST_CASE("unreachable components are ignored") {
    TransitionSystem ts({"p", "q"}, {{"pp", 0, 0}, {"qq", 1, 1}, {"qp", 1, 0}}, {0});
    auto ls = enumerate_reachable_loops(ts);
    REQUIRE(ls.size() == 1);
    CHECK(elements(ls[0]) == std::vector<std::size_t>{0});
    CHECK(reachable_vertices(ts).count() == 1);
  }

  TEST_CASE("X-SCC of the two-state automaton") {
    auto a = ex::automaton_a();
    auto both = accessible_x_scc(a.graph, {"0", "1"});
    CHECK(both.count() == 2);
    auto zero = accessible_x_scc(a.graph, {"0"});
    CHECK(zero.count() == 1);
  }
}
