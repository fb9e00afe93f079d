#include <doctest.h>

#include "acdkit/games.hpp"
#include "examples.hpp"
#include "oracles.hpp"

using namespace acdkit;

namespace {

System random_parity_game(oracle::Gen& gen) {
  auto ts = gen.graph(6, 11, true);
  Parity p;
  for (EdgeId e = 0; e < ts.num_edges(); ++e) p.priority.push_back(gen.uniform(0, 4));
  return {ts, p};
}

}  // namespace

TEST_SUITE("games") {
  TEST_CASE("parity solver agrees with positional brute force") {
    oracle::Gen gen(71);
    int checked = 0;
    for (int round = 0; round < 200; ++round) {
      auto g = random_parity_game(gen);
      auto sol = solve_parity_game(g);
      auto eve = oracle::positional_wins(g, Player::Eve);
      auto adam = oracle::positional_wins(g, Player::Adam);
      if (!eve || !adam) continue;
      ++checked;
      for (VertexId v = 0; v < g.graph.num_vertices(); ++v) {
        CHECK((*eve)[v] != (*adam)[v]);
        CHECK((sol.winner[v] == Player::Eve) == (*eve)[v]);
      }
      CHECK(verify_strategy(g, sol, Player::Eve));
      CHECK(verify_strategy(g, sol, Player::Adam));
    }
    CHECK(checked > 150);
  }

  TEST_CASE("tampered strategies fail verification") {
    auto d = ex::fixture("game_parity.json");
    auto g = d.require_system();
    auto sol = solve_parity_game(g);
    // Eve wins v0 by moving to v2; sending her to v1 lets Adam escape to v3.
    const auto v0 = *g.graph.find_vertex("v0");
    REQUIRE(sol.winner[v0] == Player::Eve);
    sol.choice[v0] = *g.graph.find_edge("e0");
    CHECK_FALSE(verify_strategy(g, sol, Player::Eve));
  }

  TEST_CASE("one-player Muller game on the six-state example") {
    auto s = ex::six_state();
    s.graph.set_owners(std::vector<Owner>(6, Owner::Eve));
    auto sol = solve_muller_game(s);
    // Eve wins iff an accepting loop is reachable.
    auto loops = oracle::loops(s.graph);
    for (VertexId v = 0; v < 6; ++v) {
      TransitionSystem rooted(s.graph.vertex_names(), s.graph.edges(), {v});
      bool good = false;
      for (const auto& l : oracle::loops(rooted)) good |= oracle::loop_accepted(s, l);
      CHECK((sol.winner[v] == Player::Eve) == good);
    }
  }

  TEST_CASE("no accepting loop: Adam wins everywhere") {
    auto s = ex::six_state();
    s.condition = Muller{};
    s.graph.set_owners(std::vector<Owner>(6, Owner::Eve));
    auto sol = solve_muller_game(s);
    for (auto w : sol.winner) CHECK(w == Player::Adam);
  }

  TEST_CASE("Muller games agree with brute force on the transform") {
    oracle::Gen gen(73);
    int checked = 0;
    for (int round = 0; round < 120; ++round) {
      auto ts = gen.graph(5, 8, true);
      System g{ts, gen.loop_family(ts)};
      auto sol = solve_muller_game(g);
      auto eve = oracle::positional_wins(sol.transform.system, Player::Eve);
      if (!eve) continue;
      ++checked;
      for (VertexId v = 0; v < sol.transform.vertex_origin.size(); ++v)
        CHECK((sol.winner[sol.transform.vertex_origin[v]] == Player::Eve) == (*eve)[v]);
    }
    CHECK(checked > 60);
  }

  TEST_CASE("solver requires owners") {
    auto s = ex::six_state();
    CHECK_THROWS_AS(solve_muller_game(s), InputError);
  }
}
