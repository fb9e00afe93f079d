#include <doctest.h>

#include "acdkit/morphism.hpp"
#include "acdkit/zielonka.hpp"
#include "examples.hpp"
#include "oracles.hpp"

using namespace acdkit;

namespace {

// Acceptance preservation, checked independently of the library. Parity sources go through the
// SCC oracle over the target's loops; anything else enumerates source loops.
bool brute_preserving(const Morphism& m) {
  const auto& tg = *m.target;
  if (std::holds_alternative<Parity>(m.source->condition)) {
    std::vector<std::size_t> label(m.edge_map.begin(), m.edge_map.end());
    auto status = [&](const Bits& l) { return oracle::loop_accepted(tg, l); };
    return !oracle::parity_loop_criterion(*m.source, label, tg.graph.num_edges(), status,
                                          oracle::loop_masks(tg.graph))
                .has_value();
  }
  REQUIRE(m.source->graph.num_edges() <= 20);
  for (const auto& l : oracle::loops(m.source->graph)) {
    Bits img(tg.graph.num_edges());
    for (auto e : elements(l)) img.set(m.edge_map[e]);
    if (oracle::loop_accepted(*m.source, l) != oracle::loop_accepted(tg, img)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("morphism") {
  TEST_CASE("transform morphism of the six-state example") {
    auto s = std::make_shared<const System>(ex::six_state());
    auto m = induced_morphism(acd_transform(*s), s);
    CHECK(check_structural(m).ok());
    auto local = check_local(m);
    CHECK(local.bijective());
    CHECK(check_acceptance_preserving(m));
    CHECK(brute_preserving(m));
  }

  TEST_CASE("projection of the product with the tree automaton") {
    auto a = std::make_shared<const System>(ex::automaton_a());
    ZielonkaTree t(ex::f1(), 3);
    auto z = build_zt_automaton(t);
    auto prod = std::make_shared<const System>(compose(zt_system(t, z, {"a", "b", "c"}), a->graph));
    Morphism m{prod, a, {}, {}};
    for (VertexId v = 0; v < prod->graph.num_vertices(); ++v) {
      const auto& name = prod->graph.vertex_name(v);
      m.vertex_map.push_back(*a->graph.find_vertex(name.substr(1, 1)));
    }
    for (EdgeId e = 0; e < prod->graph.num_edges(); ++e)
      m.edge_map.push_back(*a->graph.find_edge(prod->graph.edge(e).name.substr(1, 3)));
    CHECK(check_structural(m).ok());
    CHECK(check_local(m).bijective());
    CHECK(check_acceptance_preserving(m));
    CHECK(brute_preserving(m));
  }

  TEST_CASE("broken maps are itemized") {
    auto s = std::make_shared<const System>(ex::six_state());
    auto m = identity_morphism(s);
    CHECK(check_structural(m).ok());
    CHECK(check_local(m).bijective());
    m.edge_map[0] = 1;  // a now claims to be b: wrong target
    auto r = check_structural(m);
    CHECK_FALSE(r.ok());
    CHECK(check_local(m).injective == false);
  }

  TEST_CASE("exact acceptance check agrees with loop enumeration") {
    oracle::Gen gen(53);
    int disagreements = 0, rejected = 0;
    for (int round = 0; round < 120; ++round) {
      auto ts = gen.graph(4, 7);
      auto sys = std::make_shared<const System>(System{ts, gen.loop_family(ts)});
      auto t = acd_transform(*sys);
      if (gen.coin()) {
        // Perturb one priority so that preservation may fail.
        auto& p = std::get<Parity>(t.system.condition).priority;
        if (!p.empty()) p[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(p.size()) - 1))] += 1;
      }
      auto m = induced_morphism(t, sys);
      bool exact = check_acceptance_preserving(m);
      disagreements += exact != brute_preserving(m);
      rejected += !exact;
    }
    CHECK(disagreements == 0);
    CHECK(rejected > 5);
  }

  TEST_CASE("runs lift uniquely and map back") {
    auto s = std::make_shared<const System>(ex::six_state());
    auto m = induced_morphism(acd_transform(*s), s);
    std::vector<Run> runs = {{{0, 2}, {4}}, {{0, 2}, {3, 2}}, {{1}, {7, 8, 6}}, {{1, 7}, {9, 11, 10}}, {{0, 5}, {9, 10}}};
    for (const auto& r : runs) {
      REQUIRE_FALSE(check_run(s->graph, r).has_value());
      auto up = lift_run(m, r);
      CHECK_FALSE(check_run(m.source->graph, up).has_value());
      CHECK(same_run(map_run(m, up), r));
      CHECK(run_accepted(*m.source, up) == run_accepted(*s, r));
    }
  }
}
