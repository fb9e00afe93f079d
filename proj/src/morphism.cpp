#include "acdkit/morphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "acdkit/loops.hpp"

namespace acdkit {

StructuralReport check_structural(const Morphism& m) {
  StructuralReport r;
  const auto& s = m.source->graph;
  const auto& t = m.target->graph;
  if (m.vertex_map.size() != s.num_vertices()) r.issues.push_back("vertex map does not cover the source");
  if (m.edge_map.size() != s.num_edges()) r.issues.push_back("edge map does not cover the source");
  if (!r.ok()) return r;
  for (VertexId v = 0; v < s.num_vertices(); ++v)
    if (m.vertex_map[v] >= t.num_vertices())
      r.issues.push_back("vertex '" + s.vertex_name(v) + "' maps outside the target");
  for (EdgeId e = 0; e < s.num_edges(); ++e)
    if (m.edge_map[e] >= t.num_edges()) r.issues.push_back("edge '" + s.edge(e).name + "' maps outside the target");
  if (!r.ok()) return r;

  const auto& ti = t.initial();
  for (auto v : s.initial())
    if (!std::binary_search(ti.begin(), ti.end(), m.vertex_map[v]))
      r.issues.push_back("initial vertex '" + s.vertex_name(v) + "' maps to non-initial '" +
                         t.vertex_name(m.vertex_map[v]) + "'");
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    const auto f = m.edge_map[e];
    const auto& name = s.edge(e).name;
    if (m.vertex_map[s.source(e)] != t.source(f)) r.issues.push_back("edge '" + name + "' does not preserve its source");
    if (m.vertex_map[s.target(e)] != t.target(f)) r.issues.push_back("edge '" + name + "' does not preserve its target");
    if (s.has_letters() && t.has_letters() && s.letter(e) != t.letter(f))
      r.issues.push_back("edge '" + name + "' changes its letter");
  }
  if (s.has_owners() && t.has_owners())
    for (VertexId v = 0; v < s.num_vertices(); ++v)
      if (s.owner(v) != t.owner(m.vertex_map[v]))
        r.issues.push_back("vertex '" + s.vertex_name(v) + "' changes its owner");
  return r;
}

LocalReport check_local(const Morphism& m) {
  const auto& s = m.source->graph;
  const auto& t = m.target->graph;
  LocalReport r{true, true};
  std::set<VertexId> init_image;
  for (auto v : s.initial())
    if (!init_image.insert(m.vertex_map[v]).second) r.injective = false;
  if (init_image.size() != t.initial().size()) r.surjective = false;

  auto reach = reachable_vertices(s);
  for (auto v = reach.find_first(); v != Bits::npos; v = reach.find_next(v)) {
    std::set<EdgeId> image;
    for (auto e : s.out(v))
      if (!image.insert(m.edge_map[e]).second) r.injective = false;
    const auto& target_out = t.out(m.vertex_map[v]);
    if (!std::all_of(target_out.begin(), target_out.end(), [&](EdgeId f) { return image.count(f) != 0; }))
      r.surjective = false;
  }
  return r;
}

bool check_acceptance_preserving(const Morphism& m, const Limits& limits) {
  const auto& s = m.source->graph;
  const auto& t = m.target->graph;
  EdgeStatus target_status(*m.target);
  auto reach = reachable_vertices(s);
  EdgeSet live(s.num_edges());
  for (EdgeId e = 0; e < s.num_edges(); ++e)
    if (reach.test(s.source(e))) live.set(e);
  auto image = [&](const EdgeSet& l) {
    EdgeSet out(t.num_edges());
    for (auto e = l.find_first(); e != Bits::npos; e = l.find_next(e)) out.set(m.edge_map[e]);
    return out;
  };

  const auto* parity = std::get_if<Parity>(&m.source->condition);
  if (!parity) {
    EdgeStatus source_status(*m.source);
    for (const auto& l : enumerate_loops_within(s, live, limits))
      if (source_status(l) != target_status(image(l))) return false;
    return true;
  }

  // Parity source: a source loop over target loop l with minimal priority d exists iff some
  // SCC of the edges {e : φ(e) ∈ l, p(e) ≥ d} contains a d-edge and covers all of l.
  auto prio = [&](EdgeId e) { return parity->priority[s.colour(e)]; };
  std::set<int> priorities;
  for (auto e = live.find_first(); e != Bits::npos; e = live.find_next(e)) priorities.insert(prio(e));
  for (const auto& l : enumerate_loops_within(t, image(live), limits)) {
    const bool accepting = target_status(l);
    for (int d : priorities) {
      if ((d % 2 == 0) == accepting) continue;
      EdgeSet g(s.num_edges());
      for (auto e = live.find_first(); e != Bits::npos; e = live.find_next(e))
        if (l.test(m.edge_map[e]) && prio(e) >= d) g.set(e);
      for (const auto& c : split_loops(s, g)) {
        bool has_d = false;
        for (auto e = c.find_first(); e != Bits::npos && !has_d; e = c.find_next(e)) has_d = prio(e) == d;
        if (has_d && image(c) == l) return false;
      }
    }
  }
  return true;
}

Morphism induced_morphism(const AcdTransform& t, std::shared_ptr<const System> original) {
  return Morphism{std::make_shared<const System>(t.system), std::move(original), t.vertex_origin, t.edge_origin};
}

Morphism identity_morphism(std::shared_ptr<const System> s) {
  Morphism m{s, s, {}, {}};
  for (VertexId v = 0; v < s->graph.num_vertices(); ++v) m.vertex_map.push_back(v);
  for (EdgeId e = 0; e < s->graph.num_edges(); ++e) m.edge_map.push_back(e);
  return m;
}

Run map_run(const Morphism& m, const Run& run) {
  Run out;
  for (auto e : run.prefix) out.prefix.push_back(m.edge_map[e]);
  for (auto e : run.cycle) out.cycle.push_back(m.edge_map[e]);
  return out;
}

Run lift_run(const Morphism& m, const Run& run) {
  const auto& s = m.source->graph;
  const auto& t = m.target->graph;
  if (run.cycle.empty()) throw InputError("run has an empty cycle");
  const auto first = run.prefix.empty() ? run.cycle.front() : run.prefix.front();
  std::optional<VertexId> v;
  for (auto i : s.initial())
    if (m.vertex_map[i] == t.source(first)) v = i;
  if (!v) throw InputError("no initial preimage for the run's first vertex");
  auto step = [&](EdgeId f) {
    for (auto e : s.out(*v))
      if (m.edge_map[e] == f) {
        v = s.target(e);
        return e;
      }
    throw InputError("morphism is not locally surjective along the run");
  };
  Run out;
  for (auto f : run.prefix) out.prefix.push_back(step(f));
  // Unroll the cycle until a period starts from an already seen source vertex.
  std::map<VertexId, std::size_t> period_start;
  std::vector<EdgeId> unrolled;
  while (!period_start.count(*v)) {
    period_start[*v] = unrolled.size();
    for (auto f : run.cycle) unrolled.push_back(step(f));
  }
  const auto k = period_start[*v];
  out.prefix.insert(out.prefix.end(), unrolled.begin(), unrolled.begin() + static_cast<std::ptrdiff_t>(k));
  out.cycle.assign(unrolled.begin() + static_cast<std::ptrdiff_t>(k), unrolled.end());
  return out;
}

}  // namespace acdkit
