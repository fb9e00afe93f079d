#include "acdkit/loops.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace acdkit {

namespace {

// Iterative Tarjan over the subgraph made of `allowed` edges. Returns a component id per vertex.
std::vector<int> tarjan(const TransitionSystem& ts, const EdgeSet& allowed) {
  const auto n = ts.num_vertices();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> call;
  int counter = 0, ncomp = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& f = call.back();
      const auto& out = ts.out(f.v);
      if (f.next < out.size()) {
        auto e = out[f.next++];
        if (!allowed.test(e)) continue;
        auto w = ts.target(e);
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      auto v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<EdgeSet> split_loops(const TransitionSystem& ts, const EdgeSet& edges) {
  auto comp = tarjan(ts, edges);
  std::vector<int> slot(ts.num_vertices(), -1);
  std::vector<EdgeSet> out;
  for (auto e = edges.find_first(); e != Bits::npos; e = edges.find_next(e)) {
    auto c = comp[ts.source(e)];
    if (c != comp[ts.target(e)]) continue;
    if (slot[c] < 0) {
      slot[c] = static_cast<int>(out.size());
      out.push_back(ts.empty_edges());
    }
    out[slot[c]].set(e);
  }
  return out;
}

SccDecomposition sccs(const TransitionSystem& ts) {
  EdgeSet all(ts.num_edges());
  all.set();
  SccDecomposition d;
  d.loops = split_loops(ts, all);
  d.transient = all;
  d.loop_of_vertex.assign(ts.num_vertices(), -1);
  for (std::size_t i = 0; i < d.loops.size(); ++i) {
    d.transient -= d.loops[i];
    for (auto e = d.loops[i].find_first(); e != Bits::npos; e = d.loops[i].find_next(e))
      d.loop_of_vertex[ts.source(e)] = static_cast<int>(i);
  }
  return d;
}

bool is_loop(const TransitionSystem& ts, const EdgeSet& edges) {
  if (edges.none()) return false;
  auto states = ts.sources_of(edges);
  // Every target must be a source too, otherwise the walk cannot continue.
  for (auto e = edges.find_first(); e != Bits::npos; e = edges.find_next(e))
    if (!states.test(ts.target(e))) return false;
  auto root = states.find_first();
  // Forward closure from root.
  VertexSet seen(ts.num_vertices());
  std::vector<VertexId> work{root};
  seen.set(root);
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    for (auto e : ts.out(v))
      if (edges.test(e) && !seen.test(ts.target(e))) {
        seen.set(ts.target(e));
        work.push_back(ts.target(e));
      }
  }
  if (seen != states) return false;
  // Backward closure: iterate to a fixpoint over the (small) edge set.
  VertexSet back(ts.num_vertices());
  back.set(root);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto e = edges.find_first(); e != Bits::npos; e = edges.find_next(e))
      if (back.test(ts.target(e)) && !back.test(ts.source(e))) {
        back.set(ts.source(e));
        changed = true;
      }
  }
  return back == states;
}

VertexSet reachable_vertices(const TransitionSystem& ts, const std::vector<VertexId>& from) {
  VertexSet seen(ts.num_vertices());
  std::vector<VertexId> work;
  for (auto v : from)
    if (!seen.test(v)) {
      seen.set(v);
      work.push_back(v);
    }
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    for (auto e : ts.out(v)) {
      auto w = ts.target(e);
      if (!seen.test(w)) {
        seen.set(w);
        work.push_back(w);
      }
    }
  }
  return seen;
}

VertexSet reachable_vertices(const TransitionSystem& ts) { return reachable_vertices(ts, ts.initial()); }

std::vector<EdgeSet> alternating_children(const TransitionSystem& ts, const LoopStatus& status,
                                          const EdgeSet& l, const Limits& limits) {
  const bool st = status(l);
  std::unordered_set<EdgeSet> visited{l};
  std::vector<EdgeSet> work{l}, flipped;
  while (!work.empty()) {
    auto cur = std::move(work.back());
    work.pop_back();
    for (auto e = cur.find_first(); e != Bits::npos; e = cur.find_next(e)) {
      auto rest = cur;
      rest.reset(e);
      for (auto& m : split_loops(ts, rest)) {
        if (!visited.insert(m).second) continue;
        if (visited.size() > limits.explore_cap)
          throw CapExceeded("exploration cap of " + std::to_string(limits.explore_cap) +
                            " subloops exceeded");
        if (status(m) != st) flipped.push_back(std::move(m));
        else work.push_back(std::move(m));
      }
    }
  }
  std::vector<EdgeSet> maximal;
  for (const auto& m : flipped) {
    bool dominated = false;
    for (const auto& o : flipped)
      if (o != m && m.is_subset_of(o)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(m);
  }
  std::sort(maximal.begin(), maximal.end(), canonical_less);
  return maximal;
}

std::vector<EdgeSet> enumerate_reachable_loops(const TransitionSystem& ts, const Limits& limits) {
  auto reach = reachable_vertices(ts);
  EdgeSet live(ts.num_edges());
  for (EdgeId e = 0; e < ts.num_edges(); ++e)
    if (reach.test(ts.source(e))) live.set(e);
  return enumerate_loops_within(ts, live, limits);
}

std::vector<EdgeSet> enumerate_loops_within(const TransitionSystem& ts, const EdgeSet& allowed,
                                            const Limits& limits) {
  std::vector<EdgeSet> out;
  for (const auto& scc : split_loops(ts, allowed)) {
    auto members = elements(scc);
    // Subset enumeration beyond 40 edges is out of reach whatever the configured cap.
    if (members.size() > std::min<std::size_t>(limits.loop_cap, 40)) {
      std::string names;
      for (std::size_t k = 0; k < members.size() && k < 8; ++k)
        names += (k ? "," : "") + ts.edge(members[k]).name;
      if (members.size() > 8) names += ",...";
      throw CapExceeded("SCC {" + names + "} has " + std::to_string(members.size()) +
                        " edges, above the loop cap of " + std::to_string(limits.loop_cap));
    }
    const std::uint64_t total = std::uint64_t{1} << members.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      EdgeSet s(ts.num_edges());
      for (std::size_t k = 0; k < members.size(); ++k)
        if (mask >> k & 1) s.set(members[k]);
      if (is_loop(ts, s)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

VertexSet accessible_x_scc(const TransitionSystem& automaton, const std::vector<std::string>& x) {
  if (automaton.initial().size() != 1) throw InputError("automaton must have exactly one initial state");
  if (!automaton.has_letters()) throw InputError("automaton edges carry no letters");
  std::set<std::string> letters(x.begin(), x.end());
  auto x_reach = [&](VertexId from) {
    VertexSet seen(automaton.num_vertices());
    std::vector<VertexId> work{from};
    seen.set(from);
    while (!work.empty()) {
      auto v = work.back();
      work.pop_back();
      for (auto e : automaton.out(v))
        if (letters.count(automaton.letter(e)) && !seen.test(automaton.target(e))) {
          seen.set(automaton.target(e));
          work.push_back(automaton.target(e));
        }
    }
    return seen;
  };
  // Descend while some X-successor cannot come back; each step strictly shrinks the reach set.
  VertexId q = automaton.initial().front();
  for (;;) {
    auto r = x_reach(q);
    std::optional<VertexId> escape;
    for (auto p = r.find_first(); p != Bits::npos && !escape; p = r.find_next(p))
      if (!x_reach(p).test(q)) escape = p;
    if (!escape) return r;
    q = *escape;
  }
}

}  // namespace acdkit
