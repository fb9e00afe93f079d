// Brute-force reference implementations used to derive and cross-check expected values.
// They share no algorithmic code with the library: loops are found by subset enumeration,
// strong connectivity by plain graph search, and games by enumerating positional strategies.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "acdkit/core.hpp"
#include "acdkit/games.hpp"

namespace oracle {

using acdkit::Bits;
using acdkit::EdgeId;
using acdkit::TransitionSystem;
using acdkit::VertexId;

inline std::vector<bool> bfs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                             const std::vector<std::size_t>& from) {
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [a, b] : arcs) succ[a].push_back(b);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack;
  for (auto v : from)
    if (!seen[v]) seen[v] = true, stack.push_back(v);
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto b : succ[v])
      if (!seen[b]) seen[b] = true, stack.push_back(b);
  }
  return seen;
}

inline std::vector<bool> reachable(const TransitionSystem& ts) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (EdgeId e = 0; e < ts.num_edges(); ++e) arcs.emplace_back(ts.source(e), ts.target(e));
  return bfs(ts.num_vertices(), arcs, ts.initial());
}

// Nonempty and every endpoint reaches every other using only these edges.
inline bool strongly_connected(const TransitionSystem& ts, const std::vector<EdgeId>& edges) {
  if (edges.empty()) return false;
  std::vector<std::pair<std::size_t, std::size_t>> fwd, bwd;
  std::vector<std::size_t> verts;
  for (auto e : edges) {
    fwd.emplace_back(ts.source(e), ts.target(e));
    bwd.emplace_back(ts.target(e), ts.source(e));
    verts.push_back(ts.source(e));
    verts.push_back(ts.target(e));
  }
  auto f = bfs(ts.num_vertices(), fwd, {verts[0]});
  auto b = bfs(ts.num_vertices(), bwd, {verts[0]});
  return std::all_of(verts.begin(), verts.end(), [&](std::size_t v) { return f[v] && b[v]; });
}

// Every loop whose vertices are reachable from an initial vertex. Edge count <= 22.
inline std::vector<Bits> loops(const TransitionSystem& ts) {
  const auto m = ts.num_edges();
  auto reach = reachable(ts);
  std::vector<Bits> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<EdgeId> es;
    bool ok = true;
    for (EdgeId e = 0; e < m && ok; ++e)
      if (mask >> e & 1u) {
        es.push_back(e);
        ok = reach[ts.source(e)];
      }
    if (!ok || !strongly_connected(ts, es)) continue;
    Bits b(m);
    for (auto e : es) b.set(e);
    out.push_back(b);
  }
  return out;
}

inline std::vector<std::uint32_t> loop_masks(const TransitionSystem& ts) {
  std::vector<std::uint32_t> out;
  for (const auto& l : loops(ts)) out.push_back(static_cast<std::uint32_t>(l.to_ulong()));
  return out;
}

inline bool is_loop(const TransitionSystem& ts, const Bits& l) {
  std::vector<EdgeId> es;
  for (auto e = l.find_first(); e != Bits::npos; e = l.find_next(e)) es.push_back(e);
  return strongly_connected(ts, es);
}

inline Bits colours_of(const TransitionSystem& ts, const Bits& edges) {
  Bits c(ts.num_colours());
  for (auto e = edges.find_first(); e != Bits::npos; e = edges.find_next(e)) c.set(ts.colour(e));
  return c;
}

// Direct reading of each acceptance semantics on an infinity set of colours.
inline bool accepts(const acdkit::AcceptanceCondition& cond, const Bits& inf) {
  using namespace acdkit;
  if (auto* m = std::get_if<Muller>(&cond))
    return std::any_of(m->family.begin(), m->family.end(), [&](const Bits& s) { return s == inf; });
  if (auto* p = std::get_if<Parity>(&cond)) {
    int lo = 1 << 30;
    for (auto c = inf.find_first(); c != Bits::npos; c = inf.find_next(c)) lo = std::min(lo, p->priority[c]);
    return lo % 2 == 0;
  }
  if (auto* b = std::get_if<Buchi>(&cond)) return inf.intersects(b->set);
  if (auto* b = std::get_if<CoBuchi>(&cond)) return !inf.intersects(b->set);
  if (auto* r = std::get_if<Rabin>(&cond))
    return std::any_of(r->pairs.begin(), r->pairs.end(),
                       [&](const RabinPair& q) { return inf.intersects(q.e) && !inf.intersects(q.f); });
  const auto& s = std::get<Streett>(cond);
  return std::none_of(s.pairs.begin(), s.pairs.end(),
                      [&](const RabinPair& q) { return inf.intersects(q.e) && !inf.intersects(q.f); });
}

inline bool loop_accepted(const acdkit::System& s, const Bits& l) {
  return accepts(s.condition, colours_of(s.graph, l));
}

// Kosaraju on an arc list; returns a component id per vertex.
inline std::vector<int> scc_ids(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  for (auto [a, b] : arcs) fwd[a].push_back(b), bwd[b].push_back(a);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order;
  std::function<void(std::size_t)> dfs1 = [&](std::size_t v) {
    seen[v] = true;
    for (auto w : fwd[v])
      if (!seen[w]) dfs1(w);
    order.push_back(v);
  };
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) dfs1(v);
  std::vector<int> comp(n, -1);
  int c = 0;
  std::function<void(std::size_t)> dfs2 = [&](std::size_t v) {
    comp[v] = c;
    for (auto w : bwd[v])
      if (comp[w] < 0) dfs2(w);
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (comp[*it] < 0) dfs2(*it), ++c;
  return comp;
}

// Splits edge subsets of one graph into SCCs with an iterative Tarjan over flat adjacency
// arrays built once. Edges between different components are dropped; the result lists each
// component's edges contiguously.
class EdgeSccs {
 public:
  struct Split {
    std::vector<EdgeId> edges;
    std::vector<std::size_t> offset;  // component c is edges[offset[c], offset[c+1])
  };

  explicit EdgeSccs(const acdkit::TransitionSystem& ts)
      : n_(ts.num_vertices()), src_(ts.num_edges()), tgt_(ts.num_edges()), first_(n_ + 1, 0),
        adj_(ts.num_edges()), mark_(ts.num_edges(), 0), seen_(n_, 0), index_(n_), low_(n_), comp_(n_) {
    for (EdgeId e = 0; e < ts.num_edges(); ++e) {
      src_[e] = static_cast<std::uint32_t>(ts.source(e));
      tgt_[e] = static_cast<std::uint32_t>(ts.target(e));
      ++first_[src_[e] + 1];
    }
    for (std::size_t v = 0; v < n_; ++v) first_[v + 1] += first_[v];
    std::vector<std::uint32_t> fill(first_.begin(), first_.end() - 1);
    for (EdgeId e = 0; e < ts.num_edges(); ++e) adj_[fill[src_[e]]++] = static_cast<std::uint32_t>(e);
  }

  Split operator()(const std::vector<EdgeId>& edges) {
    ++stamp_;
    for (auto e : edges) mark_[e] = stamp_;
    std::uint32_t counter = 0, ncomp = 0;
    for (auto e0 : edges) {
      auto r = src_[e0];
      if (seen_[r] == stamp_) continue;
      enter(r, counter);
      while (!calls_.empty()) {
        auto& [v, i] = calls_.back();
        if (i < first_[v + 1]) {
          auto f = adj_[i++];
          if (mark_[f] != stamp_) continue;
          auto w = tgt_[f];
          if (seen_[w] != stamp_) enter(w, counter);
          else if (comp_[w] == kOpen) low_[v] = std::min(low_[v], index_[w]);
          continue;
        }
        auto v_done = v;
        calls_.pop_back();
        if (low_[v_done] == index_[v_done]) {
          std::uint32_t w;
          do {
            w = stack_.back();
            stack_.pop_back();
            comp_[w] = ncomp;
          } while (w != v_done);
          ++ncomp;
        }
        if (!calls_.empty()) low_[calls_.back().first] = std::min(low_[calls_.back().first], low_[v_done]);
      }
    }
    Split out;
    out.offset.assign(ncomp + 1, 0);
    for (auto e : edges)
      if (comp_[src_[e]] == comp_[tgt_[e]]) ++out.offset[comp_[src_[e]] + 1];
    for (std::size_t c = 0; c < ncomp; ++c) out.offset[c + 1] += out.offset[c];
    out.edges.resize(out.offset[ncomp]);
    std::vector<std::size_t> fill(out.offset.begin(), out.offset.end() - 1);
    for (auto e : edges)
      if (comp_[src_[e]] == comp_[tgt_[e]]) out.edges[fill[comp_[src_[e]]]++] = e;
    return out;
  }

 private:
  static constexpr std::uint32_t kOpen = ~std::uint32_t{0};

  void enter(std::uint32_t v, std::uint32_t& counter) {
    seen_[v] = stamp_;
    index_[v] = low_[v] = counter++;
    comp_[v] = kOpen;
    stack_.push_back(v);
    calls_.push_back({v, first_[v]});
  }

  std::size_t n_;
  std::vector<std::uint32_t> src_, tgt_, first_, adj_, mark_, seen_, index_, low_, comp_;
  std::vector<std::uint32_t> stack_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> calls_;
  std::uint32_t stamp_ = 0;
};

// Loop criterion for a parity system P whose edges carry labels in a universe U:
// every reachable loop l of P must have min priority even iff status(labels(l)).
// Exact: a loop with label set C and minimum d exists iff some SCC of
// {e : label(e) in C, p(e) >= d} has label set exactly C and holds a d-edge. Such an SCC
// sits inside an SCC of the same kind for every smaller d, so only SCCs labelled C are
// refined further.
// Only label sets listed in `candidates` are tried (all nonempty subsets when absent).
// Returns a description of the first counterexample.
inline std::optional<std::string> parity_loop_criterion(const acdkit::System& p, const std::vector<std::size_t>& label,
                                                        std::size_t universe,
                                                        const std::function<bool(const Bits&)>& status,
                                                        std::optional<std::vector<std::uint32_t>> candidates = std::nullopt) {
  const auto& ts = p.graph;
  const auto& pr = std::get<acdkit::Parity>(p.condition).priority;
  std::vector<int> prio(ts.num_edges());
  std::vector<std::vector<EdgeId>> by_label(universe);
  auto reach = reachable(ts);
  for (EdgeId e = 0; e < ts.num_edges(); ++e) {
    prio[e] = pr[ts.colour(e)];
    if (reach[ts.source(e)]) by_label[label[e]].push_back(e);
  }
  EdgeSccs edge_sccs(ts);
  if (!candidates) {
    candidates.emplace();
    for (std::uint32_t cm = 1; cm < (1u << universe); ++cm) candidates->push_back(cm);
  }
  for (auto cm : *candidates) {
    Bits set(universe);
    std::vector<EdgeId> start;
    for (std::size_t u = 0; u < universe; ++u)
      if (cm >> u & 1u) {
        set.set(u);
        start.insert(start.end(), by_label[u].begin(), by_label[u].end());
      }
    std::optional<bool> accepted;
    std::vector<std::vector<EdgeId>> work = {std::move(start)};
    while (!work.empty()) {
      auto split = edge_sccs(work.back());
      work.pop_back();
      for (std::size_t c = 0; c + 1 < split.offset.size(); ++c) {
        const auto* b = split.edges.data() + split.offset[c];
        const auto* f = split.edges.data() + split.offset[c + 1];
        std::uint32_t labels = 0;
        int d = 1 << 30;
        for (auto* e = b; e != f; ++e) labels |= 1u << label[*e], d = std::min(d, prio[*e]);
        if (labels != cm) continue;
        if (!accepted) accepted = status(set);
        if ((d % 2 == 0) != *accepted)
          return "labels " + std::to_string(cm) + " with minimum priority " + std::to_string(d);
        std::vector<EdgeId> above;
        std::uint32_t above_labels = 0;
        for (auto* e = b; e != f; ++e)
          if (prio[*e] > d) above.push_back(*e), above_labels |= 1u << label[*e];
        if (above_labels == cm) work.push_back(std::move(above));
      }
    }
  }
  return std::nullopt;
}

// Same criterion by enumerating the loops of P directly (edge count <= 16).
inline std::optional<std::string> parity_loop_criterion_brute(const acdkit::System& p,
                                                              const std::vector<std::size_t>& label,
                                                              std::size_t universe,
                                                              const std::function<bool(const Bits&)>& status) {
  const auto& pr = std::get<acdkit::Parity>(p.condition).priority;
  for (const auto& l : loops(p.graph)) {
    int lo = 1 << 30;
    Bits set(universe);
    for (auto e = l.find_first(); e != Bits::npos; e = l.find_next(e)) {
      lo = std::min(lo, pr[p.graph.colour(e)]);
      set.set(label[e]);
    }
    if ((lo % 2 == 0) != status(set)) return "loop with minimum " + std::to_string(lo);
  }
  return std::nullopt;
}

// Winner per vertex of an edge-priority parity game by trying every positional strategy of
// `player`. Nullopt when there are more than `budget` strategies.
inline std::optional<std::vector<bool>> positional_wins(const acdkit::System& g, acdkit::Player player,
                                                        std::uint64_t budget = 1u << 16) {
  using namespace acdkit;
  const auto& ts = g.graph;
  const auto& pr = std::get<Parity>(g.condition).priority;
  const auto n = ts.num_vertices();
  const int good = player == Player::Eve ? 0 : 1;
  std::vector<VertexId> mine;
  std::uint64_t count = 1;
  for (VertexId v = 0; v < n; ++v)
    if (owner_player(ts.owner(v)) == player) {
      mine.push_back(v);
      count *= ts.out(v).size();
      if (count > budget) return std::nullopt;
    }
  std::vector<bool> wins(n, false);
  std::vector<std::size_t> pick(mine.size(), 0);
  for (std::uint64_t s = 0; s < count; ++s) {
    std::vector<bool> allowed(ts.num_edges(), true);
    for (std::size_t k = 0; k < mine.size(); ++k)
      for (std::size_t j = 0; j < ts.out(mine[k]).size(); ++j) allowed[ts.out(mine[k])[j]] = j == pick[k];
    // Seeds of losing: vertices on a cycle whose minimum has the wrong parity.
    std::vector<bool> bad_seed(n, false);
    for (EdgeId d_edge = 0; d_edge < ts.num_edges(); ++d_edge) {
      int d = pr[ts.colour(d_edge)];
      if (d % 2 == good || !allowed[d_edge]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> arcs;
      for (EdgeId e = 0; e < ts.num_edges(); ++e)
        if (allowed[e] && pr[ts.colour(e)] >= d) arcs.emplace_back(ts.source(e), ts.target(e));
      auto comp = scc_ids(n, arcs);
      if (comp[ts.source(d_edge)] == comp[ts.target(d_edge)]) bad_seed[ts.source(d_edge)] = true;
    }
    std::vector<std::pair<std::size_t, std::size_t>> back;
    for (EdgeId e = 0; e < ts.num_edges(); ++e)
      if (allowed[e]) back.emplace_back(ts.target(e), ts.source(e));
    std::vector<std::size_t> seeds;
    for (VertexId v = 0; v < n; ++v)
      if (bad_seed[v]) seeds.push_back(v);
    auto losing = bfs(n, back, seeds);
    for (VertexId v = 0; v < n; ++v)
      if (!losing[v]) wins[v] = true;
    for (std::size_t k = 0; k < mine.size(); ++k) {
      if (++pick[k] < ts.out(mine[k]).size()) break;
      pick[k] = 0;
    }
  }
  return wins;
}

// Random generators. Every vertex gets at least one outgoing edge.
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

  TransitionSystem graph(int max_vertices, int max_edges, bool owners = false) {
    int n = uniform(1, max_vertices);
    int m = uniform(n, std::max(n, max_edges));
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<TransitionSystem::Edge> edges;
    for (int e = 0; e < m; ++e) {
      int s = e < n ? e : uniform(0, n - 1);
      edges.push_back({"e" + std::to_string(e), static_cast<VertexId>(s), static_cast<VertexId>(uniform(0, n - 1))});
    }
    // Sort edge names so that ids follow the canonical (sorted) order of names.
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::string id = std::to_string(e);
      edges[e].name = "e" + std::string(2 - std::min<std::size_t>(2, id.size()), '0') + id;
    }
    TransitionSystem ts(names, edges, {0});
    if (owners) {
      std::vector<acdkit::Owner> o;
      for (int v = 0; v < n; ++v) o.push_back(coin() ? acdkit::Owner::Eve : acdkit::Owner::Adam);
      ts.set_owners(o);
    }
    return ts;
  }

  // Random family of nonempty colour sets over n colours.
  std::vector<Bits> family(std::size_t n, double density = 0.5) {
    std::vector<Bits> f;
    for (std::uint32_t m = 1; m < (1u << n); ++m)
      if (coin(density)) {
        Bits b(n);
        for (std::size_t c = 0; c < n; ++c)
          if (m >> c & 1u) b.set(c);
        f.push_back(b);
      }
    return f;
  }

  // Muller condition over edges picking accepting loops at random.
  acdkit::Muller loop_family(const TransitionSystem& ts) {
    acdkit::Muller m;
    for (const auto& l : loops(ts))
      if (coin()) m.family.push_back(l);
    return m;
  }
};

}  // namespace oracle
