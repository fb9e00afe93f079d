#include "acdkit/relabel.hpp"

#include <algorithm>
#include <set>

#include "acdkit/loops.hpp"

namespace acdkit {

AcdShapeReport classify_acd(const Acd& acd) {
  AcdShapeReport r;
  r.rabin_acd = r.streett_acd = true;
  for (VertexId q = 0; q < acd.vertex_tree.size(); ++q) {
    const int i = acd.vertex_tree[q];
    const auto& t = acd.trees[i];
    for (int n : acd.subtree_for_state(q)) {
      const auto& kids = t.nodes[n].children;
      auto in_tq = std::count_if(kids.begin(), kids.end(), [&](int c) { return t.nodes[c].states.test(q); });
      if (in_tq <= 1) continue;
      const bool round = t.nodes[n].priority % 2 == 0;
      (round ? r.rabin_acd : r.streett_acd) = false;
      r.offenders.push_back({q, i, n, round});
    }
  }
  r.parity_acd = r.rabin_acd && r.streett_acd;
  if (r.parity_acd) {
    auto st = acd_stats(acd);
    r.interval = st.priorities;
    r.weak_k = *std::max_element(st.heights.begin(), st.heights.end());
  }
  return r;
}

namespace {

std::vector<RabinPair> pairs_for(const TransitionSystem& ts, const Acd& acd, bool round) {
  std::vector<RabinPair> pairs;
  EdgeSet all(ts.num_edges());
  all.set();
  for (std::size_t i = 1; i < acd.trees.size(); ++i) {
    const auto& t = acd.trees[i];
    for (const auto& n : t.nodes) {
      if ((n.priority % 2 == 0) != round) continue;
      EdgeSet e = n.label;
      for (int c : n.children) e -= t.nodes[c].label;
      if (e.none()) continue;  // a pair with empty E never fires
      pairs.push_back({std::move(e), all - n.label});
    }
  }
  return pairs;
}

}  // namespace

Rabin rabin_from_acd(const TransitionSystem& ts, const Acd& acd) {
  if (!classify_acd(acd).rabin_acd) throw InputError("ACD does not have Rabin shape");
  return Rabin{pairs_for(ts, acd, true)};
}

Streett streett_from_acd(const TransitionSystem& ts, const Acd& acd) {
  if (!classify_acd(acd).streett_acd) throw InputError("ACD does not have Streett shape");
  return Streett{pairs_for(ts, acd, false)};
}

Parity parity_relabel(const System& s, const Acd& acd) {
  if (!classify_acd(acd).parity_acd) throw InputError("ACD does not have parity shape");
  auto t = acd_transform(s, acd);
  const auto& prio = std::get<Parity>(t.system.condition).priority;
  Parity p{std::vector<int>(s.graph.num_edges(), 0)};
  // One transform vertex per state, so every original edge has exactly one copy.
  for (EdgeId e = 0; e < t.edge_origin.size(); ++e) p.priority[t.edge_origin[e]] = prio[e];
  return p;
}

Interval used_interval(const TransitionSystem& ts, const Parity& p) {
  Interval r{0, 0};
  bool first = true;
  for (EdgeId e = 0; e < ts.num_edges(); ++e) {
    int v = p.priority[ts.colour(e)];
    if (first || v < r.lo) r.lo = v;
    if (first || v > r.hi) r.hi = v;
    first = false;
  }
  return r;
}

Parity compress_priorities(const TransitionSystem& ts, const Parity& p) {
  std::vector<int> prio = p.priority;
  std::vector<char> on_edge(prio.size(), 0);
  for (EdgeId e = 0; e < ts.num_edges(); ++e) on_edge[ts.colour(e)] = 1;
  auto used = [&] {
    std::set<int> u;
    for (std::size_t c = 0; c < prio.size(); ++c)
      if (on_edge[c]) u.insert(prio[c]);
    return u;
  };
  for (;;) {
    auto u = used();
    if (u.empty()) return Parity{prio};
    std::optional<int> gap;
    for (int d = *u.begin() + 1; d < *u.rbegin(); ++d)
      if (!u.count(d)) {
        gap = d;
        break;
      }
    if (!gap) break;
    for (auto& v : prio)
      if (v > *gap) v -= 2;
  }
  auto u = used();
  const int mu = *u.begin();
  const int shift = mu % 2 == 0 ? mu : mu - 1;
  for (auto& v : prio) v = std::max(v - shift, 0);
  return Parity{prio};
}

bool is_weak_k(const TransitionSystem& ts, const Parity& p, int k) {
  for (const auto& scc : sccs(ts).loops) {
    std::set<int> used;
    for (auto e = scc.find_first(); e != Bits::npos; e = scc.find_next(e)) used.insert(p.priority[ts.colour(e)]);
    if (static_cast<int>(used.size()) > k) return false;
  }
  return true;
}

bool fits_within(const Interval& used, const Interval& bound) {
  int shift = bound.lo - used.lo;
  if (shift % 2 != 0) ++shift;
  return used.hi + shift <= bound.hi;
}

}  // namespace acdkit
