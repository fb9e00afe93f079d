#include "acdkit/games.hpp"

#include <algorithm>

#include "acdkit/loops.hpp"

namespace acdkit {

namespace {

// Vertex-priority arena: one node per game vertex (neutral top priority) followed by one
// node per edge carrying that edge's priority.
struct Arena {
  std::vector<int> priority;
  std::vector<Player> owner;
  std::vector<std::vector<int>> succ, pred;
};

struct Partial {
  std::vector<char> eve;  // membership in Eve's region
  std::vector<char> adam;
};

class Solver {
 public:
  explicit Solver(const Arena& a) : a_(a), strategy_(a.priority.size(), -1) {}

  std::vector<Player> solve() {
    std::vector<char> all(a_.priority.size(), 1);
    auto r = recurse(all);
    std::vector<Player> w(a_.priority.size());
    for (std::size_t v = 0; v < w.size(); ++v) w[v] = r.eve[v] ? Player::Eve : Player::Adam;
    return w;
  }
  const std::vector<int>& strategy() const { return strategy_; }

 private:
  // Attractor for `p` to `target` inside `sub`; records attracting moves for p's nodes.
  std::vector<char> attract(const std::vector<char>& sub, const std::vector<char>& target, Player p) {
    const auto n = sub.size();
    std::vector<char> in = target;
    std::vector<int> remaining(n, 0), work;
    for (std::size_t v = 0; v < n; ++v) {
      if (!sub[v]) continue;
      for (int w : a_.succ[v]) remaining[v] += sub[w];
      if (in[v]) work.push_back(static_cast<int>(v));
    }
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      for (int u : a_.pred[v]) {
        if (!sub[u] || in[u]) continue;
        if (a_.owner[u] == p) {
          in[u] = 1;
          strategy_[u] = v;
          work.push_back(u);
        } else if (--remaining[u] == 0) {
          in[u] = 1;
          work.push_back(u);
        }
      }
    }
    return in;
  }

  Partial recurse(const std::vector<char>& sub) {
    const auto n = sub.size();
    Partial r{std::vector<char>(n, 0), std::vector<char>(n, 0)};
    int d = -1;
    for (std::size_t v = 0; v < n; ++v)
      if (sub[v] && (d < 0 || a_.priority[v] < d)) d = a_.priority[v];
    if (d < 0) return r;
    const Player alpha = d % 2 == 0 ? Player::Eve : Player::Adam;
    std::vector<char> top(n, 0);
    for (std::size_t v = 0; v < n; ++v) top[v] = sub[v] && a_.priority[v] == d;
    auto a = attract(sub, top, alpha);
    std::vector<char> rest(n, 0);
    for (std::size_t v = 0; v < n; ++v) rest[v] = sub[v] && !a[v];
    auto r1 = recurse(rest);
    auto& opp1 = alpha == Player::Eve ? r1.adam : r1.eve;
    if (std::none_of(opp1.begin(), opp1.end(), [](char c) { return c != 0; })) {
      auto& mine = alpha == Player::Eve ? r.eve : r.adam;
      for (std::size_t v = 0; v < n; ++v) mine[v] = sub[v];
      // Top-priority nodes of alpha may move anywhere inside the subgame.
      for (std::size_t v = 0; v < n; ++v)
        if (top[v] && a_.owner[v] == alpha)
          for (int w : a_.succ[v])
            if (sub[w]) {
              strategy_[v] = w;
              break;
            }
      return r;
    }
    auto b = attract(sub, opp1, opponent(alpha));
    std::vector<char> rest2(n, 0);
    for (std::size_t v = 0; v < n; ++v) rest2[v] = sub[v] && !b[v];
    auto r2 = recurse(rest2);
    auto& opp = alpha == Player::Eve ? r.adam : r.eve;
    auto& mine = alpha == Player::Eve ? r.eve : r.adam;
    const auto& opp2 = alpha == Player::Eve ? r2.adam : r2.eve;
    const auto& mine2 = alpha == Player::Eve ? r2.eve : r2.adam;
    for (std::size_t v = 0; v < n; ++v) {
      opp[v] = b[v] || opp2[v];
      mine[v] = mine2[v];
    }
    return r;
  }

  const Arena& a_;
  std::vector<int> strategy_;
};

int edge_priority(const System& g, EdgeId e) {
  return std::get<Parity>(g.condition).priority[g.graph.colour(e)];
}

void require_game(const System& g) {
  if (!g.graph.has_owners()) throw InputError("game vertices carry no owners");
  auto r = validate(g.graph, g.condition);
  if (!r.ok()) throw InputError(r.violations.front());
}

}  // namespace

ParitySolution solve_parity_game(const System& g) {
  require_game(g);
  if (!std::holds_alternative<Parity>(g.condition)) throw InputError("parity game expected");
  const auto& ts = g.graph;
  const auto nv = ts.num_vertices(), ne = ts.num_edges();
  Arena a;
  int top = 0;
  for (EdgeId e = 0; e < ne; ++e) top = std::max(top, edge_priority(g, e));
  a.priority.assign(nv + ne, top);
  a.owner.assign(nv + ne, Player::Eve);
  a.succ.assign(nv + ne, {});
  a.pred.assign(nv + ne, {});
  for (VertexId v = 0; v < nv; ++v) a.owner[v] = owner_player(ts.owner(v));
  for (EdgeId e = 0; e < ne; ++e) {
    const int node = static_cast<int>(nv + e);
    a.priority[node] = edge_priority(g, e);
    a.succ[ts.source(e)].push_back(node);
    a.succ[node].push_back(static_cast<int>(ts.target(e)));
  }
  for (std::size_t v = 0; v < a.succ.size(); ++v)
    for (int w : a.succ[v]) a.pred[w].push_back(static_cast<int>(v));

  Solver solver(a);
  auto w = solver.solve();
  ParitySolution sol;
  sol.winner.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(nv));
  sol.choice.assign(nv, std::nullopt);
  for (VertexId v = 0; v < nv; ++v) {
    if (sol.winner[v] != owner_player(ts.owner(v))) continue;
    int s = solver.strategy()[v];
    if (s >= static_cast<int>(nv)) sol.choice[v] = static_cast<EdgeId>(s) - nv;
  }
  if (!verify_strategy(g, sol, Player::Eve) || !verify_strategy(g, sol, Player::Adam))
    throw Error("internal error: parity game strategy failed its certificate check");
  return sol;
}

bool verify_strategy(const System& g, const ParitySolution& sol, Player player) {
  const auto& ts = g.graph;
  EdgeSet kept(ts.num_edges());
  for (VertexId v = 0; v < ts.num_vertices(); ++v) {
    if (sol.winner[v] != player) continue;
    if (owner_player(ts.owner(v)) == player) {
      if (!sol.choice[v] || ts.source(*sol.choice[v]) != v) return false;
      kept.set(*sol.choice[v]);
    } else {
      for (auto e : ts.out(v)) kept.set(e);
    }
  }
  for (auto e = kept.find_first(); e != Bits::npos; e = kept.find_next(e))
    if (sol.winner[ts.target(e)] != player) return false;
  // No loop of the restricted graph may have a minimum of the opponent's parity.
  const int bad = player == Player::Eve ? 1 : 0;
  std::vector<int> prios;
  for (auto e = kept.find_first(); e != Bits::npos; e = kept.find_next(e)) prios.push_back(edge_priority(g, e));
  std::sort(prios.begin(), prios.end());
  prios.erase(std::unique(prios.begin(), prios.end()), prios.end());
  for (int d : prios) {
    if (d % 2 != bad) continue;
    EdgeSet sub(ts.num_edges());
    for (auto e = kept.find_first(); e != Bits::npos; e = kept.find_next(e))
      if (edge_priority(g, e) >= d) sub.set(e);
    for (const auto& c : split_loops(ts, sub))
      for (auto e = c.find_first(); e != Bits::npos; e = c.find_next(e))
        if (edge_priority(g, e) == d) return false;
  }
  return true;
}

MullerSolution solve_muller_game(const System& g, const Limits& limits) {
  require_game(g);
  MullerSolution out;
  out.transform = acd_transform(g, limits);
  out.transform_solution = solve_parity_game(out.transform.system);
  const auto& origin = out.transform.vertex_origin;
  std::vector<std::optional<Player>> w(g.graph.num_vertices());
  for (VertexId v = 0; v < origin.size(); ++v) {
    auto p = out.transform_solution.winner[v];
    auto& slot = w[origin[v]];
    if (slot && *slot != p) throw Error("internal error: copies of a vertex disagree on the winner");
    slot = p;
  }
  for (const auto& p : w) out.winner.push_back(p.value_or(Player::Adam));
  return out;
}

}  // namespace acdkit
