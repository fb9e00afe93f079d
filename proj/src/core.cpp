#include "acdkit/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "acdkit/loops.hpp"

namespace acdkit {

std::vector<std::size_t> elements(const Bits& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

Bits make_bits(std::size_t universe, const std::vector<std::size_t>& members) {
  Bits b(universe);
  for (auto m : members) b.set(m);
  return b;
}

bool canonical_less(const Bits& a, const Bits& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca > cb;
  auto i = a.find_first(), j = b.find_first();
  while (i != Bits::npos && j != Bits::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

// ---------------------------------------------------------------- TransitionSystem

TransitionSystem::TransitionSystem(std::vector<std::string> vertex_names, std::vector<Edge> edges,
                                   std::vector<VertexId> initial)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)), initial_(std::move(initial)) {
  const auto n = vertex_names_.size();
  out_.assign(n, {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (ed.source >= n || ed.target >= n)
      throw InputError("edge '" + ed.name + "' has an endpoint outside the vertex set");
    out_[ed.source].push_back(e);
  }
  for (auto v : initial_)
    if (v >= n) throw InputError("initial vertex index out of range");
  std::sort(initial_.begin(), initial_.end());
  initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
  for (VertexId v = 0; v < n; ++v) vertex_index_.emplace(vertex_names_[v], v);
  for (EdgeId e = 0; e < edges_.size(); ++e) edge_index_.emplace(edges_[e].name, e);
}

void TransitionSystem::set_owners(std::vector<Owner> owners) {
  if (owners.size() != num_vertices()) throw InputError("owner map must cover every vertex");
  owners_ = std::move(owners);
}

void TransitionSystem::set_letters(std::vector<std::string> letters) {
  if (letters.size() != num_edges()) throw InputError("letter map must cover every edge");
  letters_ = std::move(letters);
}

void TransitionSystem::set_colouring(std::vector<std::string> colour_names,
                                     std::vector<ColourId> edge_colour) {
  if (edge_colour.size() != num_edges()) throw InputError("colour map must cover every edge");
  for (auto c : edge_colour)
    if (c >= colour_names.size()) throw InputError("edge colour out of range");
  colour_names_ = std::move(colour_names);
  edge_colour_ = std::move(edge_colour);
  colour_index_.clear();
  for (ColourId c = 0; c < colour_names_.size(); ++c) colour_index_.emplace(colour_names_[c], c);
}

void TransitionSystem::clear_colouring() {
  colour_names_.clear();
  edge_colour_.clear();
  colour_index_.clear();
}

std::size_t TransitionSystem::num_colours() const {
  return has_colouring() ? colour_names_.size() : edges_.size();
}

const std::string& TransitionSystem::colour_name(ColourId c) const {
  return has_colouring() ? colour_names_[c] : edges_[c].name;
}

std::optional<VertexId> TransitionSystem::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> TransitionSystem::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ColourId> TransitionSystem::find_colour(const std::string& name) const {
  if (!has_colouring()) return find_edge(name);
  auto it = colour_index_.find(name);
  if (it == colour_index_.end()) return std::nullopt;
  return it->second;
}

ColourSet TransitionSystem::colours_of(const EdgeSet& edges) const {
  if (!has_colouring()) return edges;
  ColourSet out(num_colours());
  for (auto e = edges.find_first(); e != Bits::npos; e = edges.find_next(e)) out.set(edge_colour_[e]);
  return out;
}

VertexSet TransitionSystem::sources_of(const EdgeSet& edges) const {
  VertexSet out(num_vertices());
  for (auto e = edges.find_first(); e != Bits::npos; e = edges.find_next(e)) out.set(edges_[e].source);
  return out;
}

TransitionSystem TransitionSystem::with_edge_colours() const {
  TransitionSystem t = *this;
  t.clear_colouring();
  return t;
}

// ---------------------------------------------------------------- conditions

const char* condition_kind(const AcceptanceCondition& c) {
  static constexpr const char* names[] = {"muller", "parity", "buchi", "co-buchi", "rabin", "streett"};
  return names[c.index()];
}

namespace {

bool intersects(const Bits& a, const Bits& b) { return a.intersects(b); }

bool eval(const AcceptanceCondition& cond, const ColourSet& l) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Muller>) {
          return std::find(c.family.begin(), c.family.end(), l) != c.family.end();
        } else if constexpr (std::is_same_v<T, Parity>) {
          int best = -1;
          for (auto x = l.find_first(); x != Bits::npos; x = l.find_next(x))
            if (best < 0 || c.priority[x] < best) best = c.priority[x];
          return best % 2 == 0;
        } else if constexpr (std::is_same_v<T, Buchi>) {
          return intersects(l, c.set);
        } else if constexpr (std::is_same_v<T, CoBuchi>) {
          return !intersects(l, c.set);
        } else if constexpr (std::is_same_v<T, Rabin>) {
          for (const auto& p : c.pairs)
            if (intersects(l, p.e) && !intersects(l, p.f)) return true;
          return false;
        } else {
          for (const auto& p : c.pairs)
            if (intersects(l, p.e) && !intersects(l, p.f)) return false;
          return true;
        }
      },
      cond);
}

std::size_t universe_of(const AcceptanceCondition& cond) {
  return std::visit(
      [](const auto& c) -> std::size_t {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Muller>) {
          return c.family.empty() ? Bits::npos : c.family.front().size();
        } else if constexpr (std::is_same_v<T, Parity>) {
          return c.priority.size();
        } else if constexpr (std::is_same_v<T, Buchi> || std::is_same_v<T, CoBuchi>) {
          return c.set.size();
        } else {
          return c.pairs.empty() ? Bits::npos : c.pairs.front().e.size();
        }
      },
      cond);
}

}  // namespace

bool loop_status(const AcceptanceCondition& cond, const ColourSet& l) {
  if (l.none()) throw InputError("loop status of an empty colour set is undefined");
  auto u = universe_of(cond);
  if (u != Bits::npos && u != l.size()) throw InputError("colour set refers to unknown colours");
  return eval(cond, l);
}

ConditionEvaluator::ConditionEvaluator(AcceptanceCondition cond, std::size_t num_colours)
    : cond_(std::move(cond)), num_colours_(num_colours) {
  auto u = universe_of(cond_);
  if (u != Bits::npos && u != num_colours) throw InputError("condition does not match the colour universe");
  if (auto* m = std::get_if<Muller>(&cond_)) muller_.insert(m->family.begin(), m->family.end());
}

bool ConditionEvaluator::operator()(const ColourSet& l) const {
  if (std::holds_alternative<Muller>(cond_)) return muller_.count(l) != 0;
  return eval(cond_, l);
}

EdgeStatus::EdgeStatus(const System& s) : EdgeStatus(s.graph, s.condition) {}

EdgeStatus::EdgeStatus(const TransitionSystem& ts, const AcceptanceCondition& cond)
    : ts_(&ts), eval_(cond, ts.num_colours()) {}

// ---------------------------------------------------------------- validation

ValidationReport validate(const TransitionSystem& ts) {
  ValidationReport r;
  if (ts.num_vertices() == 0) r.violations.push_back("no vertices");
  if (ts.initial().empty()) r.violations.push_back("empty initial set");
  std::set<std::string> seen;
  for (const auto& v : ts.vertex_names())
    if (!seen.insert(v).second) r.violations.push_back("duplicate vertex id '" + v + "'");
  seen.clear();
  for (const auto& e : ts.edges())
    if (!seen.insert(e.name).second) r.violations.push_back("duplicate edge id '" + e.name + "'");
  for (VertexId v = 0; v < ts.num_vertices(); ++v)
    if (ts.out(v).empty()) r.violations.push_back("dead-end vertex '" + ts.vertex_name(v) + "'");
  if (ts.has_colouring()) {
    seen.clear();
    for (const auto& c : ts.colour_names())
      if (!seen.insert(c).second) r.violations.push_back("duplicate colour id '" + c + "'");
  }
  return r;
}

ValidationReport validate(const TransitionSystem& ts, const AcceptanceCondition& cond) {
  auto r = validate(ts);
  const auto n = ts.num_colours();
  auto check_set = [&](const ColourSet& s, const std::string& what) {
    if (s.size() != n) r.violations.push_back(what + " refers to unknown colours");
  };
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Muller>) {
          std::set<std::vector<std::size_t>> distinct;
          for (const auto& s : c.family) {
            check_set(s, "Muller set");
            if (s.none()) r.violations.push_back("empty set in family");
            else if (!distinct.insert(elements(s)).second)
              r.violations.push_back("duplicate set in family");
          }
        } else if constexpr (std::is_same_v<T, Parity>) {
          if (c.priority.size() != n) r.violations.push_back("parity map is not total over the colours");
          for (auto p : c.priority)
            if (p < 0) {
              r.violations.push_back("negative priority");
              break;
            }
        } else if constexpr (std::is_same_v<T, Buchi> || std::is_same_v<T, CoBuchi>) {
          check_set(c.set, "Buchi set");
        } else {
          for (const auto& p : c.pairs) {
            check_set(p.e, "pair set E");
            check_set(p.f, "pair set F");
          }
        }
      },
      cond);
  return r;
}

// ---------------------------------------------------------------- conversions

System to_explicit_muller(const System& s, const Limits& limits) {
  EdgeStatus status(s);
  Muller m;
  for (const auto& l : enumerate_reachable_loops(s.graph, limits))
    if (status(l)) m.family.push_back(l);
  return System{s.graph.with_edge_colours(), std::move(m)};
}

Muller to_muller_over_colours(const AcceptanceCondition& cond, std::size_t num_colours) {
  if (num_colours > 20) throw CapExceeded("too many colours to enumerate the Muller family");
  ConditionEvaluator eval(cond, num_colours);
  Muller m;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << num_colours); ++mask) {
    ColourSet s(num_colours, mask);
    if (eval(s)) m.family.push_back(s);
  }
  std::sort(m.family.begin(), m.family.end(), canonical_less);
  return m;
}

System compose(const System& automaton, const TransitionSystem& ts) {
  const auto& a = automaton.graph;
  if (a.initial().size() != 1) throw InputError("automaton must have exactly one initial state");
  if (!a.has_letters()) throw InputError("automaton edges carry no letters");
  // δ(q, letter) -> automaton edge
  std::vector<std::unordered_map<std::string, EdgeId>> delta(a.num_vertices());
  for (EdgeId e = 0; e < a.num_edges(); ++e)
    if (!delta[a.source(e)].emplace(a.letter(e), e).second)
      throw InputError("automaton is not deterministic: state '" + a.vertex_name(a.source(e)) +
                       "' has two '" + a.letter(e) + "' edges");
  auto step = [&](VertexId q, const std::string& letter) -> EdgeId {
    auto it = delta[q].find(letter);
    if (it == delta[q].end())
      throw InputError("automaton is not complete: state '" + a.vertex_name(q) + "' lacks letter '" +
                       letter + "'");
    return it->second;
  };

  const auto nq = a.num_vertices();
  auto vid = [&](VertexId v, VertexId q) { return v * nq + q; };
  std::vector<std::string> names;
  for (VertexId v = 0; v < ts.num_vertices(); ++v)
    for (VertexId q = 0; q < nq; ++q) names.push_back("(" + ts.vertex_name(v) + "," + a.vertex_name(q) + ")");
  std::vector<TransitionSystem::Edge> edges;
  std::vector<ColourId> colour;
  std::vector<std::string> letters;
  std::vector<std::pair<EdgeId, VertexId>> origin;
  for (VertexId v = 0; v < ts.num_vertices(); ++v)
    for (VertexId q = 0; q < nq; ++q)
      for (auto e : ts.out(v)) {
        auto ae = step(q, ts.colour_name(ts.colour(e)));
        edges.push_back({"(" + ts.edge(e).name + "," + a.vertex_name(q) + ")", vid(v, q),
                         vid(ts.target(e), a.target(ae))});
        colour.push_back(a.colour(ae));
        if (ts.has_letters()) letters.push_back(ts.letter(e));
      }
  std::vector<VertexId> init;
  for (auto v : ts.initial()) init.push_back(vid(v, a.initial().front()));

  TransitionSystem g(std::move(names), std::move(edges), std::move(init));
  std::vector<std::string> cnames;
  for (ColourId c = 0; c < a.num_colours(); ++c) cnames.push_back(a.colour_name(c));
  g.set_colouring(std::move(cnames), std::move(colour));
  if (ts.has_letters()) g.set_letters(std::move(letters));
  if (ts.has_owners()) {
    std::vector<Owner> own;
    for (VertexId v = 0; v < ts.num_vertices(); ++v)
      for (VertexId q = 0; q < nq; ++q) own.push_back(ts.owner(v));
    g.set_owners(std::move(own));
  }
  return System{std::move(g), automaton.condition};
}

bool equivalent_over(const TransitionSystem& ts, const AcceptanceCondition& c1,
                     const AcceptanceCondition& c2, const Limits& limits) {
  EdgeStatus s1(ts, c1), s2(ts, c2);
  for (const auto& l : enumerate_reachable_loops(ts, limits))
    if (s1(l) != s2(l)) return false;
  return true;
}

bool equivalent_over(const System& a, const System& b, const Limits& limits) {
  const auto& ga = a.graph;
  const auto& gb = b.graph;
  bool same = ga.num_vertices() == gb.num_vertices() && ga.num_edges() == gb.num_edges() &&
              ga.initial() == gb.initial();
  for (VertexId v = 0; same && v < ga.num_vertices(); ++v) same = ga.vertex_name(v) == gb.vertex_name(v);
  for (EdgeId e = 0; same && e < ga.num_edges(); ++e)
    same = ga.edge(e).name == gb.edge(e).name && ga.source(e) == gb.source(e) && ga.target(e) == gb.target(e);
  if (!same) throw InputError("conditions are compared over different graphs");
  EdgeStatus s1(a), s2(b);
  for (const auto& l : enumerate_reachable_loops(ga, limits))
    if (s1(l) != s2(l)) return false;
  return true;
}

// ---------------------------------------------------------------- runs

std::optional<std::string> check_run(const TransitionSystem& ts, const Run& run) {
  if (run.cycle.empty()) return "empty cycle";
  std::vector<EdgeId> all = run.prefix;
  all.insert(all.end(), run.cycle.begin(), run.cycle.end());
  for (auto e : all)
    if (e >= ts.num_edges()) return "edge index out of range";
  const auto& init = ts.initial();
  if (!std::binary_search(init.begin(), init.end(), ts.source(all.front())))
    return "run does not start at an initial vertex";
  for (std::size_t k = 0; k + 1 < all.size(); ++k)
    if (ts.target(all[k]) != ts.source(all[k + 1]))
      return "edges '" + ts.edge(all[k]).name + "' and '" + ts.edge(all[k + 1]).name + "' are not consecutive";
  if (ts.target(run.cycle.back()) != ts.source(run.cycle.front())) return "cycle does not close";
  return std::nullopt;
}

EdgeSet inf_edges(const TransitionSystem& ts, const Run& run) {
  auto s = ts.empty_edges();
  for (auto e : run.cycle) s.set(e);
  return s;
}

bool run_accepted(const System& s, const Run& run) {
  return loop_status(s.condition, s.graph.colours_of(inf_edges(s.graph, run)));
}

bool same_run(const Run& a, const Run& b) {
  if (a.cycle.empty() || b.cycle.empty()) return a.prefix == b.prefix && a.cycle == b.cycle;
  auto at = [](const Run& r, std::size_t k) {
    return k < r.prefix.size() ? r.prefix[k] : r.cycle[(k - r.prefix.size()) % r.cycle.size()];
  };
  // Two ultimately periodic words agree everywhere iff they agree on this horizon.
  const auto horizon = std::max(a.prefix.size(), b.prefix.size()) + std::lcm(a.cycle.size(), b.cycle.size());
  for (std::size_t k = 0; k < horizon; ++k)
    if (at(a, k) != at(b, k)) return false;
  return true;
}

}  // namespace acdkit
