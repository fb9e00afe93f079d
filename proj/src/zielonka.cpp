#include "acdkit/zielonka.hpp"

#include <algorithm>
#include <functional>

namespace acdkit {

std::vector<ColourSet> zielonka_children(const std::unordered_set<ColourSet>& family, const ColourSet& s,
                                         const Limits& limits) {
  const bool st = family.count(s) != 0;
  std::unordered_set<ColourSet> visited{s};
  std::vector<ColourSet> work{s}, flipped;
  while (!work.empty()) {
    auto cur = std::move(work.back());
    work.pop_back();
    for (auto c = cur.find_first(); c != Bits::npos; c = cur.find_next(c)) {
      auto rest = cur;
      rest.reset(c);
      if (rest.none() || !visited.insert(rest).second) continue;
      if (visited.size() > limits.explore_cap)
        throw CapExceeded("exploration cap of " + std::to_string(limits.explore_cap) + " subsets exceeded");
      if ((family.count(rest) != 0) != st) flipped.push_back(std::move(rest));
      else work.push_back(std::move(rest));
    }
  }
  std::vector<ColourSet> maximal;
  for (const auto& m : flipped)
    if (std::none_of(flipped.begin(), flipped.end(), [&](const ColourSet& o) { return o != m && m.is_subset_of(o); }))
      maximal.push_back(m);
  std::sort(maximal.begin(), maximal.end(), canonical_less);
  return maximal;
}

ZielonkaTree::ZielonkaTree(const std::vector<ColourSet>& family, std::size_t num_colours, const Limits& limits)
    : num_colours_(num_colours) {
  if (num_colours == 0) throw InputError("Zielonka tree over an empty colour set");
  for (const auto& s : family) {
    if (s.size() != num_colours) throw InputError("family set refers to unknown colours");
    if (s.none()) throw InputError("empty set in family");
    family_.insert(s);
  }
  ColourSet all(num_colours);
  all.set();
  even_ = accepts(all);
  add(all, -1, limits);
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    height_ = std::max(height_, nodes_[i].depth + 1);
    if (nodes_[i].children.empty()) leaves_.push_back(i);
  }
}

bool ZielonkaTree::accepts(const ColourSet& s) const { return family_.count(s) != 0; }

int ZielonkaTree::add(ColourSet label, int parent, const Limits& limits) {
  const int id = static_cast<int>(nodes_.size());
  Node n;
  n.parent = parent;
  n.depth = parent < 0 ? 0 : nodes_[parent].depth + 1;
  n.priority = n.depth + (even_ ? 0 : 1);
  n.label = std::move(label);
  nodes_.push_back(std::move(n));
  for (auto& child : zielonka_children(family_, nodes_[id].label, limits)) {
    int c = add(std::move(child), id, limits);
    nodes_[id].children.push_back(c);
  }
  return id;
}

std::vector<int> ZielonkaTree::address(int node) const {
  std::vector<int> a;
  for (int v = node; nodes_[v].parent >= 0; v = nodes_[v].parent) {
    const auto& sib = nodes_[nodes_[v].parent].children;
    a.push_back(static_cast<int>(std::find(sib.begin(), sib.end(), v) - sib.begin()));
  }
  std::reverse(a.begin(), a.end());
  return a;
}

int ZielonkaTree::find(const std::vector<int>& address) const {
  int v = 0;
  for (int k : address) {
    if (k < 0 || k >= static_cast<int>(nodes_[v].children.size())) return -1;
    v = nodes_[v].children[k];
  }
  return v;
}

int ZielonkaTree::supp(int leaf, ColourId a) const {
  int v = leaf;
  while (!nodes_[v].label.test(a)) v = nodes_[v].parent;
  return v;
}

int ZielonkaTree::nextchild(int leaf, int node) const {
  const auto& kids = nodes_[node].children;
  if (kids.empty()) return node;
  int sigma = leaf;
  while (nodes_[sigma].parent != node) sigma = nodes_[sigma].parent;
  auto k = std::find(kids.begin(), kids.end(), sigma) - kids.begin();
  return kids[(k + 1) % kids.size()];
}

int ZielonkaTree::leftmost_leaf(int node) const {
  while (!nodes_[node].children.empty()) node = nodes_[node].children.front();
  return node;
}

int ZielonkaTree::nextbranch(int leaf, int node) const {
  if (nodes_[node].children.empty()) return leaf;
  return leftmost_leaf(nextchild(leaf, node));
}

ZTAutomaton build_zt_automaton(const ZielonkaTree& tree) {
  ZTAutomaton z;
  z.leaf = tree.leaves();
  std::vector<int> state_of(tree.nodes().size(), -1);
  for (std::size_t s = 0; s < z.leaf.size(); ++s) state_of[z.leaf[s]] = static_cast<int>(s);
  const auto m = tree.num_colours();
  z.next.assign(z.leaf.size(), std::vector<int>(m));
  z.output.assign(z.leaf.size(), std::vector<int>(m));
  for (std::size_t s = 0; s < z.leaf.size(); ++s)
    for (ColourId a = 0; a < m; ++a) {
      int tau = tree.supp(z.leaf[s], a);
      z.next[s][a] = state_of[tree.nextbranch(z.leaf[s], tau)];
      z.output[s][a] = tree.node(tau).priority;
    }
  z.initial = 0;
  z.interval = optimal_parity_interval(tree);
  return z;
}

std::string address_string(const std::vector<int>& address) {
  std::string s = "<";
  for (std::size_t k = 0; k < address.size(); ++k) s += (k ? "," : "") + std::to_string(address[k]);
  return s + ">";
}

System zt_system(const ZielonkaTree& tree, const ZTAutomaton& z, const std::vector<std::string>& colour_names) {
  if (colour_names.size() != tree.num_colours()) throw InputError("colour names do not match the tree");
  std::vector<std::string> names;
  for (auto leaf : z.leaf) names.push_back(address_string(tree.address(leaf)));
  std::vector<TransitionSystem::Edge> edges;
  std::vector<std::string> letters;
  std::vector<int> prio;
  for (std::size_t s = 0; s < z.leaf.size(); ++s)
    for (ColourId a = 0; a < colour_names.size(); ++a) {
      edges.push_back({names[s] + ":" + colour_names[a], s, static_cast<VertexId>(z.next[s][a])});
      letters.push_back(colour_names[a]);
      prio.push_back(z.output[s][a]);
    }
  TransitionSystem g(std::move(names), std::move(edges), {static_cast<VertexId>(z.initial)});
  g.set_letters(std::move(letters));
  return System{std::move(g), Parity{std::move(prio)}};
}

TreeShape shape(const ZielonkaTree& tree) {
  TreeShape s{true, true, true};
  for (const auto& n : tree.nodes()) {
    if (n.children.size() <= 1) continue;
    s.parity = false;
    (n.priority % 2 == 0 ? s.rabin : s.streett) = false;
  }
  return s;
}

Interval optimal_parity_interval(const ZielonkaTree& tree) {
  return tree.even() ? Interval{0, tree.height() - 1} : Interval{1, tree.height()};
}

ClosureReport closure_oracle(const std::vector<ColourSet>& family, std::size_t num_colours) {
  std::unordered_set<ColourSet> f(family.begin(), family.end());
  ClosureReport r{true, true, true};
  for (const auto& a : family)
    for (const auto& b : family) {
      if (!f.count(a | b)) r.union_closed = false;
      auto i = a & b;
      if (i.any() && !f.count(i)) r.intersection_closed = false;
    }
  if (num_colours > 20) throw CapExceeded("too many colours to enumerate rejecting sets");
  std::vector<ColourSet> rejecting;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << num_colours); ++mask) {
    ColourSet s(num_colours, mask);
    if (!f.count(s)) rejecting.push_back(s);
  }
  std::unordered_set<ColourSet> rej(rejecting.begin(), rejecting.end());
  for (std::size_t x = 0; x < rejecting.size() && r.rejecting_union_closed; ++x)
    for (std::size_t y = x + 1; y < rejecting.size(); ++y)
      if (!rej.count(rejecting[x] | rejecting[y])) {
        r.rejecting_union_closed = false;
        break;
      }
  return r;
}

// ---------------------------------------------------------------- exhaustive recognizer search

namespace {

struct SmallLoop {
  std::uint32_t edges;  // bits over the reachable edge list
  int max_edge;
  bool accepting;
};

class RecognizerSearch {
 public:
  RecognizerSearch(const std::vector<ColourSet>& family, std::size_t m, int k_max)
      : m_(static_cast<int>(m)), k_max_(k_max) {
    accepting_.assign(std::size_t{1} << m, false);
    for (const auto& s : family) {
      std::uint32_t mask = 0;
      for (auto c = s.find_first(); c != Bits::npos; c = s.find_next(c)) mask |= 1u << c;
      accepting_[mask] = true;
    }
  }

  // Calls visit(fewest distinct priorities) for every transition structure with n states that
  // admits a recognizing priority assignment. visit returns false to stop the search.
  void run(int n, const std::function<bool(int)>& visit) {
    const int cells = n * m_;
    std::vector<int> delta(cells, 0);
    for (;;) {
      int best = best_priority_count(n, delta);
      if (best > 0 && !visit(best)) return;
      int k = 0;
      while (k < cells && ++delta[k] == n) delta[k++] = 0;
      if (k == cells) return;
    }
  }

 private:
  int best_priority_count(int n, const std::vector<int>& delta) {
    // Reachable states and their edges.
    std::uint32_t reach = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int s = 0; s < n; ++s)
        if (reach >> s & 1)
          for (int a = 0; a < m_; ++a)
            if (!(reach >> delta[s * m_ + a] & 1)) {
              reach |= 1u << delta[s * m_ + a];
              grew = true;
            }
    }
    src_.clear();
    dst_.clear();
    letter_.clear();
    for (int s = 0; s < n; ++s)
      if (reach >> s & 1)
        for (int a = 0; a < m_; ++a) {
          src_.push_back(s);
          dst_.push_back(delta[s * m_ + a]);
          letter_.push_back(a);
        }
    const int e = static_cast<int>(src_.size());
    loops_.clear();
    for (std::uint32_t mask = 1; mask < (1u << e); ++mask) {
      if (!strongly_connected(mask)) continue;
      std::uint32_t letters = 0;
      int top = 0;
      for (int k = 0; k < e; ++k)
        if (mask >> k & 1) {
          letters |= 1u << letter_[k];
          top = k;
        }
      loops_.push_back({mask, top, accepting_[letters]});
    }
    by_top_.assign(e, {});
    for (std::size_t i = 0; i < loops_.size(); ++i) by_top_[loops_[i].max_edge].push_back(static_cast<int>(i));
    prio_.assign(e, 0);
    best_ = 0;
    assign(0, 0);
    return best_;
  }

  bool strongly_connected(std::uint32_t mask) const {
    std::uint32_t states = 0;
    for (std::size_t k = 0; k < src_.size(); ++k)
      if (mask >> k & 1) states |= 1u << src_[k];
    for (std::size_t k = 0; k < src_.size(); ++k)
      if ((mask >> k & 1) && !(states >> dst_[k] & 1)) return false;
    const std::uint32_t root = states & (~states + 1);
    auto closure = [&](bool forward) {
      std::uint32_t seen = root;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t k = 0; k < src_.size(); ++k) {
          if (!(mask >> k & 1)) continue;
          int from = forward ? src_[k] : dst_[k], to = forward ? dst_[k] : src_[k];
          if ((seen >> from & 1) && !(seen >> to & 1)) {
            seen |= 1u << to;
            grew = true;
          }
        }
      }
      return seen;
    };
    return closure(true) == states && closure(false) == states;
  }

  // Depth-first assignment of priorities; records the fewest distinct values that work.
  void assign(int k, std::uint32_t used) {
    const int distinct = __builtin_popcount(used);
    if (best_ && distinct >= best_) return;
    if (k == static_cast<int>(prio_.size())) {
      best_ = std::max(distinct, 1);
      return;
    }
    for (int p = 0; p < k_max_; ++p) {
      prio_[k] = p;
      bool ok = true;
      for (int li : by_top_[k]) {
        int lo = k_max_;
        for (int x = 0; x <= k; ++x)
          if (loops_[li].edges >> x & 1) lo = std::min(lo, prio_[x]);
        if ((lo % 2 == 0) != loops_[li].accepting) {
          ok = false;
          break;
        }
      }
      if (ok) assign(k + 1, used | 1u << p);
    }
  }

  int m_;
  int k_max_;
  std::vector<bool> accepting_;
  std::vector<int> src_, dst_, letter_, prio_;
  std::vector<SmallLoop> loops_;
  std::vector<std::vector<int>> by_top_;
  int best_ = 0;
};

void check_budget(std::size_t m, int n_max, int k_max) {
  if (n_max < 1 || n_max > 3 || m < 1 || m > 3 || k_max < 1 || k_max > 4)
    throw CapExceeded("exhaustive search budget exceeded (n_max <= 3, colours <= 3, k_max <= 4)");
}

}  // namespace

std::optional<int> min_parity_automaton_size(const std::vector<ColourSet>& family, std::size_t num_colours,
                                             int n_max, int k_max) {
  check_budget(num_colours, n_max, k_max);
  RecognizerSearch search(family, num_colours, k_max);
  for (int n = 1; n <= n_max; ++n) {
    bool found = false;
    search.run(n, [&](int) {
      found = true;
      return false;
    });
    if (found) return n;
  }
  return std::nullopt;
}

std::optional<int> min_priority_count(const std::vector<ColourSet>& family, std::size_t num_colours, int n_max,
                                      int k_max) {
  check_budget(num_colours, n_max, k_max);
  RecognizerSearch search(family, num_colours, k_max);
  std::optional<int> best;
  for (int n = 1; n <= n_max; ++n)
    search.run(n, [&](int count) {
      if (!best || count < *best) best = count;
      return *best > 1;
    });
  return best;
}

}  // namespace acdkit
