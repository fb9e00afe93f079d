#include "acdkit/acd.hpp"

#include <algorithm>
#include <functional>

namespace acdkit {

const char* tag_name(AcdTag t) {
  switch (t) {
    case AcdTag::Even: return "even";
    case AcdTag::Odd: return "odd";
    default: return "ambiguous";
  }
}

namespace {

void grow(const TransitionSystem& ts, const LoopStatus& status, const Limits& limits, AcdTree& tree, int id) {
  auto kids = alternating_children(ts, status, tree.nodes[id].label, limits);
  for (auto& k : kids) {
    AcdNode n;
    n.parent = id;
    n.depth = tree.nodes[id].depth + 1;
    n.states = ts.sources_of(k);
    n.label = std::move(k);
    const int cid = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(std::move(n));
    tree.nodes[id].children.push_back(cid);
    grow(ts, status, limits, tree, cid);
  }
}

}  // namespace

Acd build_acd(const TransitionSystem& ts, const LoopStatus& status, const Limits& limits) {
  const auto d = sccs(ts);
  Acd acd;
  AcdTree t0;
  AcdNode root0;
  root0.label = d.transient;
  root0.states = ts.empty_vertices();
  for (VertexId q = 0; q < ts.num_vertices(); ++q)
    if (d.loop_of_vertex[q] < 0) root0.states.set(q);
  t0.nodes.push_back(std::move(root0));
  t0.height = 1;
  acd.trees.push_back(std::move(t0));

  for (const auto& loop : d.loops) {
    AcdTree t;
    AcdNode root;
    root.label = loop;
    root.states = ts.sources_of(loop);
    t.nodes.push_back(std::move(root));
    t.even = status(loop);
    grow(ts, status, limits, t, 0);
    for (const auto& n : t.nodes) t.height = std::max(t.height, n.depth + 1);
    acd.trees.push_back(std::move(t));
  }

  int max_height = 0;
  for (std::size_t i = 1; i < acd.trees.size(); ++i) max_height = std::max(max_height, acd.trees[i].height);
  bool any_even = false, any_odd = false;
  for (std::size_t i = 1; i < acd.trees.size(); ++i)
    if (acd.trees[i].height == max_height) (acd.trees[i].even ? any_even : any_odd) = true;
  acd.tag = any_even && any_odd ? AcdTag::Ambiguous : any_odd ? AcdTag::Odd : AcdTag::Even;

  const int even_shift = acd.tag == AcdTag::Odd ? 2 : 0;
  for (std::size_t i = 1; i < acd.trees.size(); ++i) {
    auto& t = acd.trees[i];
    for (auto& n : t.nodes) n.priority = n.depth + (t.even ? even_shift : 1);
  }
  acd.trees[0].nodes[0].priority = acd.tag == AcdTag::Odd ? 1 : 0;
  acd.trees[0].even = acd.tag != AcdTag::Odd;

  acd.vertex_tree.assign(ts.num_vertices(), 0);
  for (VertexId q = 0; q < ts.num_vertices(); ++q) acd.vertex_tree[q] = d.loop_of_vertex[q] + 1;
  acd.edge_tree.assign(ts.num_edges(), 0);
  for (std::size_t i = 0; i < d.loops.size(); ++i)
    for (auto e : elements(d.loops[i])) acd.edge_tree[e] = static_cast<int>(i) + 1;
  return acd;
}

Acd build_acd(const System& s, const Limits& limits) {
  EdgeStatus status(s);
  return build_acd(s.graph, [&](const EdgeSet& l) { return status(l); }, limits);
}

std::vector<int> Acd::subtree_for_state(VertexId q) const {
  const auto& t = trees[vertex_tree[q]];
  std::vector<int> out;
  for (int n = 0; n < static_cast<int>(t.nodes.size()); ++n)
    if (t.nodes[n].states.test(q)) out.push_back(n);
  return out;
}

std::vector<int> Acd::branches(VertexId q) const {
  const auto& t = trees[vertex_tree[q]];
  std::vector<int> out;
  for (int n : subtree_for_state(q)) {
    const auto& kids = t.nodes[n].children;
    if (std::none_of(kids.begin(), kids.end(), [&](int c) { return t.nodes[c].states.test(q); }))
      out.push_back(n);
  }
  return out;
}

int Acd::leftmost_branch(VertexId q, int node) const {
  const auto& t = trees[vertex_tree[q]];
  for (;;) {
    const auto& kids = t.nodes[node].children;
    auto it = std::find_if(kids.begin(), kids.end(), [&](int c) { return t.nodes[c].states.test(q); });
    if (it == kids.end()) return node;
    node = *it;
  }
}

std::vector<int> Acd::address(int tree, int node) const {
  const auto& t = trees[tree];
  std::vector<int> a;
  for (int v = node; t.nodes[v].parent >= 0; v = t.nodes[v].parent) {
    const auto& sib = t.nodes[t.nodes[v].parent].children;
    a.push_back(static_cast<int>(std::find(sib.begin(), sib.end(), v) - sib.begin()));
  }
  std::reverse(a.begin(), a.end());
  return a;
}

TreeNode multi_supp(const Acd& acd, const TransitionSystem& ts, int tree, int leaf, EdgeId e) {
  const int j = acd.vertex_tree[ts.target(e)];
  if (j != tree) return {j, 0};
  const auto& t = acd.trees[tree];
  int v = leaf;
  while (v > 0 && !t.nodes[v].label.test(e)) v = t.nodes[v].parent;
  return {tree, v};
}

namespace {

// Nextbranch in t_{q'} for an edge that stays inside tree i.
int next_leaf(const Acd& acd, int tree, int leaf, int tau, VertexId qn) {
  const auto& t = acd.trees[tree];
  const auto& kids = t.nodes[tau].children;
  std::vector<int> in_qn;
  for (std::size_t k = 0; k < kids.size(); ++k)
    if (t.nodes[kids[k]].states.test(qn)) in_qn.push_back(static_cast<int>(k));
  if (in_qn.empty()) return tau;
  // Position of σ_β, the child of τ on the branch (absent when the branch ends at τ).
  int sigma_pos = -1;
  if (leaf != tau) {
    int sigma = leaf;
    while (t.nodes[sigma].parent != tau) sigma = t.nodes[sigma].parent;
    sigma_pos = static_cast<int>(std::find(kids.begin(), kids.end(), sigma) - kids.begin());
  }
  int chosen = in_qn.front();
  if (sigma_pos >= 0)
    for (int k : in_qn)
      if (k > sigma_pos) {
        chosen = k;
        break;
      }
  return acd.leftmost_branch(qn, kids[chosen]);
}

}  // namespace

AcdTransform acd_transform(const System& s, const Acd& acd) {
  const auto& ts = s.graph;
  AcdTransform out;
  std::vector<std::string> names;
  std::vector<std::unordered_map<int, VertexId>> id_of(ts.num_vertices());
  for (VertexId q = 0; q < ts.num_vertices(); ++q) {
    const int i = acd.vertex_tree[q];
    for (int leaf : acd.branches(q)) {
      id_of[q][leaf] = names.size();
      names.push_back("(" + ts.vertex_name(q) + "," + std::to_string(i) + "," +
                      address_string(acd.address(i, leaf)) + ")");
      out.vertex_origin.push_back(q);
      out.vertex_branch.push_back({i, leaf});
    }
  }

  std::vector<TransitionSystem::Edge> edges;
  std::vector<int> prio;
  std::vector<std::string> letters;
  for (VertexId v = 0; v < names.size(); ++v) {
    const auto q = out.vertex_origin[v];
    const auto [i, leaf] = out.vertex_branch[v];
    const auto suffix = "," + std::to_string(i) + "," + address_string(acd.address(i, leaf)) + ")";
    for (auto e : ts.out(q)) {
      const auto qn = ts.target(e);
      const auto sp = multi_supp(acd, ts, i, leaf, e);
      const int next = sp.tree == i ? next_leaf(acd, i, leaf, sp.node, qn) : acd.leftmost_branch(qn, 0);
      edges.push_back({"(" + ts.edge(e).name + suffix, v, id_of[qn].at(next)});
      prio.push_back(acd.trees[sp.tree].nodes[sp.node].priority);
      out.edge_origin.push_back(e);
      if (ts.has_letters()) letters.push_back(ts.letter(e));
    }
  }

  std::vector<VertexId> init;
  for (auto q0 : ts.initial()) init.push_back(id_of[q0].at(acd.leftmost_branch(q0, 0)));

  TransitionSystem g(std::move(names), std::move(edges), std::move(init));
  if (ts.has_letters()) g.set_letters(std::move(letters));
  if (ts.has_owners()) {
    std::vector<Owner> own;
    for (auto q : out.vertex_origin) own.push_back(ts.owner(q));
    g.set_owners(std::move(own));
  }
  out.system = System{std::move(g), Parity{std::move(prio)}};
  return out;
}

AcdTransform acd_transform(const System& s, const Limits& limits) { return acd_transform(s, build_acd(s, limits)); }

AcdStats acd_stats(const Acd& acd) {
  AcdStats st;
  st.tag = acd.tag;
  for (VertexId q = 0; q < acd.vertex_tree.size(); ++q) st.size += acd.branches(q).size();
  bool first = true;
  for (std::size_t i = 0; i < acd.trees.size(); ++i) {
    const auto& t = acd.trees[i];
    if (i == 0 && t.nodes[0].label.none()) continue;
    st.heights.push_back(t.height);
    for (const auto& n : t.nodes) {
      if (first || n.priority < st.priorities.lo) st.priorities.lo = n.priority;
      if (first || n.priority > st.priorities.hi) st.priorities.hi = n.priority;
      first = false;
    }
  }
  return st;
}

}  // namespace acdkit
