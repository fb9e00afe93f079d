#pragma once

#include <utility>
#include <vector>

#include "acdkit/core.hpp"
#include "acdkit/loops.hpp"
#include "acdkit/zielonka.hpp"

namespace acdkit {

enum class AcdTag { Even, Odd, Ambiguous };
const char* tag_name(AcdTag t);

struct AcdNode {
  EdgeSet label;
  VertexSet states;
  int parent = -1;
  std::vector<int> children;
  int depth = 0;
  int priority = 0;
};

struct AcdTree {
  std::vector<AcdNode> nodes;  // preorder, root at 0
  bool even = false;           // root label accepting
  int height = 0;
};

// Alternating cycle decomposition. trees[0] is the transient tree t_0, a single node
// whose label may be empty; trees[1..] are rooted at the maximal loops.
struct Acd {
  std::vector<AcdTree> trees;
  std::vector<int> vertex_tree;  // index(q)
  std::vector<int> edge_tree;    // index(e)
  AcdTag tag = AcdTag::Even;

  bool in_subtree(VertexId q, int node) const {
    return trees[vertex_tree[q]].nodes[node].states.test(q);
  }
  // Nodes of t_q in preorder.
  std::vector<int> subtree_for_state(VertexId q) const;
  // Leaves of t_q from left to right.
  std::vector<int> branches(VertexId q) const;
  int leftmost_branch(VertexId q, int node) const;
  std::vector<int> address(int tree, int node) const;
};

Acd build_acd(const TransitionSystem& ts, const LoopStatus& status, const Limits& limits = {});
Acd build_acd(const System& s, const Limits& limits = {});

struct TreeNode {
  int tree;
  int node;
};

// Supp(β, i, e): the deepest node of branch `leaf` in t_i containing e when e leads back
// into t_i, otherwise the root of the tree of Target(e).
TreeNode multi_supp(const Acd& acd, const TransitionSystem& ts, int tree, int leaf, EdgeId e);

struct AcdTransform {
  System system;                       // parity over edges
  std::vector<VertexId> vertex_origin;  // φ_V
  std::vector<EdgeId> edge_origin;      // φ_E
  std::vector<TreeNode> vertex_branch;  // (i, β) of each transform vertex
};

AcdTransform acd_transform(const System& s, const Acd& acd);
AcdTransform acd_transform(const System& s, const Limits& limits = {});

struct AcdStats {
  std::size_t size = 0;
  Interval priorities;
  AcdTag tag = AcdTag::Even;
  std::vector<int> heights;  // t_0 first when its label is nonempty, then t_1..t_r
};

AcdStats acd_stats(const Acd& acd);

}  // namespace acdkit
