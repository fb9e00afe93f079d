#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acdkit/core.hpp"

namespace acdkit {

struct Interval {
  int lo = 0;
  int hi = 0;
  bool operator==(const Interval&) const = default;
};

struct TreeShape {
  bool rabin = false;    // every even node has at most one child
  bool streett = false;  // every odd node has at most one child
  bool parity = false;   // every node has at most one child
};

// Zielonka tree of a Muller family over colours 0..n-1. Nodes are stored in preorder,
// so leaves in index order are the branches from left to right.
class ZielonkaTree {
 public:
  struct Node {
    ColourSet label;
    int parent = -1;
    std::vector<int> children;
    int depth = 0;
    int priority = 0;
  };

  ZielonkaTree(const std::vector<ColourSet>& family, std::size_t num_colours, const Limits& limits = {});

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int i) const { return nodes_[i]; }
  std::size_t num_colours() const { return num_colours_; }
  bool even() const { return even_; }
  int height() const { return height_; }
  bool accepts(const ColourSet& s) const;

  // Branches are identified by their leaf.
  const std::vector<int>& leaves() const { return leaves_; }
  std::vector<int> address(int node) const;
  int find(const std::vector<int>& address) const;  // -1 if absent

  int supp(int leaf, ColourId a) const;
  int nextchild(int leaf, int node) const;
  int nextbranch(int leaf, int node) const;
  int leftmost_leaf(int node) const;

 private:
  int add(ColourSet label, int parent, const Limits& limits);

  std::vector<Node> nodes_;
  std::vector<int> leaves_;
  std::unordered_set<ColourSet> family_;
  std::size_t num_colours_;
  bool even_ = false;
  int height_ = 0;
};

// Children of a node: maximal nonempty subsets with flipped membership, canonically ordered.
std::vector<ColourSet> zielonka_children(const std::unordered_set<ColourSet>& family, const ColourSet& s,
                                         const Limits& limits = {});

struct ZTAutomaton {
  std::vector<int> leaf;                   // state -> branch leaf in the tree
  std::vector<std::vector<int>> next;      // [state][colour] -> state
  std::vector<std::vector<int>> output;    // [state][colour] -> priority
  int initial = 0;
  Interval interval;
};

ZTAutomaton build_zt_automaton(const ZielonkaTree& tree);

// Deterministic parity automaton reading colour names; each edge is its own colour.
System zt_system(const ZielonkaTree& tree, const ZTAutomaton& z, const std::vector<std::string>& colour_names);

std::string address_string(const std::vector<int>& address);

TreeShape shape(const ZielonkaTree& tree);
Interval optimal_parity_interval(const ZielonkaTree& tree);

struct ClosureReport {
  bool union_closed = false;
  bool intersection_closed = false;       // over pairs with a nonempty intersection
  bool rejecting_union_closed = false;    // complement of F closed under union
};

ClosureReport closure_oracle(const std::vector<ColourSet>& family, std::size_t num_colours);

// Exhaustive search over deterministic complete parity automata with states 1..n_max and
// priorities below k_max. Budget: n_max <= 3, |colours| <= 3, k_max <= 4.
std::optional<int> min_parity_automaton_size(const std::vector<ColourSet>& family, std::size_t num_colours,
                                             int n_max, int k_max);
// Fewest distinct priorities used by any recognizer with at most n_max states.
std::optional<int> min_priority_count(const std::vector<ColourSet>& family, std::size_t num_colours,
                                      int n_max, int k_max);

}  // namespace acdkit
