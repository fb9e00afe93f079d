#pragma once

#include <functional>
#include <string>
#include <vector>

#include "acdkit/core.hpp"

namespace acdkit {

using LoopStatus = std::function<bool(const EdgeSet&)>;

struct SccDecomposition {
  std::vector<EdgeSet> loops;         // maximal loops, ordered by smallest edge index
  EdgeSet transient;                  // edges outside every maximal loop
  std::vector<int> loop_of_vertex;    // index into loops, or -1
};

SccDecomposition sccs(const TransitionSystem& ts);

// Maximal loops inside an edge subset (SCCs of the subgraph with at least one edge).
std::vector<EdgeSet> split_loops(const TransitionSystem& ts, const EdgeSet& edges);

bool is_loop(const TransitionSystem& ts, const EdgeSet& edges);

VertexSet reachable_vertices(const TransitionSystem& ts);
VertexSet reachable_vertices(const TransitionSystem& ts, const std::vector<VertexId>& from);

// Inclusion-maximal subloops of l whose status differs from l's, in canonical order.
std::vector<EdgeSet> alternating_children(const TransitionSystem& ts, const LoopStatus& status,
                                          const EdgeSet& l, const Limits& limits = {});

// All loops made of edges in `allowed`, in canonical order; the cap applies per SCC.
std::vector<EdgeSet> enumerate_loops_within(const TransitionSystem& ts, const EdgeSet& allowed,
                                            const Limits& limits = {});

// All loops inside reachable SCCs, in canonical order. Throws CapExceeded naming the
// first SCC with more than limits.loop_cap edges.
std::vector<EdgeSet> enumerate_reachable_loops(const TransitionSystem& ts, const Limits& limits = {});

// A nonempty accessible state set closed under the letters in x and strongly connected
// through them. The automaton must be deterministic.
VertexSet accessible_x_scc(const TransitionSystem& automaton, const std::vector<std::string>& x);

}  // namespace acdkit
