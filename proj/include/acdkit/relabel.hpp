#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acdkit/acd.hpp"
#include "acdkit/core.hpp"

namespace acdkit {

struct ShapeViolation {
  VertexId state;
  int tree;
  int node;
  bool round;  // even priority; breaks the Rabin shape, otherwise the Streett shape
};

struct AcdShapeReport {
  bool rabin_acd = false;
  bool streett_acd = false;
  bool parity_acd = false;
  std::optional<Interval> interval;  // when parity_acd
  std::optional<int> weak_k;         // when parity_acd: the largest tree height
  std::vector<ShapeViolation> offenders;
};

AcdShapeReport classify_acd(const Acd& acd);

// Conditions over the edges of ts (pair with ts.with_edge_colours()).
Rabin rabin_from_acd(const TransitionSystem& ts, const Acd& acd);
Streett streett_from_acd(const TransitionSystem& ts, const Acd& acd);
Parity parity_relabel(const System& s, const Acd& acd);

// Indexed by colour like p; only colours carried by some edge of ts count as used.
Parity compress_priorities(const TransitionSystem& ts, const Parity& p);
bool is_weak_k(const TransitionSystem& ts, const Parity& p, int k);

// Priorities actually used on edges of ts.
Interval used_interval(const TransitionSystem& ts, const Parity& p);

// Whether a [lo,hi] parity condition normalises into `bound` by shifting by an even amount.
bool fits_within(const Interval& used, const Interval& bound);

}  // namespace acdkit
