#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace acdkit {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using ColourId = std::size_t;

// Every subset of vertices, edges or colours is a bitset sized to its universe.
using Bits = boost::dynamic_bitset<std::uint64_t>;
using EdgeSet = Bits;
using VertexSet = Bits;
using ColourSet = Bits;

std::vector<std::size_t> elements(const Bits& s);
Bits make_bits(std::size_t universe, const std::vector<std::size_t>& members);
// Descending size, then lexicographic comparison of the sorted member lists.
bool canonical_less(const Bits& a, const Bits& b);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured exploration bound was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

struct Limits {
  std::size_t loop_cap = 20;           // max edges per SCC for subset enumeration
  std::size_t explore_cap = 1u << 20;  // max sets visited while computing children
};

enum class Owner : std::uint8_t { Eve, Adam };

class TransitionSystem {
 public:
  struct Edge {
    std::string name;
    VertexId source;
    VertexId target;
  };

  TransitionSystem() = default;
  // Throws InputError if an endpoint or initial vertex is out of range.
  TransitionSystem(std::vector<std::string> vertex_names, std::vector<Edge> edges,
                   std::vector<VertexId> initial);

  void set_owners(std::vector<Owner> owners);
  void set_letters(std::vector<std::string> letters);
  // edge_colour[e] indexes colour_names. Without a colouring each edge is its own colour.
  void set_colouring(std::vector<std::string> colour_names, std::vector<ColourId> edge_colour);
  void clear_colouring();

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_colours() const;

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexId source(EdgeId e) const { return edges_[e].source; }
  VertexId target(EdgeId e) const { return edges_[e].target; }
  const std::vector<EdgeId>& out(VertexId v) const { return out_[v]; }
  const std::vector<VertexId>& initial() const { return initial_; }

  bool has_owners() const { return owners_.has_value(); }
  Owner owner(VertexId v) const { return (*owners_)[v]; }
  const std::optional<std::vector<Owner>>& owners() const { return owners_; }

  bool has_letters() const { return letters_.has_value(); }
  const std::string& letter(EdgeId e) const { return (*letters_)[e]; }
  const std::optional<std::vector<std::string>>& letters() const { return letters_; }

  bool has_colouring() const { return !edge_colour_.empty() || !colour_names_.empty(); }
  ColourId colour(EdgeId e) const { return edge_colour_.empty() ? e : edge_colour_[e]; }
  const std::string& colour_name(ColourId c) const;
  const std::vector<std::string>& colour_names() const { return colour_names_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;
  std::optional<ColourId> find_colour(const std::string& name) const;

  EdgeSet empty_edges() const { return EdgeSet(num_edges()); }
  VertexSet empty_vertices() const { return VertexSet(num_vertices()); }
  ColourSet empty_colours() const { return ColourSet(num_colours()); }

  // γ(l): the colours carried by a set of edges.
  ColourSet colours_of(const EdgeSet& edges) const;
  // States(l): the sources of a set of edges.
  VertexSet sources_of(const EdgeSet& edges) const;

  // Same vertices, edges and labels, each edge its own colour.
  TransitionSystem with_edge_colours() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<VertexId> initial_;
  std::vector<std::vector<EdgeId>> out_;
  std::optional<std::vector<Owner>> owners_;
  std::optional<std::vector<std::string>> letters_;
  std::vector<std::string> colour_names_;
  std::vector<ColourId> edge_colour_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::unordered_map<std::string, ColourId> colour_index_;
};

struct Muller {
  std::vector<ColourSet> family;
};
struct Parity {
  std::vector<int> priority;  // indexed by colour; min-even semantics
};
struct Buchi {
  ColourSet set;
};
struct CoBuchi {
  ColourSet set;
};
struct RabinPair {
  ColourSet e;
  ColourSet f;
};
struct Rabin {
  std::vector<RabinPair> pairs;
};
struct Streett {
  std::vector<RabinPair> pairs;
};

using AcceptanceCondition = std::variant<Muller, Parity, Buchi, CoBuchi, Rabin, Streett>;

const char* condition_kind(const AcceptanceCondition& c);

// A transition system together with its acceptance condition over the system's colours.
struct System {
  TransitionSystem graph;
  AcceptanceCondition condition;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const TransitionSystem& ts);
ValidationReport validate(const TransitionSystem& ts, const AcceptanceCondition& cond);

// Accepting iff a run with Inf = l is accepted. Throws InputError on an empty l
// or a colour set of the wrong universe.
bool loop_status(const AcceptanceCondition& cond, const ColourSet& l);

// Preprocessed loop_status; Muller membership becomes a hash lookup.
class ConditionEvaluator {
 public:
  ConditionEvaluator(AcceptanceCondition cond, std::size_t num_colours);
  bool operator()(const ColourSet& l) const;
  std::size_t num_colours() const { return num_colours_; }

 private:
  AcceptanceCondition cond_;
  std::size_t num_colours_;
  std::unordered_set<ColourSet> muller_;
};

// Status of edge sets through the colouring of a system.
class EdgeStatus {
 public:
  explicit EdgeStatus(const System& s);
  EdgeStatus(const TransitionSystem& ts, const AcceptanceCondition& cond);
  bool operator()(const EdgeSet& l) const { return eval_(ts_->colours_of(l)); }

 private:
  const TransitionSystem* ts_;
  ConditionEvaluator eval_;
};

// Muller condition over edges listing the accepting reachable loops.
System to_explicit_muller(const System& s, const Limits& limits = {});

// Muller family over the colour universe, by enumerating all nonempty colour sets.
Muller to_muller_over_colours(const AcceptanceCondition& cond, std::size_t num_colours);

// The product A ⊳ T. The automaton reads the colour names of ts as letters.
System compose(const System& automaton, const TransitionSystem& ts);

// True iff every reachable loop has the same status under both conditions.
bool equivalent_over(const TransitionSystem& ts, const AcceptanceCondition& c1,
                     const AcceptanceCondition& c2, const Limits& limits = {});
// Both systems must share vertices, edges and initial vertices; colourings may differ.
bool equivalent_over(const System& a, const System& b, const Limits& limits = {});

// Ultimately periodic run: prefix from an initial vertex, then the cycle forever.
struct Run {
  std::vector<EdgeId> prefix;
  std::vector<EdgeId> cycle;
};

// Empty optional iff the run is well formed in ts.
std::optional<std::string> check_run(const TransitionSystem& ts, const Run& run);
EdgeSet inf_edges(const TransitionSystem& ts, const Run& run);
bool run_accepted(const System& s, const Run& run);
// Equality as infinite sequences.
bool same_run(const Run& a, const Run& b);

}  // namespace acdkit
