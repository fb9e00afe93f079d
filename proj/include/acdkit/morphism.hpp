#pragma once

#include <memory>
#include <string>
#include <vector>

#include "acdkit/acd.hpp"
#include "acdkit/core.hpp"

namespace acdkit {

struct Morphism {
  std::shared_ptr<const System> source;
  std::shared_ptr<const System> target;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

struct StructuralReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

struct LocalReport {
  bool surjective = false;
  bool injective = false;
  bool bijective() const { return surjective && injective; }
};

StructuralReport check_structural(const Morphism& m);
// Restricted to vertices reachable in the source.
LocalReport check_local(const Morphism& m);
// Exact: every reachable source loop has the status of its image.
bool check_acceptance_preserving(const Morphism& m, const Limits& limits = {});

Morphism induced_morphism(const AcdTransform& t, std::shared_ptr<const System> original);
Morphism identity_morphism(std::shared_ptr<const System> s);

Run map_run(const Morphism& m, const Run& run);
// Unique preimage of a target run; the morphism must be locally bijective.
Run lift_run(const Morphism& m, const Run& run);

}  // namespace acdkit
