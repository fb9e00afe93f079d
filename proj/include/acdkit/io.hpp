#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "acdkit/acd.hpp"
#include "acdkit/core.hpp"
#include "acdkit/games.hpp"
#include "acdkit/morphism.hpp"
#include "acdkit/relabel.hpp"
#include "acdkit/zielonka.hpp"

namespace acdkit::io {

using json = nlohmann::json;

inline constexpr const char* kFormat = "acdkit/1";

struct Document;

struct MorphismBlock {
  std::map<std::string, std::string> vertices;
  std::map<std::string, std::string> edges;
  std::shared_ptr<Document> target;  // optional embedded target
};

// The canonical file: an optional system, an optional condition over its colours (or over
// a bare colour list when there is no system) and an optional morphism into another document.
struct Document {
  std::optional<TransitionSystem> system;
  std::vector<std::string> colours;  // universe for condition-only documents
  std::optional<AcceptanceCondition> condition;
  std::optional<MorphismBlock> morphism;

  std::vector<std::string> colour_names() const;
  // Throws InputError unless both a system and a condition are present.
  System require_system() const;
};

Document parse_document(std::string_view text);
Document document_from_json(const json& j);
json to_json(const Document& d);
// Pretty printed, keys and ids sorted, trailing newline.
std::string serialize(const Document& d);
std::string dump(const json& j);

Document system_document(const System& s);

json tree_json(const ZielonkaTree& t, const std::vector<std::string>& colours);
json acd_json(const Acd& acd, const TransitionSystem& ts);
json stats_json(const AcdStats& st);
json shape_json(const AcdShapeReport& r, const Acd& acd, const TransitionSystem& ts);
json condition_json(const AcceptanceCondition& c, const std::vector<std::string>& colours);

// Builds a morphism from a document carrying a morphism block and its target.
Morphism resolve_morphism(const Document& source, const Document& target);

}  // namespace acdkit::io

namespace acdkit::dot {

std::string system(const System& s);
std::string system(const TransitionSystem& ts);
std::string zielonka_tree(const ZielonkaTree& t, const std::vector<std::string>& colours);
std::string acd(const Acd& acd, const TransitionSystem& ts);

}  // namespace acdkit::dot
