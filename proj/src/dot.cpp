#include <sstream>

#include "acdkit/io.hpp"

namespace acdkit::dot {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

const char* node_shape(int priority) { return priority % 2 == 0 ? "ellipse" : "box"; }

}  // namespace

std::string system(const TransitionSystem& ts) {
  std::ostringstream o;
  o << "digraph system {\n  rankdir=LR;\n";
  for (auto v : ts.initial()) o << "  " << quote("init:" + ts.vertex_name(v)) << " [shape=point];\n";
  for (VertexId v = 0; v < ts.num_vertices(); ++v) {
    o << "  " << quote(ts.vertex_name(v)) << " [shape=";
    o << (ts.has_owners() && ts.owner(v) == Owner::Adam ? "box" : "circle") << "];\n";
  }
  for (auto v : ts.initial()) o << "  " << quote("init:" + ts.vertex_name(v)) << " -> " << quote(ts.vertex_name(v)) << ";\n";
  for (EdgeId e = 0; e < ts.num_edges(); ++e) {
    std::string label = ts.edge(e).name;
    if (ts.has_letters()) label += " " + ts.letter(e);
    if (ts.has_colouring()) label += " : " + ts.colour_name(ts.colour(e));
    o << "  " << quote(ts.vertex_name(ts.source(e))) << " -> " << quote(ts.vertex_name(ts.target(e)))
      << " [label=" << quote(label) << "];\n";
  }
  o << "}\n";
  return o.str();
}

std::string system(const System& s) {
  const auto* p = std::get_if<Parity>(&s.condition);
  if (!p) return system(s.graph);
  // Parity systems show each edge's priority.
  auto ts = s.graph;
  std::vector<std::string> names;
  std::vector<ColourId> colour;
  for (EdgeId e = 0; e < ts.num_edges(); ++e) {
    names.push_back(ts.colour_name(ts.colour(e)) + " / " + std::to_string(p->priority[ts.colour(e)]));
    colour.push_back(e);
  }
  ts.set_colouring(std::move(names), std::move(colour));
  return system(ts);
}

std::string zielonka_tree(const ZielonkaTree& t, const std::vector<std::string>& colours) {
  std::ostringstream o;
  o << "digraph zielonka {\n";
  for (int n = 0; n < static_cast<int>(t.nodes().size()); ++n) {
    const auto& node = t.node(n);
    std::vector<std::string> label;
    for (auto c : elements(node.label)) label.push_back(colours[c]);
    o << "  n" << n << " [shape=" << node_shape(node.priority) << ", label=" << quote(join(label))
      << ", xlabel=" << quote(std::to_string(node.priority)) << "];\n";
  }
  for (int n = 0; n < static_cast<int>(t.nodes().size()); ++n)
    for (int c : t.node(n).children) o << "  n" << n << " -> n" << c << ";\n";
  o << "}\n";
  return o.str();
}

std::string acd(const Acd& acd, const TransitionSystem& ts) {
  std::ostringstream o;
  o << "digraph acd {\n";
  for (std::size_t i = 0; i < acd.trees.size(); ++i) {
    const auto& t = acd.trees[i];
    if (i == 0 && t.nodes[0].label.none()) continue;
    o << "  subgraph cluster_t" << i << " {\n    label=" << quote("t" + std::to_string(i)) << ";\n";
    for (int n = 0; n < static_cast<int>(t.nodes.size()); ++n) {
      std::vector<std::string> edges, states;
      for (auto e : elements(t.nodes[n].label)) edges.push_back(ts.edge(e).name);
      for (auto q : elements(t.nodes[n].states)) states.push_back(ts.vertex_name(q));
      o << "    t" << i << "_" << n << " [shape=" << node_shape(t.nodes[n].priority)
        << ", label=" << quote(join(edges) + "\n" + join(states))
        << ", xlabel=" << quote(std::to_string(t.nodes[n].priority)) << "];\n";
    }
    for (int n = 0; n < static_cast<int>(t.nodes.size()); ++n)
      for (int c : t.nodes[n].children) o << "    t" << i << "_" << n << " -> t" << i << "_" << c << ";\n";
    o << "  }\n";
  }
  o << "}\n";
  return o.str();
}

}  // namespace acdkit::dot
