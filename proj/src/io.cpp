#include "acdkit/io.hpp"

#include <algorithm>
#include <set>

namespace acdkit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [k, v] : j.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
      fail(where, "unknown key '" + k + "'");
}

const json& need(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string need_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of ids");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(need_string(j[k], where + "/" + std::to_string(k)));
  return out;
}

std::vector<std::string> sorted_unique(std::vector<std::string> v, const std::string& where, const char* what) {
  std::sort(v.begin(), v.end());
  auto dup = std::adjacent_find(v.begin(), v.end());
  if (dup != v.end()) fail(where, std::string("duplicate ") + what + " id '" + *dup + "'");
  return v;
}

TransitionSystem parse_system(const json& j) {
  const std::string w = "/system";
  only_keys(j, w, {"vertices", "initial", "edges", "colours", "owners"});
  auto vertices = sorted_unique(string_list(need(j, w, "vertices"), w + "/vertices"), w + "/vertices", "vertex");
  std::map<std::string, VertexId> vid;
  for (VertexId v = 0; v < vertices.size(); ++v) vid[vertices[v]] = v;
  auto vertex = [&](const std::string& name, const std::string& where) {
    auto it = vid.find(name);
    if (it == vid.end()) fail(where, "undeclared vertex '" + name + "'");
    return it->second;
  };

  std::optional<std::vector<std::string>> colours;
  std::map<std::string, ColourId> cid;
  if (j.contains("colours")) {
    colours = sorted_unique(string_list(j["colours"], w + "/colours"), w + "/colours", "colour");
    for (ColourId c = 0; c < colours->size(); ++c) cid[(*colours)[c]] = c;
  }

  const auto& je = need(j, w, "edges");
  if (!je.is_array()) fail(w + "/edges", "expected an array");
  struct Raw {
    std::string id, source, target, where;
    std::optional<std::string> letter, colour;
  };
  std::vector<Raw> raw;
  for (std::size_t k = 0; k < je.size(); ++k) {
    const auto where = w + "/edges/" + std::to_string(k);
    only_keys(je[k], where, {"id", "source", "target", "letter", "colour"});
    Raw r{need_string(need(je[k], where, "id"), where + "/id"), need_string(need(je[k], where, "source"), where),
          need_string(need(je[k], where, "target"), where), where, std::nullopt, std::nullopt};
    if (je[k].contains("letter")) r.letter = need_string(je[k]["letter"], where + "/letter");
    if (je[k].contains("colour")) r.colour = need_string(je[k]["colour"], where + "/colour");
    raw.push_back(std::move(r));
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.id < b.id; });
  for (std::size_t k = 0; k + 1 < raw.size(); ++k)
    if (raw[k].id == raw[k + 1].id) fail(w + "/edges", "duplicate edge id '" + raw[k].id + "'");

  std::vector<TransitionSystem::Edge> edges;
  std::size_t with_letter = 0;
  for (const auto& r : raw) {
    edges.push_back({r.id, vertex(r.source, r.where + " (edge '" + r.id + "')"),
                     vertex(r.target, r.where + " (edge '" + r.id + "')")});
    with_letter += r.letter.has_value();
  }
  std::vector<VertexId> initial;
  for (const auto& name : string_list(need(j, w, "initial"), w + "/initial"))
    initial.push_back(vertex(name, w + "/initial"));

  TransitionSystem ts(vertices, std::move(edges), std::move(initial));
  if (with_letter != 0) {
    if (with_letter != raw.size()) fail(w + "/edges", "letters must be given on every edge or on none");
    std::vector<std::string> letters;
    for (const auto& r : raw) letters.push_back(*r.letter);
    ts.set_letters(std::move(letters));
  }
  if (colours) {
    std::vector<ColourId> ec;
    for (const auto& r : raw) {
      if (!r.colour) fail(r.where, "edge '" + r.id + "' has no colour although the system declares colours");
      auto it = cid.find(*r.colour);
      if (it == cid.end()) fail(r.where, "undeclared colour '" + *r.colour + "'");
      ec.push_back(it->second);
    }
    ts.set_colouring(*colours, std::move(ec));
  } else {
    for (const auto& r : raw)
      if (r.colour) fail(r.where, "edge '" + r.id + "' has a colour but the system declares no colours");
  }
  if (j.contains("owners")) {
    const auto& jo = j["owners"];
    if (!jo.is_object()) fail(w + "/owners", "expected an object");
    std::vector<std::optional<Owner>> own(vertices.size());
    for (const auto& [name, o] : jo.items()) {
      auto v = vertex(name, w + "/owners");
      auto s = need_string(o, w + "/owners/" + name);
      if (s != "Eve" && s != "Adam") fail(w + "/owners/" + name, "owner must be Eve or Adam");
      own[v] = s == "Eve" ? Owner::Eve : Owner::Adam;
    }
    std::vector<Owner> total;
    for (VertexId v = 0; v < own.size(); ++v) {
      if (!own[v]) fail(w + "/owners", "vertex '" + vertices[v] + "' has no owner");
      total.push_back(*own[v]);
    }
    ts.set_owners(std::move(total));
  }
  return ts;
}

ColourSet colour_set(const json& j, const std::string& where, const std::map<std::string, ColourId>& cid) {
  ColourSet s(cid.size());
  for (const auto& name : string_list(j, where)) {
    auto it = cid.find(name);
    if (it == cid.end()) fail(where, "unknown colour '" + name + "'");
    s.set(it->second);
  }
  return s;
}

AcceptanceCondition parse_condition(const json& j, const std::vector<std::string>& colours) {
  const std::string w = "/condition";
  std::map<std::string, ColourId> cid;
  for (ColourId c = 0; c < colours.size(); ++c) cid[colours[c]] = c;
  const auto type = need_string(need(j, w, "type"), w + "/type");
  if (type == "muller") {
    only_keys(j, w, {"type", "family"});
    const auto& f = need(j, w, "family");
    if (!f.is_array()) fail(w + "/family", "expected an array of colour sets");
    Muller m;
    for (std::size_t k = 0; k < f.size(); ++k) m.family.push_back(colour_set(f[k], w + "/family/" + std::to_string(k), cid));
    return m;
  }
  if (type == "parity") {
    only_keys(j, w, {"type", "priorities"});
    const auto& p = need(j, w, "priorities");
    if (!p.is_object()) fail(w + "/priorities", "expected an object");
    Parity par{std::vector<int>(colours.size(), -1)};
    for (const auto& [name, v] : p.items()) {
      auto it = cid.find(name);
      if (it == cid.end()) fail(w + "/priorities", "unknown colour '" + name + "'");
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1'000'000)
        fail(w + "/priorities/" + name, "priority must be a nonnegative integer");
      par.priority[it->second] = v.get<int>();
    }
    for (ColourId c = 0; c < colours.size(); ++c)
      if (par.priority[c] < 0) fail(w + "/priorities", "colour '" + colours[c] + "' has no priority");
    return par;
  }
  if (type == "buchi" || type == "co-buchi") {
    only_keys(j, w, {"type", "set"});
    auto s = colour_set(need(j, w, "set"), w + "/set", cid);
    if (type == "buchi") return Buchi{s};
    return CoBuchi{s};
  }
  if (type == "rabin" || type == "streett") {
    only_keys(j, w, {"type", "pairs"});
    const auto& p = need(j, w, "pairs");
    if (!p.is_array()) fail(w + "/pairs", "expected an array");
    std::vector<RabinPair> pairs;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto where = w + "/pairs/" + std::to_string(k);
      only_keys(p[k], where, {"E", "F"});
      pairs.push_back({colour_set(need(p[k], where, "E"), where + "/E", cid),
                       colour_set(need(p[k], where, "F"), where + "/F", cid)});
    }
    if (type == "rabin") return Rabin{std::move(pairs)};
    return Streett{std::move(pairs)};
  }
  fail(w + "/type", "unknown condition type '" + type + "'");
}

json names_of(const ColourSet& s, const std::vector<std::string>& colours) {
  std::vector<std::string> v;
  for (auto c = s.find_first(); c != Bits::npos; c = s.find_next(c)) v.push_back(colours[c]);
  std::sort(v.begin(), v.end());
  return v;
}

json edge_names(const EdgeSet& s, const TransitionSystem& ts) {
  std::vector<std::string> v;
  for (auto e = s.find_first(); e != Bits::npos; e = s.find_next(e)) v.push_back(ts.edge(e).name);
  std::sort(v.begin(), v.end());
  return v;
}

json vertex_names(const VertexSet& s, const TransitionSystem& ts) {
  std::vector<std::string> v;
  for (auto q = s.find_first(); q != Bits::npos; q = s.find_next(q)) v.push_back(ts.vertex_name(q));
  std::sort(v.begin(), v.end());
  return v;
}

json system_json(const TransitionSystem& ts) {
  json j;
  std::vector<std::string> vs = ts.vertex_names();
  std::sort(vs.begin(), vs.end());
  j["vertices"] = vs;
  std::vector<std::string> init;
  for (auto v : ts.initial()) init.push_back(ts.vertex_name(v));
  std::sort(init.begin(), init.end());
  j["initial"] = init;
  std::vector<EdgeId> order(ts.num_edges());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return ts.edge(a).name < ts.edge(b).name; });
  json edges = json::array();
  for (auto e : order) {
    json je{{"id", ts.edge(e).name}, {"source", ts.vertex_name(ts.source(e))}, {"target", ts.vertex_name(ts.target(e))}};
    if (ts.has_letters()) je["letter"] = ts.letter(e);
    if (ts.has_colouring()) je["colour"] = ts.colour_name(ts.colour(e));
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  if (ts.has_colouring()) {
    std::vector<std::string> cs = ts.colour_names();
    std::sort(cs.begin(), cs.end());
    j["colours"] = cs;
  }
  if (ts.has_owners()) {
    json o = json::object();
    for (VertexId v = 0; v < ts.num_vertices(); ++v) o[ts.vertex_name(v)] = ts.owner(v) == Owner::Eve ? "Eve" : "Adam";
    j["owners"] = std::move(o);
  }
  return j;
}

}  // namespace

json condition_json(const AcceptanceCondition& c, const std::vector<std::string>& colours) {
  json j;
  j["type"] = condition_kind(c);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Muller>) {
          std::vector<std::vector<std::string>> fam;
          for (const auto& s : x.family) fam.push_back(names_of(s, colours).template get<std::vector<std::string>>());
          std::sort(fam.begin(), fam.end());
          j["family"] = fam;
        } else if constexpr (std::is_same_v<T, Parity>) {
          json p = json::object();
          for (ColourId k = 0; k < colours.size(); ++k) p[colours[k]] = x.priority[k];
          j["priorities"] = std::move(p);
        } else if constexpr (std::is_same_v<T, Buchi> || std::is_same_v<T, CoBuchi>) {
          j["set"] = names_of(x.set, colours);
        } else {
          json pairs = json::array();
          for (const auto& p : x.pairs) pairs.push_back({{"E", names_of(p.e, colours)}, {"F", names_of(p.f, colours)}});
          j["pairs"] = std::move(pairs);
        }
      },
      c);
  return j;
}

std::vector<std::string> Document::colour_names() const {
  if (!system) return colours;
  std::vector<std::string> out;
  for (ColourId c = 0; c < system->num_colours(); ++c) out.push_back(system->colour_name(c));
  return out;
}

System Document::require_system() const {
  if (!system) throw InputError("document has no system block");
  if (!condition) throw InputError("document has no condition block");
  auto r = validate(*system, *condition);
  if (!r.ok()) throw InputError("invalid system: " + r.violations.front());
  return System{*system, *condition};
}

Document document_from_json(const json& j) {
  only_keys(j, "/", {"format", "system", "colours", "condition", "morphism"});
  const auto format = need_string(need(j, "/", "format"), "/format");
  if (format != kFormat) fail("/format", "unsupported format '" + format + "'");
  Document d;
  if (j.contains("system")) {
    d.system = parse_system(j["system"]);
    if (j.contains("colours")) fail("/colours", "top-level colours are only allowed without a system");
  } else if (j.contains("colours")) {
    d.colours = sorted_unique(string_list(j["colours"], "/colours"), "/colours", "colour");
  }
  if (j.contains("condition")) d.condition = parse_condition(j["condition"], d.colour_names());
  if (j.contains("morphism")) {
    const auto& m = j["morphism"];
    only_keys(m, "/morphism", {"vertices", "edges", "target"});
    MorphismBlock b;
    for (const char* key : {"vertices", "edges"}) {
      const auto& o = need(m, "/morphism", key);
      if (!o.is_object()) fail(std::string("/morphism/") + key, "expected an object");
      for (const auto& [k, v] : o.items())
        (std::string(key) == "vertices" ? b.vertices : b.edges)[k] = need_string(v, std::string("/morphism/") + key + "/" + k);
    }
    if (m.contains("target")) b.target = std::make_shared<Document>(document_from_json(m["target"]));
    d.morphism = std::move(b);
  }
  return d;
}

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return document_from_json(j);
}

json to_json(const Document& d) {
  json j;
  j["format"] = kFormat;
  if (d.system) j["system"] = system_json(*d.system);
  else if (!d.colours.empty()) j["colours"] = d.colours;
  if (d.condition) j["condition"] = condition_json(*d.condition, d.colour_names());
  if (d.morphism) {
    json m;
    m["vertices"] = d.morphism->vertices;
    m["edges"] = d.morphism->edges;
    if (d.morphism->target) m["target"] = to_json(*d.morphism->target);
    j["morphism"] = std::move(m);
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string serialize(const Document& d) { return dump(to_json(d)); }

Document system_document(const System& s) {
  Document d;
  d.system = s.graph;
  d.condition = s.condition;
  return d;
}

json tree_json(const ZielonkaTree& t, const std::vector<std::string>& colours) {
  json nodes = json::array();
  for (int n = 0; n < static_cast<int>(t.nodes().size()); ++n)
    nodes.push_back({{"address", t.address(n)}, {"label", names_of(t.node(n).label, colours)}, {"priority", t.node(n).priority}});
  auto iv = optimal_parity_interval(t);
  auto sh = shape(t);
  return {{"polarity", t.even() ? "even" : "odd"},
          {"height", t.height()},
          {"interval", {iv.lo, iv.hi}},
          {"nodes", std::move(nodes)},
          {"shape", {{"rabin", sh.rabin}, {"streett", sh.streett}, {"parity", sh.parity}}}};
}

json acd_json(const Acd& acd, const TransitionSystem& ts) {
  json trees = json::array();
  for (std::size_t i = 0; i < acd.trees.size(); ++i) {
    const auto& t = acd.trees[i];
    json nodes = json::array();
    for (int n = 0; n < static_cast<int>(t.nodes.size()); ++n)
      nodes.push_back({{"address", acd.address(static_cast<int>(i), n)},
                       {"edges", edge_names(t.nodes[n].label, ts)},
                       {"states", vertex_names(t.nodes[n].states, ts)},
                       {"priority", t.nodes[n].priority}});
    trees.push_back({{"index", i}, {"polarity", t.even ? "even" : "odd"}, {"height", t.height}, {"nodes", std::move(nodes)}});
  }
  return {{"tag", tag_name(acd.tag)}, {"trees", std::move(trees)}};
}

json stats_json(const AcdStats& st) {
  return {{"size", st.size},
          {"priorities", {st.priorities.lo, st.priorities.hi}},
          {"tag", tag_name(st.tag)},
          {"heights", st.heights}};
}

json shape_json(const AcdShapeReport& r, const Acd& acd, const TransitionSystem& ts) {
  json j{{"rabin", r.rabin_acd}, {"streett", r.streett_acd}, {"parity", r.parity_acd}};
  if (r.interval) j["interval"] = {r.interval->lo, r.interval->hi};
  if (r.weak_k) j["weak_k"] = *r.weak_k;
  json off = json::array();
  for (const auto& o : r.offenders)
    off.push_back({{"state", ts.vertex_name(o.state)},
                   {"tree", o.tree},
                   {"address", acd.address(o.tree, o.node)},
                   {"node", o.round ? "round" : "square"}});
  j["offenders"] = std::move(off);
  return j;
}

Morphism resolve_morphism(const Document& source, const Document& target) {
  if (!source.morphism) throw InputError("document has no morphism block");
  auto src = std::make_shared<const System>(source.require_system());
  auto tgt = std::make_shared<const System>(target.require_system());
  Morphism m{src, tgt, {}, {}};
  const auto& mb = *source.morphism;
  for (VertexId v = 0; v < src->graph.num_vertices(); ++v) {
    const auto& name = src->graph.vertex_name(v);
    auto it = mb.vertices.find(name);
    if (it == mb.vertices.end()) fail("/morphism/vertices", "vertex '" + name + "' is not mapped");
    auto t = tgt->graph.find_vertex(it->second);
    if (!t) fail("/morphism/vertices", "target has no vertex '" + it->second + "'");
    m.vertex_map.push_back(*t);
  }
  for (EdgeId e = 0; e < src->graph.num_edges(); ++e) {
    const auto& name = src->graph.edge(e).name;
    auto it = mb.edges.find(name);
    if (it == mb.edges.end()) fail("/morphism/edges", "edge '" + name + "' is not mapped");
    auto t = tgt->graph.find_edge(it->second);
    if (!t) fail("/morphism/edges", "target has no edge '" + it->second + "'");
    m.edge_map.push_back(*t);
  }
  for (const auto& [k, v] : mb.vertices)
    if (!src->graph.find_vertex(k)) fail("/morphism/vertices", "undeclared vertex '" + k + "'");
  for (const auto& [k, v] : mb.edges)
    if (!src->graph.find_edge(k)) fail("/morphism/edges", "undeclared edge '" + k + "'");
  return m;
}

}  // namespace acdkit::io
