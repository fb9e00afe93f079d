#include <cstdlib>
#include <cstring>
#include <functional>

#include "acdkit.h"
#include "acdkit/io.hpp"
#include "acdkit/loops.hpp"

using namespace acdkit;
using io::json;

struct acdk_context {
  Limits limits;
  std::string error;
};

struct acdk_document {
  io::Document doc;
};

namespace {

acdk_status guarded(acdk_context* ctx, const std::function<acdk_status()>& body) {
  if (!ctx) return ACDK_INTERNAL_ERROR;
  ctx->error.clear();
  try {
    return body();
  } catch (const CapExceeded& e) {
    ctx->error = e.what();
    return ACDK_CAP_EXCEEDED;
  } catch (const InputError& e) {
    ctx->error = e.what();
    return ACDK_INPUT_ERROR;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return ACDK_INTERNAL_ERROR;
  }
}

void emit(char** out, const std::string& s) {
  if (!out) return;
  *out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!*out) throw std::bad_alloc();
  std::memcpy(*out, s.c_str(), s.size() + 1);
}

const io::Document& need(const acdk_document* d) {
  if (!d) throw InputError("null document");
  return d->doc;
}

json wrap(const char* key, json body) { return json{{"format", io::kFormat}, {key, std::move(body)}}; }

// One vertex with a self-loop per colour: its ACD is the Zielonka tree of the condition.
System colour_loop_system(const std::vector<std::string>& colours, const AcceptanceCondition& cond) {
  std::vector<TransitionSystem::Edge> edges;
  std::vector<ColourId> col;
  for (ColourId c = 0; c < colours.size(); ++c) {
    edges.push_back({colours[c], 0, 0});
    col.push_back(c);
  }
  TransitionSystem ts({"q"}, std::move(edges), {0});
  ts.set_colouring(colours, std::move(col));
  return System{std::move(ts), cond};
}

ZielonkaTree tree_of(const io::Document& d, const Limits& limits) {
  if (!d.condition) throw InputError("document has no condition block");
  const auto colours = d.colour_names();
  if (colours.empty()) throw InputError("empty colour set");
  auto r = validate(colour_loop_system(colours, *d.condition).graph, *d.condition);
  if (!r.ok()) throw InputError("invalid condition: " + r.violations.front());
  const auto* m = std::get_if<Muller>(&*d.condition);
  auto family = m ? m->family : to_muller_over_colours(*d.condition, colours.size()).family;
  return ZielonkaTree(family, colours.size(), limits);
}

io::Document transform_document(const System& s, const AcdTransform& t) {
  auto d = io::system_document(t.system);
  io::MorphismBlock mb;
  const auto& g = t.system.graph;
  for (VertexId v = 0; v < g.num_vertices(); ++v) mb.vertices[g.vertex_name(v)] = s.graph.vertex_name(t.vertex_origin[v]);
  for (EdgeId e = 0; e < g.num_edges(); ++e) mb.edges[g.edge(e).name] = s.graph.edge(t.edge_origin[e]).name;
  d.morphism = std::move(mb);
  return d;
}

std::vector<std::string> region(const TransitionSystem& ts, const std::vector<Player>& w, Player p) {
  std::vector<std::string> out;
  for (VertexId v = 0; v < ts.num_vertices(); ++v)
    if (w[v] == p) out.push_back(ts.vertex_name(v));
  std::sort(out.begin(), out.end());
  return out;
}

json strategies(const TransitionSystem& ts, const ParitySolution& sol) {
  json j{{"Eve", json::object()}, {"Adam", json::object()}};
  for (VertexId v = 0; v < ts.num_vertices(); ++v)
    if (sol.choice[v]) j[sol.winner[v] == Player::Eve ? "Eve" : "Adam"][ts.vertex_name(v)] = ts.edge(*sol.choice[v]).name;
  return j;
}

const char* player_name(Player p) { return p == Player::Eve ? "Eve" : "Adam"; }

}  // namespace

extern "C" {

acdk_context* acdk_context_new(void) {
  try {
    auto* ctx = new acdk_context;
    if (const char* s = std::getenv("ACDKIT_LOOP_CAP")) ctx->limits.loop_cap = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("ACDKIT_EXPLORE_CAP")) ctx->limits.explore_cap = std::strtoull(s, nullptr, 10);
    return ctx;
  } catch (...) {
    return nullptr;
  }
}

void acdk_context_free(acdk_context* ctx) { delete ctx; }
void acdk_context_set_loop_cap(acdk_context* ctx, uint64_t cap) {
  if (ctx) ctx->limits.loop_cap = cap;
}
void acdk_context_set_explore_cap(acdk_context* ctx, uint64_t cap) {
  if (ctx) ctx->limits.explore_cap = cap;
}
const char* acdk_context_error(const acdk_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

acdk_status acdk_document_parse(acdk_context* ctx, const char* text, size_t len, acdk_document** out) {
  return guarded(ctx, [&] {
    if (!text || !out) throw InputError("null argument");
    *out = new acdk_document{io::parse_document(std::string_view(text, len))};
    return ACDK_OK;
  });
}

void acdk_document_free(acdk_document* doc) { delete doc; }
void acdk_string_free(char* s) { std::free(s); }

acdk_status acdk_document_serialize(acdk_context* ctx, const acdk_document* doc, char** out) {
  return guarded(ctx, [&] {
    emit(out, io::serialize(need(doc)));
    return ACDK_OK;
  });
}

acdk_status acdk_validate(acdk_context* ctx, const acdk_document* doc, char** out) {
  return guarded(ctx, [&] {
    const auto& d = need(doc);
    ValidationReport r;
    if (d.system) r = d.condition ? validate(*d.system, *d.condition) : validate(*d.system);
    else if (d.condition) r = validate(colour_loop_system(d.colours, *d.condition).graph, *d.condition);
    emit(out, io::dump(wrap("validation", {{"valid", r.ok()}, {"violations", r.violations}})));
    return r.ok() ? ACDK_OK : ACDK_FALSE;
  });
}

acdk_status acdk_system_dot(acdk_context* ctx, const acdk_document* doc, char** out) {
  return guarded(ctx, [&] {
    const auto& d = need(doc);
    if (!d.system) throw InputError("document has no system block");
    emit(out, d.condition ? dot::system(System{*d.system, *d.condition}) : dot::system(*d.system));
    return ACDK_OK;
  });
}

acdk_status acdk_zielonka(acdk_context* ctx, const acdk_document* doc, acdk_output fmt, char** out) {
  return guarded(ctx, [&] {
    const auto& d = need(doc);
    auto tree = tree_of(d, ctx->limits);
    const auto colours = d.colour_names();
    if (fmt == ACDK_DOT) emit(out, dot::zielonka_tree(tree, colours));
    else emit(out, io::dump(json{{"format", io::kFormat}, {"colours", colours}, {"zielonka_tree", io::tree_json(tree, colours)}}));
    return ACDK_OK;
  });
}

acdk_status acdk_zt_automaton(acdk_context* ctx, const acdk_document* doc, acdk_output fmt, char** out) {
  return guarded(ctx, [&] {
    const auto& d = need(doc);
    auto tree = tree_of(d, ctx->limits);
    auto sys = zt_system(tree, build_zt_automaton(tree), d.colour_names());
    emit(out, fmt == ACDK_DOT ? dot::system(sys) : io::serialize(io::system_document(sys)));
    return ACDK_OK;
  });
}

acdk_status acdk_acd(acdk_context* ctx, const acdk_document* doc, acdk_output fmt, char** out) {
  return guarded(ctx, [&] {
    auto s = need(doc).require_system();
    auto a = build_acd(s, ctx->limits);
    emit(out, fmt == ACDK_DOT ? dot::acd(a, s.graph) : io::dump(wrap("acd", io::acd_json(a, s.graph))));
    return ACDK_OK;
  });
}

acdk_status acdk_transform(acdk_context* ctx, const acdk_document* doc, acdk_output fmt, char** out) {
  return guarded(ctx, [&] {
    auto s = need(doc).require_system();
    auto t = acd_transform(s, ctx->limits);
    emit(out, fmt == ACDK_DOT ? dot::system(t.system) : io::serialize(transform_document(s, t)));
    return ACDK_OK;
  });
}

acdk_status acdk_stats(acdk_context* ctx, const acdk_document* doc, char** out) {
  return guarded(ctx, [&] {
    auto s = need(doc).require_system();
    emit(out, io::dump(wrap("stats", io::stats_json(acd_stats(build_acd(s, ctx->limits))))));
    return ACDK_OK;
  });
}

acdk_status acdk_acd_summary_get(acdk_context* ctx, const acdk_document* doc, acdk_acd_summary* out) {
  return guarded(ctx, [&] {
    if (!out) throw InputError("null output");
    auto st = acd_stats(build_acd(need(doc).require_system(), ctx->limits));
    out->size = st.size;
    out->priority_min = st.priorities.lo;
    out->priority_max = st.priorities.hi;
    out->tag = st.tag == AcdTag::Even ? ACDK_TAG_EVEN : st.tag == AcdTag::Odd ? ACDK_TAG_ODD : ACDK_TAG_AMBIGUOUS;
    out->num_trees = static_cast<uint32_t>(st.heights.size());
    out->max_height = st.heights.empty() ? 0 : static_cast<uint32_t>(*std::max_element(st.heights.begin(), st.heights.end()));
    return ACDK_OK;
  });
}

acdk_status acdk_shape(acdk_context* ctx, const acdk_document* doc, char** out) {
  return guarded(ctx, [&] {
    const auto& d = need(doc);
    if (!d.system) {
      auto tree = tree_of(d, ctx->limits);
      auto sh = shape(tree);
      auto fam = std::get_if<Muller>(&*d.condition) ? std::get<Muller>(*d.condition).family
                                                    : to_muller_over_colours(*d.condition, tree.num_colours()).family;
      auto cl = closure_oracle(fam, tree.num_colours());
      emit(out, io::dump(json{{"format", io::kFormat},
                              {"zielonka_shape", {{"rabin", sh.rabin}, {"streett", sh.streett}, {"parity", sh.parity}}},
                              {"closure",
                               {{"union_closed", cl.union_closed},
                                {"intersection_closed", cl.intersection_closed},
                                {"rejecting_union_closed", cl.rejecting_union_closed}}}}));
      return ACDK_OK;
    }
    auto s = d.require_system();
    auto a = build_acd(s, ctx->limits);
    emit(out, io::dump(wrap("shape", io::shape_json(classify_acd(a), a, s.graph))));
    return ACDK_OK;
  });
}

acdk_status acdk_relabel(acdk_context* ctx, const acdk_document* doc, acdk_target target, char** out) {
  return guarded(ctx, [&] {
    auto s = need(doc).require_system();
    auto a = build_acd(s, ctx->limits);
    auto report = classify_acd(a);
    const bool ok = target == ACDK_TARGET_RABIN     ? report.rabin_acd
                    : target == ACDK_TARGET_STREETT ? report.streett_acd
                                                    : report.parity_acd;
    if (!ok) {
      ctx->error = "the ACD does not have the shape required by this target";
      emit(out, io::dump(wrap("shape", io::shape_json(report, a, s.graph))));
      return ACDK_FALSE;
    }
    System r{s.graph.with_edge_colours(), Muller{}};
    switch (target) {
      case ACDK_TARGET_RABIN: r.condition = rabin_from_acd(s.graph, a); break;
      case ACDK_TARGET_STREETT: r.condition = streett_from_acd(s.graph, a); break;
      case ACDK_TARGET_PARITY: r.condition = parity_relabel(s, a); break;
      default: r.condition = compress_priorities(r.graph, parity_relabel(s, a)); break;
    }
    emit(out, io::serialize(io::system_document(r)));
    return ACDK_OK;
  });
}

acdk_status acdk_compress(acdk_context* ctx, const acdk_document* doc, char** out) {
  return guarded(ctx, [&] {
    auto s = need(doc).require_system();
    const auto* p = std::get_if<Parity>(&s.condition);
    if (!p) throw InputError("compress expects a parity condition");
    s.condition = compress_priorities(s.graph, *p);
    emit(out, io::serialize(io::system_document(s)));
    return ACDK_OK;
  });
}

acdk_status acdk_compose(acdk_context* ctx, const acdk_document* automaton, const acdk_document* doc, char** out) {
  return guarded(ctx, [&] {
    auto a = need(automaton).require_system();
    const auto& d = need(doc);
    if (!d.system) throw InputError("document has no system block");
    auto r = validate(*d.system);
    if (!r.ok()) throw InputError("invalid system: " + r.violations.front());
    emit(out, io::serialize(io::system_document(compose(a, *d.system))));
    return ACDK_OK;
  });
}

acdk_status acdk_check_morphism(acdk_context* ctx, const acdk_document* source, const acdk_document* target,
                                char** out) {
  return guarded(ctx, [&] {
    const auto& src = need(source);
    if (!src.morphism) throw InputError("document has no morphism block");
    const io::Document* tgt = target ? &target->doc : src.morphism->target.get();
    if (!tgt) throw InputError("no target document given and none embedded");
    auto m = io::resolve_morphism(src, *tgt);
    auto st = check_structural(m);
    json j{{"structural", st.ok()}, {"issues", st.issues}};
    bool preserving = false;
    if (st.ok()) {
      auto local = check_local(m);
      preserving = check_acceptance_preserving(m, ctx->limits);
      j["surjective"] = local.surjective;
      j["injective"] = local.injective;
      j["bijective"] = local.bijective();
      j["acceptance_preserving"] = preserving;
    }
    emit(out, io::dump(wrap("morphism_check", std::move(j))));
    return st.ok() && preserving ? ACDK_OK : ACDK_FALSE;
  });
}

acdk_status acdk_solve(acdk_context* ctx, const acdk_document* doc, char** out) {
  return guarded(ctx, [&] {
    auto g = need(doc).require_system();
    if (!g.graph.has_owners()) throw InputError("game vertices carry no owners");
    if (g.graph.initial().size() != 1) throw InputError("a game has exactly one initial vertex");
    const auto init = g.graph.initial().front();
    json j;
    std::vector<Player> winner;
    if (std::holds_alternative<Parity>(g.condition)) {
      auto sol = solve_parity_game(g);
      winner = sol.winner;
      j["strategies"] = strategies(g.graph, sol);
    } else {
      auto sol = solve_muller_game(g, ctx->limits);
      winner = sol.winner;
      j["transform_strategies"] = strategies(sol.transform.system.graph, sol.transform_solution);
    }
    j["initial"] = g.graph.vertex_name(init);
    j["winner"] = player_name(winner[init]);
    j["regions"] = {{"Eve", region(g.graph, winner, Player::Eve)}, {"Adam", region(g.graph, winner, Player::Adam)}};
    emit(out, io::dump(wrap("solution", std::move(j))));
    return ACDK_OK;
  });
}

acdk_status acdk_equivalent(acdk_context* ctx, const acdk_document* a, const acdk_document* b, char** out) {
  return guarded(ctx, [&] {
    auto sa = need(a).require_system();
    auto sb = need(b).require_system();
    const bool eq = equivalent_over(sa, sb, ctx->limits);
    emit(out, io::dump(wrap("equivalent", eq)));
    return eq ? ACDK_OK : ACDK_FALSE;
  });
}

}  // extern "C"
