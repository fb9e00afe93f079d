// Command-line front end. Talks to the library only through the C interface.
#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acdkit.h"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status = ACDK_OK;
  std::string output;
  std::string error;
};

using ContextPtr = std::unique_ptr<acdk_context, decltype(&acdk_context_free)>;
using DocumentPtr = std::unique_ptr<acdk_document, decltype(&acdk_document_free)>;

struct Settings {
  std::optional<std::uint64_t> loop_cap;
  std::optional<std::uint64_t> explore_cap;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses each input file and hands the documents to `call`.
using Call = std::function<acdk_status(acdk_context*, const std::vector<acdk_document*>&, char**)>;

Outcome run(const Settings& settings, const std::vector<std::string>& paths, const Call& call) {
  Outcome o;
  ContextPtr ctx(acdk_context_new(), acdk_context_free);
  if (!ctx) return {ACDK_INTERNAL_ERROR, "", "cannot allocate a context"};
  if (settings.loop_cap) acdk_context_set_loop_cap(ctx.get(), *settings.loop_cap);
  if (settings.explore_cap) acdk_context_set_explore_cap(ctx.get(), *settings.explore_cap);

  std::vector<DocumentPtr> docs;
  std::vector<acdk_document*> raw;
  for (const auto& p : paths) {
    auto text = read_file(p);
    if (!text) return {ACDK_INPUT_ERROR, "", p + ": cannot read file"};
    acdk_document* d = nullptr;
    auto st = acdk_document_parse(ctx.get(), text->data(), text->size(), &d);
    if (st != ACDK_OK) return {st, "", p + ": " + acdk_context_error(ctx.get())};
    docs.emplace_back(d, acdk_document_free);
    raw.push_back(d);
  }
  char* out = nullptr;
  o.status = call(ctx.get(), raw, &out);
  if (out) {
    o.output = out;
    acdk_string_free(out);
  }
  if (o.status != ACDK_OK) o.error = acdk_context_error(ctx.get());
  return o;
}

void report(const Outcome& o, std::ostream& out, const std::string& label) {
  out << o.output;
  if (!o.error.empty()) std::cerr << "acdkit: " << (label.empty() ? "" : label + ": ") << o.error << "\n";
}

int finish(const Outcome& o, const std::string& out_path) {
  if (out_path.empty()) {
    report(o, std::cout, "");
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "acdkit: cannot write " << out_path << "\n";
      return ACDK_INPUT_ERROR;
    }
    report(o, f, "");
  }
  return o.status;
}

// Runs a single-input command on every .json file of a directory, in parallel, and prints
// the results in file-name order.
int run_each(const Settings& settings, const std::string& dir, const Call& call, const std::string& out_path) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
  if (ec) {
    std::cerr << "acdkit: cannot list " << dir << "\n";
    return ACDK_INPUT_ERROR;
  }
  std::sort(files.begin(), files.end());
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, [&, f] { return run(settings, {f}, call); }));
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "acdkit: cannot write " << out_path << "\n";
      return ACDK_INPUT_ERROR;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  int worst = ACDK_OK;
  for (std::size_t k = 0; k < files.size(); ++k) {
    auto o = jobs[k].get();
    out << "# " << fs::path(files[k]).filename().string() << " status=" << o.status << "\n";
    report(o, out, files[k]);
    worst = std::max(worst, o.status);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Muller and parity acceptance conditions: Zielonka trees, ACD, relabellings and games"};
  app.require_subcommand(1);
  Settings settings;
  std::string out_path, each_dir;
  app.add_option("--loop-cap", settings.loop_cap, "Max edges per SCC for loop enumeration (default 20)");
  app.add_option("--explore-cap", settings.explore_cap, "Max sets visited while computing tree children");
  app.add_option("-o,--output", out_path, "Write the result to a file instead of stdout");
  app.add_option("--each", each_dir, "Run a single-input command on every .json file in a directory");

  struct Single {
    std::string name;
    std::string help;
    bool has_dot;
    std::function<acdk_status(acdk_context*, acdk_document*, bool, char**)> fn;
  };
  std::string relabel_target;
  const std::vector<Single> singles = {
      {"validate", "Check the document's invariants", false,
       [](acdk_context* c, acdk_document* d, bool, char** o) { return acdk_validate(c, d, o); }},
      {"dot", "Render the system as DOT", false,
       [](acdk_context* c, acdk_document* d, bool, char** o) { return acdk_system_dot(c, d, o); }},
      {"zielonka", "Zielonka tree of the condition", true,
       [](acdk_context* c, acdk_document* d, bool dot, char** o) { return acdk_zielonka(c, d, dot ? ACDK_DOT : ACDK_JSON, o); }},
      {"zt-automaton", "Zielonka tree parity automaton", true,
       [](acdk_context* c, acdk_document* d, bool dot, char** o) { return acdk_zt_automaton(c, d, dot ? ACDK_DOT : ACDK_JSON, o); }},
      {"acd", "Alternating cycle decomposition", true,
       [](acdk_context* c, acdk_document* d, bool dot, char** o) { return acdk_acd(c, d, dot ? ACDK_DOT : ACDK_JSON, o); }},
      {"transform", "ACD parity transform with its morphism", true,
       [](acdk_context* c, acdk_document* d, bool dot, char** o) { return acdk_transform(c, d, dot ? ACDK_DOT : ACDK_JSON, o); }},
      {"stats", "Transform size, priorities and tree heights", false,
       [](acdk_context* c, acdk_document* d, bool, char** o) { return acdk_stats(c, d, o); }},
      {"shape", "Rabin, Streett and parity shape of the ACD", false,
       [](acdk_context* c, acdk_document* d, bool, char** o) { return acdk_shape(c, d, o); }},
      {"relabel", "Equivalent Rabin, Streett, parity or weak condition", false,
       [&relabel_target](acdk_context* c, acdk_document* d, bool, char** o) {
         acdk_target t = relabel_target == "rabin"     ? ACDK_TARGET_RABIN
                         : relabel_target == "streett" ? ACDK_TARGET_STREETT
                         : relabel_target == "parity"  ? ACDK_TARGET_PARITY
                                                       : ACDK_TARGET_WEAK;
         return acdk_relabel(c, d, t, o);
       }},
      {"compress", "Remove unused priorities", false,
       [](acdk_context* c, acdk_document* d, bool, char** o) { return acdk_compress(c, d, o); }},
      {"solve", "Solve a parity or Muller game", false,
       [](acdk_context* c, acdk_document* d, bool, char** o) { return acdk_solve(c, d, o); }},
  };

  std::vector<std::string> single_file(singles.size());
  std::vector<bool> single_dot(singles.size(), false);
  std::vector<CLI::App*> single_cmd;
  for (std::size_t k = 0; k < singles.size(); ++k) {
    auto* sub = app.add_subcommand(singles[k].name, singles[k].help);
    sub->add_option("file", single_file[k], "Input document");
    if (singles[k].has_dot) sub->add_flag("--dot", [&, k](std::int64_t n) { single_dot[k] = n > 0; }, "Emit DOT");
    if (singles[k].name == "relabel")
      sub->add_option("--target", relabel_target, "rabin, streett, parity or weak")
          ->required()
          ->check(CLI::IsMember({"rabin", "streett", "parity", "weak"}));
    single_cmd.push_back(sub);
  }

  std::string compose_automaton, compose_file;
  auto* compose = app.add_subcommand("compose", "Product of a deterministic automaton with a system");
  compose->add_option("automaton", compose_automaton, "Automaton document")->required();
  compose->add_option("file", compose_file, "System document")->required();

  std::string morph_file, morph_target;
  auto* check = app.add_subcommand("check-morphism", "Verify the document's morphism block");
  check->add_option("file", morph_file, "Source document with a morphism block")->required();
  check->add_option("--target", morph_target, "Target document (default: the embedded one)");

  std::string equiv_a, equiv_b;
  auto* equiv = app.add_subcommand("oracle-equiv", "Compare two conditions over the same system");
  equiv->add_option("first", equiv_a, "First document")->required();
  equiv->add_option("second", equiv_b, "Second document")->required();

  CLI11_PARSE(app, argc, argv);

  for (std::size_t k = 0; k < singles.size(); ++k) {
    if (!single_cmd[k]->parsed()) continue;
    const bool dot = single_dot[k];
    Call call = [&, k, dot](acdk_context* c, const std::vector<acdk_document*>& d, char** o) {
      return singles[k].fn(c, d[0], dot, o);
    };
    if (!each_dir.empty()) return run_each(settings, each_dir, call, out_path);
    if (single_file[k].empty()) {
      std::cerr << "acdkit: " << singles[k].name << " needs an input file or --each DIR\n";
      return ACDK_INPUT_ERROR;
    }
    return finish(run(settings, {single_file[k]}, call), out_path);
  }
  if (!each_dir.empty()) {
    std::cerr << "acdkit: --each only applies to single-input commands\n";
    return ACDK_INPUT_ERROR;
  }
  if (compose->parsed())
    return finish(run(settings, {compose_automaton, compose_file},
                      [](acdk_context* c, const std::vector<acdk_document*>& d, char** o) {
                        return acdk_compose(c, d[0], d[1], o);
                      }),
                  out_path);
  if (check->parsed()) {
    std::vector<std::string> files{morph_file};
    if (!morph_target.empty()) files.push_back(morph_target);
    return finish(run(settings, files,
                      [](acdk_context* c, const std::vector<acdk_document*>& d, char** o) {
                        return acdk_check_morphism(c, d[0], d.size() > 1 ? d[1] : nullptr, o);
                      }),
                  out_path);
  }
  if (equiv->parsed())
    return finish(run(settings, {equiv_a, equiv_b},
                      [](acdk_context* c, const std::vector<acdk_document*>& d, char** o) {
                        return acdk_equivalent(c, d[0], d[1], o);
                      }),
                  out_path);
  return ACDK_INPUT_ERROR;
}
