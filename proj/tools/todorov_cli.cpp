// Command-line front-end: every subcommand reads JSON (or a fixture name) and
// writes one canonically ordered JSON document to stdout.
//
// Exit codes: 0 success, 1 mathematical failure (invalid configuration,
// descent error, false case check), 2 malformed input.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "todorov/error.hpp"
#include "todorov/io.hpp"

namespace {

using todorov::io::Json;
namespace io = todorov::io;

struct Options {
  bool quiet = false;
  bool json = true;
};

int emit(const Json& j, int code) {
  std::cout << j.dump(2) << '\n';
  return code;
}

void note(const Options& opt, const std::string& msg) {
  if (!opt.quiet) std::cerr << msg << '\n';
}

int cmd_validate(const Options& opt, const std::string& path) {
  const auto cfg = io::config_from_json(io::read_json_file(path));
  const auto report = todorov::validate(cfg);
  Json out = io::to_json(report);
  out["t"] = cfg.t();
  out["Bprime_square"] = cfg.lattice.square(cfg.bp);
  if (report.ok()) {
    const auto inv = todorov::invariants(cfg);
    out["invariants"] = io::to_json(inv);
    out["K2"] = inv.k2;
    note(opt, "valid: t = " + std::to_string(cfg.t()) + ", K^2 = " + std::to_string(inv.k2));
  } else {
    note(opt, "invalid: " + std::to_string(report.violations.size()) + " violated clause(s)");
  }
  return emit(out, report.ok() ? 0 : 1);
}

int cmd_invariants(const Options& opt, const std::string& path) {
  const auto cfg = io::config_from_json(io::read_json_file(path));
  const auto inv = todorov::invariants(cfg);
  note(opt, "q = 0, p_g = 1, K^2 = " + std::to_string(inv.k2));
  return emit(io::to_json(inv), 0);
}

int cmd_classify(const Options& opt, const std::string& path) {
  const auto g = io::graph_from_json(io::read_json_file(path));
  Json out = Json::array();
  for (const auto& c : todorov::decompose(g)) out.push_back(Json{{"vertices", c.vertices}, {"type", c.type.name()}});
  note(opt, std::to_string(out.size()) + " component(s)");
  return emit(out, 0);
}

int cmd_markings(const Options& opt, const std::string& path) {
  const auto g = io::graph_from_json(io::read_json_file(path));
  Json out = Json::array();
  for (const auto& c : todorov::decompose(g)) {
    Json entry{{"vertices", c.vertices}, {"type", c.type.name()}};
    entry["markings"] = c.type.is_ade() ? Json(todorov::even_markings(g, c.vertices)) : Json(nullptr);
    out.push_back(std::move(entry));
  }
  note(opt, std::to_string(out.size()) + " component(s)");
  return emit(out, 0);
}

int cmd_resolve(const Options& opt, const std::string& path) {
  const auto curve = io::plane_curve_from_json(io::read_json_file(path));
  const auto state = todorov::canonical_resolution(curve);
  const auto inv = todorov::double_plane_invariants(state);
  Json out = io::to_json(state);
  out["chi"] = inv.chi;
  out["KV2"] = inv.kv2;
  Json verdicts = Json::object();
  for (const auto& p : curve.points) verdicts[p.id] = todorov::is_negligible(curve, p.id);
  out["negligible"] = verdicts;
  note(opt, "chi = " + std::to_string(inv.chi) + ", K_V^2 = " + std::to_string(inv.kv2));
  return emit(out, 0);
}

int cmd_descend(const Options& opt, const std::string& path, std::optional<std::size_t> steps) {
  const auto cfg = io::config_from_json(io::read_json_file(path));
  const auto run = todorov::full_descent(cfg, steps);
  Json log = Json::array();
  for (const auto& s : run.steps) log.push_back(io::to_json(s));
  const auto& last = run.configurations.back();
  Json out{{"initial", Json{{"t", cfg.t()}, {"K2", static_cast<int>(cfg.t()) - 8}}},
           {"steps", log},
           {"final", io::to_json(last)},
           {"K2", static_cast<int>(last.t()) - 8}};
  if (last.t() == 9 && last.lattice.square(last.bp) == 2) {
    // the pullback of a plane cubic under the map of |B'| has class 3B'
    out["cubic_splitting"] = io::to_json(todorov::cubic_splitting_certificate(last, 3 * last.bp));
  }
  note(opt, std::to_string(run.steps.size()) + " step(s), final K^2 = " + std::to_string(static_cast<int>(last.t()) - 8));
  return emit(out, 0);
}

int cmd_sd_check(const Options& opt, const std::string& path) {
  const auto doc = io::sd_document_from_json(io::read_json_file(path));
  const bool ok = todorov::verify_sd_case(doc.lattice, doc.d, doc.sd);
  Json out{{"case", todorov::to_string(doc.sd.tag)}, {"valid", ok}, {"D_square", doc.lattice.square(doc.d)}};
  if (ok && doc.sd.tag == todorov::SDTag::QuadricConeB) {
    todorov::BranchConfiguration cfg;
    cfg.lattice = doc.lattice;
    cfg.bp = doc.d;
    cfg.a = doc.branch_curves;
    Json ex = Json::array();
    for (const auto& e : todorov::sd_exclusions(cfg, doc.sd)) ex.push_back(io::to_json(e));
    out["exclusions"] = ex;
  }
  note(opt, std::string("case ") + todorov::to_string(doc.sd.tag) + (ok ? " verified" : " rejected"));
  return emit(out, ok ? 0 : 1);
}

int cmd_example(const Options& opt, const std::optional<std::string>& name, int j, bool all, bool check, bool describe,
                bool list) {
  namespace ex = todorov::examples;
  if (list) {
    Json out = Json::array();
    for (const auto& d : ex::list_examples()) out.push_back(io::to_json(d));
    return emit(out, 0);
  }
  if (all) {
    if (!check) throw todorov::InputError("--all requires --check");
    Json out = Json::array();
    bool ok = true;
    for (const auto& c : ex::check_all()) {
      out.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"failures", c.failures}});
      ok = ok && c.ok;
    }
    note(opt, ok ? "all fixtures reproduce their expected values" : "fixture regression FAILED");
    return emit(out, ok ? 0 : 1);
  }
  if (!name) throw todorov::InputError("example: give a fixture name, --list, or --all --check");
  if (describe) return emit(io::to_json(ex::describe(*name == "kummer" ? "kummer-" + std::to_string(j) : *name)), 0);
  return emit(io::to_json(ex::config_by_name(*name, j)), 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Todorov branch configurations on K3 lattice models"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--quiet", opt.quiet, "Suppress the human-readable summary on stderr");
  app.add_flag("--json", opt.json, "Emit JSON (always on)");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check a branch configuration");
  validate->add_option("config", path, "Configuration JSON, - for stdin")->required();
  auto* invariants = app.add_subcommand("invariants", "q, p_g, K^2, chi of the double cover");
  invariants->add_option("config", path)->required();
  auto* classify = app.add_subcommand("classify", "Dynkin types of a (-2)-curve graph");
  classify->add_option("graph", path)->required();
  auto* markings = app.add_subcommand("markings", "Even markings of each ADE component");
  markings->add_option("graph", path)->required();
  auto* resolve = app.add_subcommand("resolve", "Canonical resolution of a double plane");
  resolve->add_option("curve", path)->required();

  auto* descend = app.add_subcommand("descend", "Lower K^2 step by step down to 1");
  descend->add_option("config", path)->required();
  bool full = false;
  std::optional<std::size_t> steps;
  auto* full_flag = descend->add_flag("--full", full, "Descend to t = 9 (default)");
  descend->add_option("--steps", steps, "Number of steps")->excludes(full_flag);

  auto* sd_check = app.add_subcommand("sd-check", "Verify a Saint-Donat configuration");
  sd_check->add_option("case", path)->required();

  auto* example = app.add_subcommand("example", "Emit or check a shipped fixture");
  std::optional<std::string> name;
  int j = 0;
  bool all = false, check = false, describe = false, list = false;
  example->add_option("name", name, "kummer, kunev, non-kummer-2, non-kummer-3, a17");
  example->add_option("--j", j, "Nodes on the quadric for the kummer family")->check(CLI::Range(0, 7));
  example->add_flag("--all", all, "Every fixture");
  example->add_flag("--check", check, "Run the fixture regression");
  example->add_flag("--describe", describe, "Print the fixture descriptor");
  example->add_flag("--list", list, "List fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(opt, path);
    if (*invariants) return cmd_invariants(opt, path);
    if (*classify) return cmd_classify(opt, path);
    if (*markings) return cmd_markings(opt, path);
    if (*resolve) return cmd_resolve(opt, path);
    if (*descend) return cmd_descend(opt, path, steps);
    if (*sd_check) return cmd_sd_check(opt, path);
    if (*example) return cmd_example(opt, name, j, all, check, describe, list);
  } catch (const todorov::InputError& e) {
    note(opt, std::string("error: ") + e.what());
    return emit(Json{{"error", e.what()}, {"kind", "input"}}, 2);
  } catch (const todorov::DomainError& e) {
    note(opt, std::string("error: ") + e.what());
    return emit(Json{{"error", e.what()}, {"kind", "domain"}}, 1);
  }
  return 2;
}
