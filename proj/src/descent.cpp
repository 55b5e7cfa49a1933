#include "todorov/descent.hpp"

#include <algorithm>

#include "todorov/error.hpp"

namespace todorov {

std::string to_string(SDTag tag) {
  switch (tag) {
    case SDTag::ConeOverQuartic: return "i";
    case SDTag::ConeOverCubic: return "ii";
    case SDTag::QuadricConeA: return "iii.a";
    case SDTag::QuadricConeB: return "iii.b";
  }
  return "?";
}

SDTag parse_sd_tag(const std::string& s) {
  if (s == "i") return SDTag::ConeOverQuartic;
  if (s == "ii") return SDTag::ConeOverCubic;
  if (s == "iii.a") return SDTag::QuadricConeA;
  if (s == "iii.b") return SDTag::QuadricConeB;
  throw InputError("unknown Saint-Donat case '" + s + "' (expected i, ii, iii.a or iii.b)");
}

namespace {

bool contains(const std::vector<DivisorClass>& list, const DivisorClass& c) {
  return std::find(list.begin(), list.end(), c) != list.end();
}

std::size_t expected_gamma_count(const SDCase& sd) {
  switch (sd.tag) {
    case SDTag::ConeOverQuartic: return 1;
    case SDTag::ConeOverCubic:
    case SDTag::QuadricConeA: return 2;
    case SDTag::QuadricConeB: return std::max<std::size_t>(sd.gammas.size(), 3);
  }
  return 0;
}

}  // namespace

bool verify_sd_case(const IntLattice& lat, const DivisorClass& d, const SDCase& sd) {
  const auto& g = sd.gammas;
  if (g.size() != expected_gamma_count(sd)) return false;
  if (d.size() != lat.rank() || sd.e.size() != lat.rank()) return false;
  for (const auto& c : g)
    if (c.size() != lat.rank()) return false;

  if (lat.square(sd.e) != 0 || lat.pair(sd.e, d) != 2) return false;
  for (const auto& c : g)
    if (lat.square(c) != -2) return false;

  // expected decomposition of D, E.G_i and G_i.G_j
  DivisorClass expected = lat.zero();
  std::vector<std::int64_t> e_dot(g.size(), 0);
  std::vector<std::vector<std::int64_t>> adj(g.size(), std::vector<std::int64_t>(g.size(), 0));
  auto link = [&](std::size_t i, std::size_t j) { adj[i][j] = adj[j][i] = 1; };

  switch (sd.tag) {
    case SDTag::ConeOverQuartic:
      expected = 4 * sd.e + 2 * g[0];
      e_dot = {1};
      break;
    case SDTag::ConeOverCubic:
      expected = 3 * sd.e + 2 * g[0] + g[1];
      e_dot = {1, 0};
      link(0, 1);
      break;
    case SDTag::QuadricConeA:
      expected = 2 * sd.e + g[0] + g[1];
      e_dot = {1, 1};
      break;
    case SDTag::QuadricConeB: {
      const std::size_t n = sd.chain_length();
      expected = 2 * sd.e;
      for (std::size_t i = 0; i <= n; ++i) expected += 2 * g[i];
      expected += g[n + 1] + g[n + 2];
      e_dot[0] = 1;
      for (std::size_t i = 0; i < n; ++i) link(i, i + 1);
      link(n, n + 1);
      link(n, n + 2);
      break;
    }
  }
  if (!(expected == d)) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (lat.pair(sd.e, g[i]) != e_dot[i]) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (lat.pair(g[i], g[j]) != adj[i][j]) return false;
  }
  return true;
}

std::vector<SDExclusion> sd_exclusions(const BranchConfiguration& cfg, const SDCase& sd) {
  if (sd.tag != SDTag::QuadricConeB) throw DomainError("sd_exclusions applies to case iii.b only, got " + to_string(sd.tag));
  const IntLattice& lat = cfg.lattice;
  if (!verify_sd_case(lat, cfg.bp, sd)) throw DomainError("B' does not verify as Saint-Donat case iii.b");

  std::vector<std::pair<std::string, DivisorClass>> probes{{"E", sd.e}};
  for (std::size_t i = 0; i < sd.gammas.size(); ++i) probes.emplace_back("Gamma_" + std::to_string(i), sd.gammas[i]);

  std::vector<SDExclusion> out;
  const DivisorClass branch = cfg.branch();
  for (std::size_t i = 0; i <= sd.chain_length(); ++i) {
    SDExclusion ex;
    ex.gamma = i;
    ex.fired = contains(cfg.a, sd.gammas[i]);
    const DivisorClass b = ex.fired ? branch : branch + sd.gammas[i];
    for (const auto& [name, c] : probes) {
      const auto p = lat.pair(b, c);
      if (p % 2 != 0) {
        ex.witness = name;
        ex.witness_pairing = p;
        break;
      }
    }
    out.push_back(std::move(ex));
  }
  return out;
}

SelectedGraph select_graph(const BranchConfiguration& cfg) {
  const auto report = validate(cfg);
  if (!report.ok()) throw DomainError("select_graph: configuration violates " + report.violations.front().clause);
  if (cfg.t() < 10) throw DomainError("select_graph needs t >= 10");

  XiGraph xi = xi_graph(cfg);
  for (auto& comp : decompose(xi.graph)) {
    if (!comp.type.is_ade()) continue;
    std::vector<std::size_t> marking;
    bool obstructed = false;
    for (auto v : comp.vertices) {
      if (xi.is_branch[v]) marking.push_back(v);
      obstructed = obstructed || contains(cfg.sd_obstructed, xi.graph.vertices[v]);
    }
    if (marking.empty() || obstructed) continue;
    if (!is_even_marking(xi.graph, comp.vertices, marking)) continue;
    return {std::move(xi), std::move(comp), std::move(marking)};
  }
  throw DomainError("no admissible component: every graph carrying a branch curve is odd, non-ADE or obstructed");
}

std::pair<DescentStep, BranchConfiguration> descent_step(const BranchConfiguration& cfg) {
  const auto report = validate(cfg);
  if (!report.ok()) throw DomainError("descent_step: configuration violates " + report.violations.front().clause);
  if (cfg.t() <= 9) throw DomainError("descent exhausted: t = 9");

  const IntLattice& lat = cfg.lattice;
  SelectedGraph sel = select_graph(cfg);
  const auto& graph = sel.xi.graph;
  const auto& verts = sel.component.vertices;

  DescentStep step;
  step.component = sel.component;
  for (auto v : verts) step.component_classes.push_back(graph.vertices[v]);
  step.multiplicities = fundamental_cycle(graph, verts);
  step.z = fundamental_cycle_class(graph, verts);

  // new branch vertices: N = Z + S (mod 2)
  std::vector<DivisorClass> consumed;
  for (std::size_t p = 0; p < verts.size(); ++p) {
    const bool marked = std::find(sel.marking.begin(), sel.marking.end(), verts[p]) != sel.marking.end();
    if (marked) {
      step.marking.push_back(p);
      consumed.push_back(graph.vertices[verts[p]]);
    }
    if ((step.multiplicities[p] + (marked ? 1 : 0)) % 2 != 0) step.new_vertices.push_back(p);
  }

  step.new_bp = cfg.bp - step.z;
  for (auto p : step.new_vertices) step.new_a.push_back(graph.vertices[verts[p]]);
  for (const auto& c : cfg.a)
    if (!contains(consumed, c)) step.new_a.push_back(c);

  BranchConfiguration next;
  next.lattice = lat;
  next.bp = step.new_bp;
  next.a = step.new_a;
  for (const auto& c : cfg.a)
    if (!contains(next.inventory, c)) next.inventory.push_back(c);
  for (const auto& c : cfg.inventory)
    if (!contains(next.inventory, c)) next.inventory.push_back(c);
  next.negligible_ok = cfg.negligible_ok;

  const DivisorClass diff = cfg.branch() - next.branch();
  step.half_difference = diff;
  for (auto& c : step.half_difference.coords) {
    if (c % 2 != 0) throw DomainError("descent produced a branch class that differs from the old one by an odd class");
    c /= 2;
  }
  if (lat.square(step.new_bp) != lat.square(cfg.bp) - 2)
    throw DomainError("descent step did not lower B'^2 by 2");
  if (next.t() != cfg.t() - 1) throw DomainError("descent step produced " + std::to_string(next.t()) + " branch curves");

  const auto next_report = validate(next);
  if (!next_report.ok())
    throw DomainError("descended configuration violates " + next_report.violations.front().clause + ": " +
                      next_report.violations.front().detail);
  step.certificate = *next_report.evenness;
  step.k2_before = static_cast<int>(cfg.t()) - 8;
  step.k2_after = static_cast<int>(next.t()) - 8;
  return {std::move(step), std::move(next)};
}

DescentRun full_descent(const BranchConfiguration& cfg, std::optional<std::size_t> max_steps) {
  const auto report = validate(cfg);
  if (!report.ok()) throw DomainError("full_descent: configuration violates " + report.violations.front().clause);
  DescentRun run;
  run.configurations.push_back(cfg);
  while (run.configurations.back().t() > 9 && (!max_steps || run.steps.size() < *max_steps)) {
    auto [step, next] = descent_step(run.configurations.back());
    run.steps.push_back(std::move(step));
    run.configurations.push_back(std::move(next));
  }
  return run;
}

CubicSplitting cubic_splitting_certificate(const BranchConfiguration& cfg, const DivisorClass& pullback_cubic) {
  const IntLattice& lat = cfg.lattice;
  const auto report = validate(cfg);
  if (!report.ok()) throw DomainError("cubic_splitting_certificate: configuration violates " + report.violations.front().clause);
  if (cfg.t() != 9) throw DomainError("cubic_splitting_certificate needs t = 9");
  if (lat.square(cfg.bp) != 2) throw DomainError("cubic_splitting_certificate needs B'^2 = 2");

  CubicSplitting out;
  out.twice_j = pullback_cubic - sum(cfg.a, lat.rank());
  out.certificate = is_even(lat, out.twice_j);
  if (!out.certificate) return out;
  out.found = true;

  out.multiplicity_one = true;
  for (const auto& a : cfg.a) {
    const Rational v(lat.pair(out.twice_j, a), 2);
    out.j_dot_a.push_back(v);
    out.multiplicity_one = out.multiplicity_one && v == Rational(1);
  }
  out.j_square = Rational(lat.square(out.twice_j), 4);
  out.effective = out.j_square >= Rational(-2);
  return out;
}

}  // namespace todorov
