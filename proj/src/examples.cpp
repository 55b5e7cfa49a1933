#include "todorov/examples.hpp"

#include <charconv>
#include <optional>

#include "todorov/error.hpp"

namespace todorov::examples {

namespace {

IntMatrix square_matrix(std::size_t n) { return IntMatrix(n, std::vector<std::int64_t>(n, 0)); }

void set_pair(IntMatrix& g, std::size_t i, std::size_t j, std::int64_t v) { g[i][j] = g[j][i] = v; }

}  // namespace

BranchConfiguration kummer_config(int j) {
  if (j < 0 || j > 7) throw InputError("kummer_config: j must be in 0..7, got " + std::to_string(j));
  constexpr std::size_t nodes = 16;
  std::vector<std::string> basis{"h"};
  for (std::size_t i = 1; i <= nodes; ++i) basis.push_back("N_" + std::to_string(i));
  IntMatrix gram = square_matrix(nodes + 1);
  gram[0][0] = 4;
  for (std::size_t i = 1; i <= nodes; ++i) gram[i][i] = -2;

  DivisorClass all_nodes = DivisorClass::zero(nodes + 1);
  for (std::size_t i = 1; i <= nodes; ++i) all_nodes[i] = 1;

  BranchConfiguration cfg;
  cfg.lattice = IntLattice(std::move(basis), std::move(gram), {all_nodes});
  cfg.bp = 2 * cfg.lattice.unit(0);
  for (std::size_t i = 1; i <= nodes; ++i) {
    const auto n = cfg.lattice.unit(i);
    if (static_cast<int>(i) <= j)
      cfg.bp -= n;
    else
      cfg.a.push_back(n);
    cfg.inventory.push_back(n);
  }
  return cfg;
}

BranchConfiguration non_kummer_config(NonKummerVariant variant) {
  std::vector<std::string> basis{"H"};
  for (int i = 1; i <= 11; ++i) basis.push_back("A_" + std::to_string(i));
  IntMatrix gram = square_matrix(12);
  gram[0][0] = 2;
  for (std::size_t i = 1; i <= 11; ++i) gram[i][i] = -2;
  set_pair(gram, 0, 1, 2);
  set_pair(gram, 0, 2, 2);

  DivisorClass declared = DivisorClass::zero(12);
  declared[0] = 1;
  for (std::size_t i = 3; i <= 11; ++i) declared[i] = 1;

  BranchConfiguration cfg;
  cfg.lattice = IntLattice(std::move(basis), std::move(gram), {declared});
  const auto& lat = cfg.lattice;
  const std::size_t first = variant == NonKummerVariant::Two ? 2 : 1;
  cfg.bp = lat["H"] + lat["A_2"];
  if (variant == NonKummerVariant::Three) cfg.bp += lat["A_1"];
  for (std::size_t i = first; i <= 11; ++i) cfg.a.push_back(lat.unit(i));
  for (std::size_t i = 1; i <= 11; ++i) cfg.inventory.push_back(lat.unit(i));
  return cfg;
}

BranchConfiguration a17_config() {
  std::vector<std::string> basis{"H", "l"};
  for (int i = 1; i <= 9; ++i) basis.push_back("A_" + std::to_string(i));
  for (int i = 1; i <= 8; ++i) basis.push_back("E_" + std::to_string(i));
  const std::size_t n = basis.size();
  IntMatrix gram = square_matrix(n);
  gram[0][0] = 2;
  for (std::size_t i = 1; i < n; ++i) gram[i][i] = -2;
  set_pair(gram, 0, 1, 2);
  // chain A_1 E_1 A_2 ... E_8 A_9; A_k has index 1 + k, E_k has index 10 + k
  for (std::size_t k = 1; k <= 8; ++k) {
    set_pair(gram, 1 + k, 10 + k, 1);
    set_pair(gram, 10 + k, 2 + k, 1);
  }

  DivisorClass branch = DivisorClass::zero(n);
  branch[0] = 1;
  branch[1] = 2;
  for (std::size_t k = 1; k <= 9; ++k) branch[1 + k] = 1;

  BranchConfiguration cfg;
  cfg.lattice = IntLattice(std::move(basis), std::move(gram), {branch});
  const auto& lat = cfg.lattice;
  cfg.bp = lat["H"] + lat["l"];
  for (int k = 1; k <= 9; ++k) cfg.a.push_back(lat["A_" + std::to_string(k)]);
  cfg.a.push_back(lat["l"]);
  for (int k = 1; k <= 8; ++k) cfg.inventory.push_back(lat["E_" + std::to_string(k)]);
  return cfg;
}

namespace {

/// j from "kummer-<j>", or nullopt if the name has another shape.
std::optional<int> kummer_suffix(const std::string& name) {
  const std::string prefix = "kummer-";
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int j = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  const auto [end, ec] = std::from_chars(first, last, j);
  if (ec != std::errc() || end != last) return std::nullopt;
  return j;
}

}  // namespace

BranchConfiguration config_by_name(const std::string& name, int j) {
  if (name == "kummer") return kummer_config(j);
  if (name == "kunev") return kunev_config();
  if (name == "non-kummer-2") return non_kummer_config(NonKummerVariant::Two);
  if (name == "non-kummer-3") return non_kummer_config(NonKummerVariant::Three);
  if (name == "a17") return a17_config();
  if (const auto k = kummer_suffix(name)) return kummer_config(*k);
  throw InputError("unknown example '" + name + "'");
}

std::map<std::string, int> xi_census(const BranchConfiguration& cfg) {
  std::map<std::string, int> census;
  for (const auto& comp : decompose(xi_graph(cfg).graph)) ++census[comp.type.name()];
  return census;
}

namespace {

FixtureDescriptor kummer_descriptor(int j) {
  FixtureDescriptor d;
  d.name = j == 0 ? "kummer" : "kummer-" + std::to_string(j);
  d.citation =
      "Todorov: double cover of a Kummer quartic branched over a quadric section through j of its 16 nodes "
      "and over the other 16 - j nodes; q = 0, p_g = 1, K^2 = 8 - j";
  d.parameters = {{"j", j}};
  d.t = static_cast<std::size_t>(16 - j);
  d.k2 = 8 - j;
  d.bp_square = 16 - 2 * j;
  d.xi_census = {{"A1", 16 - j}};
  return d;
}

}  // namespace

std::vector<FixtureDescriptor> list_examples() {
  std::vector<FixtureDescriptor> out;
  out.push_back(kummer_descriptor(0));

  FixtureDescriptor kunev = kummer_descriptor(7);
  kunev.name = "kunev";
  kunev.citation =
      "Kunev surface, K^2 = p_g = 1, q = 0: a bidouble cover of the plane branched along two cubics and a line; "
      "the Kummer construction with the branch quadric through seven nodes";
  out.push_back(kunev);

  FixtureDescriptor nk2;
  nk2.name = "non-kummer-2";
  nk2.citation =
      "Double plane over two cubics tangent to a conic at three points (a non-Kummer Hessian quartic); "
      "branch in |pi^*T + A_2| + A_2 + .. + A_11, K^2 = 2";
  nk2.t = 10;
  nk2.k2 = 2;
  nk2.bp_square = 4;
  nk2.xi_census = {{"A1", 10}};
  out.push_back(nk2);

  FixtureDescriptor nk3 = nk2;
  nk3.name = "non-kummer-3";
  nk3.citation =
      "Double plane over two cubics tangent to a conic at three points (a non-Kummer Hessian quartic); "
      "branch in |pi^*T + A_1 + A_2| + A_1 + .. + A_11, K^2 = 3";
  nk3.t = 11;
  nk3.k2 = 3;
  nk3.bp_square = 6;
  nk3.xi_census = {{"A1", 11}};
  out.push_back(nk3);

  FixtureDescriptor a17;
  a17.name = "a17";
  a17.citation =
      "Double cover of the plane resolved along two nodal cubics with contact of order 9 at a flex; "
      "bicanonical image a quartic with A_17 and A_1 points; q = 0, p_g = 1, K^2 = 2";
  a17.t = 10;
  a17.k2 = 2;
  a17.bp_square = 4;
  a17.xi_census = {{"A17", 1}, {"A1", 1}};
  out.push_back(a17);
  return out;
}

FixtureDescriptor describe(const std::string& name) {
  for (auto& d : list_examples())
    if (d.name == name) return d;
  if (const auto j = kummer_suffix(name); j && *j >= 0 && *j <= 7) return kummer_descriptor(*j);
  throw InputError("unknown example '" + name + "'");
}

std::vector<FixtureCheck> check_all() {
  std::vector<FixtureDescriptor> all = list_examples();
  for (int j = 1; j <= 6; ++j) all.push_back(kummer_descriptor(j));

  std::vector<FixtureCheck> out;
  for (const auto& d : all) {
    FixtureCheck check{d.name, false, {}};
    auto fail = [&](std::string s) { check.failures.push_back(std::move(s)); };
    const auto j = d.parameters.count("j") ? d.parameters.at("j") : 0;
    const auto cfg = config_by_name(d.name, j);
    const auto report = validate(cfg);
    for (const auto& v : report.violations) fail("validate: " + v.clause + " (" + v.detail + ")");
    if (report.ok()) {
      const auto inv = invariants(cfg);
      if (inv != SurfaceInvariants{0, 1, d.k2, 2}) fail("invariants differ from (q=0, p_g=1, K2=" + std::to_string(d.k2) + ", chi=2)");
    }
    if (cfg.t() != d.t) fail("t = " + std::to_string(cfg.t()) + ", expected " + std::to_string(d.t));
    if (cfg.lattice.square(cfg.bp) != d.bp_square) fail("B'^2 = " + std::to_string(cfg.lattice.square(cfg.bp)));
    if (xi_census(cfg) != d.xi_census) fail("xi census differs");
    check.ok = check.failures.empty();
    out.push_back(std::move(check));
  }
  return out;
}

PlaneBranchCurve smooth_plane_curve(int degree) { return PlaneBranchCurve{degree, {}}; }

PlaneBranchCurve two_cubics_curve() {
  PlaneBranchCurve c{6, {}};
  for (int i = 1; i <= 9; ++i) c.points.push_back({"p" + std::to_string(i), std::nullopt, 2});
  return c;
}

PlaneBranchCurve a17_plane_curve() {
  PlaneBranchCurve c{6, {}};
  c.points.push_back({"p1", std::nullopt, 2});
  for (int i = 2; i <= 9; ++i) c.points.push_back({"p" + std::to_string(i), "p" + std::to_string(i - 1), 2});
  c.points.push_back({"node1", std::nullopt, 2});
  c.points.push_back({"node2", std::nullopt, 2});
  return c;
}

SaintDonatFixture saint_donat_fixture(SDTag tag, std::size_t chain, std::size_t extra_nodes) {
  std::size_t gammas = 0;
  switch (tag) {
    case SDTag::ConeOverQuartic: gammas = 1; break;
    case SDTag::ConeOverCubic:
    case SDTag::QuadricConeA: gammas = 2; break;
    case SDTag::QuadricConeB: gammas = chain + 3; break;
  }
  const std::size_t n = 1 + gammas + extra_nodes;
  std::vector<std::string> basis{"E"};
  for (std::size_t i = 0; i < gammas; ++i) basis.push_back("G_" + std::to_string(i));
  for (std::size_t i = 0; i < extra_nodes; ++i) basis.push_back("X_" + std::to_string(i + 1));
  IntMatrix gram = square_matrix(n);
  for (std::size_t i = 1; i < n; ++i) gram[i][i] = -2;

  // basis index of G_i is 1 + i
  switch (tag) {
    case SDTag::ConeOverQuartic: set_pair(gram, 0, 1, 1); break;
    case SDTag::ConeOverCubic:
      set_pair(gram, 0, 1, 1);
      set_pair(gram, 1, 2, 1);
      break;
    case SDTag::QuadricConeA:
      set_pair(gram, 0, 1, 1);
      set_pair(gram, 0, 2, 1);
      break;
    case SDTag::QuadricConeB:
      set_pair(gram, 0, 1, 1);
      for (std::size_t i = 0; i < chain; ++i) set_pair(gram, 1 + i, 2 + i, 1);
      set_pair(gram, 1 + chain, 2 + chain, 1);
      set_pair(gram, 1 + chain, 3 + chain, 1);
      break;
  }

  SaintDonatFixture f{IntLattice(std::move(basis), std::move(gram)), {}, {}};
  f.sd.tag = tag;
  f.sd.e = f.lattice.unit(0);
  for (std::size_t i = 0; i < gammas; ++i) f.sd.gammas.push_back(f.lattice.unit(1 + i));
  const auto& e = f.sd.e;
  const auto& g = f.sd.gammas;
  switch (tag) {
    case SDTag::ConeOverQuartic: f.d = 4 * e + 2 * g[0]; break;
    case SDTag::ConeOverCubic: f.d = 3 * e + 2 * g[0] + g[1]; break;
    case SDTag::QuadricConeA: f.d = 2 * e + g[0] + g[1]; break;
    case SDTag::QuadricConeB:
      f.d = 2 * e;
      for (std::size_t i = 0; i <= chain; ++i) f.d += 2 * g[i];
      f.d += g[chain + 1] + g[chain + 2];
      break;
  }
  return f;
}

}  // namespace todorov::examples
