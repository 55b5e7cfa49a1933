#include "todorov/config.hpp"

#include <algorithm>

#include "todorov/error.hpp"

namespace todorov {

DivisorClass BranchConfiguration::branch() const { return bp + sum(a, lattice.rank()); }

bool ValidationReport::violated(const std::string& clause) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.clause == clause; });
}

ValidationReport validate(const BranchConfiguration& cfg) {
  const IntLattice& lat = cfg.lattice;
  ValidationReport report;
  auto fail = [&](std::string clause, std::string detail) { report.violations.push_back({std::move(clause), std::move(detail)}); };

  lat.check(cfg.bp);
  for (const auto& c : cfg.a) lat.check(c);
  for (const auto& c : cfg.inventory) lat.check(c);

  const auto t = cfg.t();
  if (t < 9 || t > 16) fail("t_range", "t = " + std::to_string(t) + " is outside 9..16");

  for (std::size_t i = 0; i < t; ++i) {
    if (const auto s = lat.square(cfg.a[i]); s != -2)
      fail("A_square", "A_" + std::to_string(i + 1) + "^2 = " + std::to_string(s));
    if (const auto p = lat.pair(cfg.bp, cfg.a[i]); p != 0)
      fail("A_orthogonal_Bp", "B'.A_" + std::to_string(i + 1) + " = " + std::to_string(p));
    for (std::size_t j = i + 1; j < t; ++j) {
      if (const auto p = lat.pair(cfg.a[i], cfg.a[j]); p != 0)
        fail("A_disjoint", "A_" + std::to_string(i + 1) + ".A_" + std::to_string(j + 1) + " = " + std::to_string(p));
    }
  }

  const auto bp2 = lat.square(cfg.bp);
  if (bp2 <= 0) fail("Bp_big", "B'^2 = " + std::to_string(bp2));
  for (std::size_t k = 0; k < cfg.inventory.size(); ++k) {
    if (const auto p = lat.pair(cfg.bp, cfg.inventory[k]); p < 0)
      fail("Bp_nef_partial", "B'.C_" + std::to_string(k + 1) + " = " + std::to_string(p));
  }

  if (!cfg.negligible_ok) fail("negligible", "B' is not declared to have at most negligible singularities");

  const DivisorClass b = cfg.branch();
  auto cert = is_even(lat, b);
  if (!cert) fail("evenness", "B is not 2-divisible modulo the declared classes");
  report.evenness = std::move(cert);

  if (const auto hs = half_square(lat, b); hs != Rational(-4))
    fail("half_square", "(B/2)^2 = " + std::to_string(hs.numerator()) +
                            (hs.denominator() == 1 ? "" : "/" + std::to_string(hs.denominator())) + ", expected -4");

  // Forced by B^2 = -16 and orthogonality; only meaningful once those hold.
  if (report.ok() && bp2 != 2 * (static_cast<std::int64_t>(t) - 8))
    fail("Bp_square_identity", "B'^2 = " + std::to_string(bp2) + " but 2(t-8) = " + std::to_string(2 * (static_cast<int>(t) - 8)));

  return report;
}

SurfaceInvariants invariants(const BranchConfiguration& cfg) {
  const auto report = validate(cfg);
  if (!report.ok()) throw DomainError("invariants: configuration violates " + report.violations.front().clause);
  SurfaceInvariants inv;
  inv.q = 0;
  inv.p_g = 1;
  inv.k2 = static_cast<int>(cfg.t()) - 8;
  inv.chi = 1 + inv.p_g - inv.q;
  return inv;
}

XiGraph xi_graph(const BranchConfiguration& cfg) {
  const IntLattice& lat = cfg.lattice;
  std::vector<DivisorClass> curves;
  std::vector<bool> is_branch;
  auto consider = [&](const DivisorClass& c, bool branch) {
    if (std::find(curves.begin(), curves.end(), c) != curves.end()) return;
    if (lat.pair(cfg.bp, c) != 0) return;
    if (lat.square(c) > 0) throw DomainError("curve of positive square orthogonal to B' contradicts the Hodge index theorem");
    curves.push_back(c);
    is_branch.push_back(branch);
  };
  for (const auto& c : cfg.a) consider(c, true);
  for (const auto& c : cfg.inventory) consider(c, false);
  return {build_dual_graph(lat, std::move(curves)), std::move(is_branch)};
}

}  // namespace todorov
