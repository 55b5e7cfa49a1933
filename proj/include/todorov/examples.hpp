#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "todorov/config.hpp"
#include "todorov/cover.hpp"
#include "todorov/descent.hpp"

namespace todorov::examples {

/// Kummer quartic with 16 nodes N_i, h^2 = 4. The quadric section passes
/// through N_1..N_j, so B' = 2h - (N_1 + .. + N_j) and the remaining nodes are
/// the A_i. Declared 2-divisible: N_1 + .. + N_16. Throws InputError unless
/// 0 <= j <= 7.
BranchConfiguration kummer_config(int j);

/// Kummer family at j = 7 (K^2 = 1).
inline BranchConfiguration kunev_config() { return kummer_config(7); }

enum class NonKummerVariant { Two, Three };

/// Double plane over two cubics tangent to a conic at three points. Basis
/// {H, A_1..A_11}: H^2 = 2 (pullback of a line), H.A_1 = H.A_2 = 2 (the two
/// halves of the conic), A_3..A_11 the nodes of the sextic. Declared
/// 2-divisible: H + A_3 + .. + A_11.
///   Two:   B' = H + A_2,       A = {A_2..A_11}, t = 10
///   Three: B' = H + A_1 + A_2, A = {A_1..A_11}, t = 11
BranchConfiguration non_kummer_config(NonKummerVariant variant);

/// Quartic with A_17 + A_1 points. Basis {H, l, A_1..A_9, E_1..E_8}: H^2 = 2,
/// l^2 = -2, H.l = 2, chain A_1 - E_1 - A_2 - .. - E_8 - A_9 orthogonal to H
/// and l. B' = H + l, A = {A_1..A_9, l}, inventory E_1..E_8. Declared
/// 2-divisible: the whole branch H + 2l + A_1 + .. + A_9.
BranchConfiguration a17_config();

/// Fixture name -> configuration. Names: kummer (with j), kunev,
/// non-kummer-2, non-kummer-3, a17. Throws InputError for unknown names.
BranchConfiguration config_by_name(const std::string& name, int j = 0);

struct FixtureDescriptor {
  std::string name;
  std::string citation;
  std::map<std::string, int> parameters;
  std::size_t t = 0;
  int k2 = 0;
  std::int64_t bp_square = 0;
  std::map<std::string, int> xi_census;  // Dynkin type name -> count
};

std::vector<FixtureDescriptor> list_examples();
/// Accepts list names and "kummer-<j>". Throws InputError otherwise.
FixtureDescriptor describe(const std::string& name);

/// Census of xi_graph(cfg) by Dynkin type.
std::map<std::string, int> xi_census(const BranchConfiguration& cfg);

struct FixtureCheck {
  std::string name;
  bool ok = false;
  std::vector<std::string> failures;
};

/// Builds every listed fixture and compares validate/invariants/census with
/// its descriptor.
std::vector<FixtureCheck> check_all();

// Plane branch curves for the double-plane calculator.
PlaneBranchCurve smooth_plane_curve(int degree);
/// Two general cubics: nine ordinary nodes.
PlaneBranchCurve two_cubics_curve();
/// Two nodal cubics meeting at one point with contact of order 9: a chain of
/// nine infinitely near double points plus the two nodes.
PlaneBranchCurve a17_plane_curve();

/// Hand-built lattice realising one Saint-Donat case for D. For iii.b,
/// `chain` is N (the curves G_0..G_N carry coefficient 2). Basis is
/// {E, G_0, G_1, ...} followed by `extra_nodes` orthogonal (-2)-classes.
struct SaintDonatFixture {
  IntLattice lattice;
  DivisorClass d;
  SDCase sd;
};
SaintDonatFixture saint_donat_fixture(SDTag tag, std::size_t chain = 0, std::size_t extra_nodes = 0);

}  // namespace todorov::examples
