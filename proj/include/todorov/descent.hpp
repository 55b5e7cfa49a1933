#pragma once

#include <optional>
#include <string>
#include <vector>

#include "todorov/ade.hpp"
#include "todorov/config.hpp"
#include "todorov/lattice.hpp"

namespace todorov {

/// Saint-Donat configurations for a non-birational |D| with singular image.
enum class SDTag {
  ConeOverQuartic,  // (i)     D = 4E + 2G
  ConeOverCubic,    // (ii)    D = 3E + 2G0 + G1
  QuadricConeA,     // (iii.a) D = 2E + G0 + G1
  QuadricConeB,     // (iii.b) D = 2E + 2(G0 + .. + GN) + G(N+1) + G(N+2)
};

std::string to_string(SDTag tag);
/// Accepts "i", "ii", "iii.a", "iii.b"; throws InputError otherwise.
SDTag parse_sd_tag(const std::string& s);

struct SDCase {
  SDTag tag = SDTag::ConeOverQuartic;
  DivisorClass e;                    // elliptic pencil class
  std::vector<DivisorClass> gammas;  // G0, G1, ... (for iii.b: N + 3 of them)

  /// N for case (iii.b).
  std::size_t chain_length() const { return gammas.size() >= 3 ? gammas.size() - 3 : 0; }
};

/// Checks E^2 = 0, E.D = 2, G_i^2 = -2, the decomposition of D coordinate by
/// coordinate, and the case's pairing table. In (iii.b) the Gs form the chain
/// G0 - .. - GN with G(N+1), G(N+2) attached to GN, and E meets only G0.
bool verify_sd_case(const IntLattice& lat, const DivisorClass& d, const SDCase& sd);

struct SDExclusion {
  std::size_t gamma = 0;  // index i of G_i, 0 <= i <= N
  /// First curve C among E, G0, G1, ... with B.C odd once G_i is added to the branch.
  std::optional<std::string> witness;
  std::int64_t witness_pairing = 0;
  bool fired = false;  // G_i is actually among the configuration's A_i
};

/// For (iii.b) with D = B': the chain curves G0..GN can never be branch
/// curves. Returns one exclusion per i in 0..N. Throws DomainError for other
/// cases or if B' does not verify as the given case.
std::vector<SDExclusion> sd_exclusions(const BranchConfiguration& cfg, const SDCase& sd);

struct SelectedGraph {
  XiGraph xi;
  ADEComponent component;
  std::vector<std::size_t> marking;  // xi vertices that are branch curves
};

/// Lowest-indexed xi component that contains a branch curve, whose branch
/// curves form an even marking, and which carries no SD-obstructed curve.
/// Throws DomainError if none qualifies.
SelectedGraph select_graph(const BranchConfiguration& cfg);

struct DescentStep {
  ADEComponent component;
  std::vector<DivisorClass> component_classes;
  std::vector<std::size_t> marking;      // positions within component.vertices
  std::vector<int> multiplicities;       // fundamental cycle, aligned with component
  DivisorClass z;
  std::vector<std::size_t> new_vertices;  // positions within component.vertices
  DivisorClass new_bp;
  std::vector<DivisorClass> new_a;
  EvennessCertificate certificate;        // for the new branch
  DivisorClass half_difference;           // old branch - new branch = 2 * this
  int k2_before = 0;
  int k2_after = 0;
};

/// One K^2-lowering step. Throws DomainError for t = 9 ("descent exhausted"),
/// invalid input, or no admissible component.
std::pair<DescentStep, BranchConfiguration> descent_step(const BranchConfiguration& cfg);

struct DescentRun {
  std::vector<BranchConfiguration> configurations;  // input first
  std::vector<DescentStep> steps;
};

/// Iterates descent_step down to t = 9, or at most `max_steps` times.
DescentRun full_descent(const BranchConfiguration& cfg, std::optional<std::size_t> max_steps = std::nullopt);

/// J with 2J = pullback_cubic - sum A_i, stored as twice its value since J
/// need only exist in the overlattice generated by the declared halves.
struct CubicSplitting {
  bool found = false;
  DivisorClass twice_j;
  EvennessCertificate certificate;
  std::vector<Rational> j_dot_a;  // must all be 1
  Rational j_square;
  bool multiplicity_one = false;  // J.A_i = 1 for every i
  bool effective = false;         // J^2 >= -2

  bool ok() const { return found && multiplicity_one && effective; }
};

/// Requires a valid configuration with t = 9 and B'^2 = 2 (DomainError
/// otherwise). `found` is false when pullback_cubic - sum A_i is not even.
CubicSplitting cubic_splitting_certificate(const BranchConfiguration& cfg, const DivisorClass& pullback_cubic);

}  // namespace todorov
