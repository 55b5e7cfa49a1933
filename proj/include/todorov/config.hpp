#pragma once

#include <optional>
#include <string>
#include <vector>

#include "todorov/ade.hpp"
#include "todorov/lattice.hpp"

namespace todorov {

/// Branch data B = B' + A_1 + ... + A_t on a K3 lattice model.
struct BranchConfiguration {
  IntLattice lattice;
  DivisorClass bp;                        // class of B'
  std::vector<DivisorClass> a;            // nodal branch curves A_i
  std::vector<DivisorClass> inventory;    // other known curves (nef check, xi graph)
  bool negligible_ok = true;              // B' has at most negligible singularities
  std::vector<DivisorClass> sd_obstructed;  // curves whose graph maps to the singular point of the image of |B'|

  std::size_t t() const { return a.size(); }
  DivisorClass branch() const;
};

struct Violation {
  std::string clause;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::optional<EvennessCertificate> evenness;
  /// Nefness is only checked against the declared curves.
  bool nef_certificate_partial = true;

  bool ok() const { return violations.empty(); }
  bool violated(const std::string& clause) const;
};

ValidationReport validate(const BranchConfiguration& cfg);

struct SurfaceInvariants {
  int q = 0;
  int p_g = 0;
  int k2 = 0;
  int chi = 0;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// q = 0, p_g = 1, K^2 = t - 8 for the minimal model of the double cover.
/// Throws DomainError for an invalid configuration.
SurfaceInvariants invariants(const BranchConfiguration& cfg);

struct XiGraph {
  DualGraph graph;
  std::vector<bool> is_branch;  // vertex is one of the A_i
};

/// Dual graph of every known curve orthogonal to B'. The A_i come first in
/// their configured order, then the remaining inventory. Throws DomainError if
/// a curve of positive square is orthogonal to B' (Hodge index).
XiGraph xi_graph(const BranchConfiguration& cfg);

}  // namespace todorov
