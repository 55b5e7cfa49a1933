#pragma once

#include <optional>
#include <string>
#include <vector>

#include "todorov/lattice.hpp"

namespace todorov {

/// A singular point of the branch curve, possibly infinitely near: a point
/// with a parent lies on the exceptional curve of the parent's blow-up.
struct InfinitelyNearPoint {
  std::string id;
  std::optional<std::string> parent;
  int mult = 2;  // multiplicity of the branch curve at the point
};

struct PlaneBranchCurve {
  int degree = 0;
  std::vector<InfinitelyNearPoint> points;

  /// Throws InputError on odd/nonpositive degree, multiplicity < 2, duplicate
  /// ids, unknown parents or parent cycles. Returns point indices with
  /// parents before children (input order otherwise).
  std::vector<std::size_t> topological_order() const;
  std::vector<std::size_t> children(const std::string& id) const;
};

struct BlowUpRecord {
  std::string point;
  int mult = 0;
  std::size_t exceptional = 0;  // basis index of e_i
  std::int64_t l_dot_l_plus_k = 0;
  std::int64_t k_square = 0;
};

/// Plane blown up at every point of the curve, basis {h, e_1, ..., e_n} with
/// gram diag(1, -1, ..., -1); e_i is the total transform of the i-th
/// exceptional curve, so pulling back a class is the identity on coordinates.
struct ResolutionState {
  IntLattice lattice;
  DivisorClass l;
  DivisorClass k;
  DivisorClass branch;
  std::vector<BlowUpRecord> log;
};

/// Canonical resolution of the double plane branched along `curve`. At a
/// point of multiplicity m: branch -= 2*floor(m/2)*e, L -= floor(m/2)*e, K += e.
ResolutionState canonical_resolution(const PlaneBranchCurve& curve);

struct DoublePlaneInvariants {
  std::int64_t chi = 0;
  std::int64_t kv2 = 0;

  friend bool operator==(const DoublePlaneInvariants&, const DoublePlaneInvariants&) = default;
};

/// chi = 2 + L(L+K)/2 and K_V^2 = 2 (K+L)^2. Throws DomainError if L(L+K) is odd.
DoublePlaneInvariants double_plane_invariants(const ResolutionState& r);

/// Double point, or triple point whose infinitely near points are at most double.
bool is_negligible(const PlaneBranchCurve& curve, const std::string& id);

}  // namespace todorov
