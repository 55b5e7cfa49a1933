#pragma once

#include <span>
#include <string>
#include <vector>

#include "todorov/lattice.hpp"

namespace todorov {

/// Dual graph of a configuration of (-2)-classes. Two vertices are adjacent
/// iff their classes pair to 1; pairings other than 0/1 are rejected.
struct DualGraph {
  std::vector<DivisorClass> vertices;
  std::vector<std::vector<int>> adjacency;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i][j] != 0; }
  std::vector<std::size_t> neighbors(std::size_t v) const;

  /// Graph on abstract vertices with the given 0/1 adjacency. Vertices become
  /// the basis vectors of the lattice with gram -2*I + adjacency.
  static DualGraph from_adjacency(std::vector<std::vector<int>> adjacency);
};

/// Throws InputError if a class is not a (-2)-class or two classes pair
/// outside {0, 1}.
DualGraph build_dual_graph(const IntLattice& lat, std::vector<DivisorClass> curves);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const DualGraph& g);

/// -2 on the diagonal, adjacency off it, restricted to `component`.
IntMatrix component_gram(const DualGraph& g, std::span<const std::size_t> component);

struct DynkinType {
  enum class Family { A, D, E, NotADE };
  Family family = Family::NotADE;
  int rank = 0;

  static DynkinType a(int n) { return {Family::A, n}; }
  static DynkinType d(int n) { return {Family::D, n}; }
  static DynkinType e(int n) { return {Family::E, n}; }
  static DynkinType not_ade() { return {}; }

  bool is_ade() const { return family != Family::NotADE; }
  /// "A17", "D4", "E6", "NotADE".
  std::string name() const;
  /// Inverse of name(); throws InputError.
  static DynkinType parse(const std::string& s);

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Standard Dynkin diagram. A_n is the path 0-1-..-(n-1). D_n: vertices 0 and
/// 1 are the short fork legs, 2 is the branch vertex, 3..n-1 the long leg.
/// E_n: 0 is the branch vertex, 1 the short leg, 2-3 the second leg, 4.. the
/// long leg.
DualGraph dynkin_diagram(DynkinType t);

/// Dynkin type by degree-sequence analysis. Throws InputError if the
/// component is empty or disconnected.
DynkinType classify(const DualGraph& g, std::span<const std::size_t> component);

struct ADEComponent {
  std::vector<std::size_t> vertices;
  DynkinType type;
};

/// All components of g with their types.
std::vector<ADEComponent> decompose(const DualGraph& g);

/// Multiplicities of the fundamental cycle, aligned with `component`.
/// Throws DomainError for a non-ADE component.
std::vector<int> fundamental_cycle(const DualGraph& g, std::span<const std::size_t> component);

/// The fundamental cycle as a class in the lattice of the vertices.
DivisorClass fundamental_cycle_class(const DualGraph& g, std::span<const std::size_t> component);

/// Every vertex of `component` has an even number of neighbours in `marking`.
bool is_even_marking(const DualGraph& g, std::span<const std::size_t> component, std::span<const std::size_t> marking);

/// All nonempty even markings of an ADE component (subsets of graph vertex
/// indices, each sorted, listed lexicographically). Throws DomainError for a
/// non-ADE component or one with more than 24 vertices.
std::vector<std::vector<std::size_t>> even_markings(const DualGraph& g, std::span<const std::size_t> component);

inline constexpr std::size_t kMaxMarkingRank = 24;

}  // namespace todorov
