#include "todorov/ade.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "todorov/error.hpp"
#include "todorov/gf2.hpp"

namespace todorov {

std::vector<std::size_t> DualGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size(); ++w)
    if (w != v && adjacency[v][w] != 0) out.push_back(w);
  return out;
}

DualGraph DualGraph::from_adjacency(std::vector<std::vector<int>> adjacency) {
  const std::size_t n = adjacency.size();
  DualGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n) throw InputError("adjacency matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (adjacency[i][j] != adjacency[j][i]) throw InputError("adjacency matrix is not symmetric");
      if (i == j ? adjacency[i][j] != 0 : (adjacency[i][j] != 0 && adjacency[i][j] != 1))
        throw InputError("adjacency entries must be 0/1 with zero diagonal");
    }
    g.vertices.push_back(DivisorClass::unit(n, i));
  }
  g.adjacency = std::move(adjacency);
  return g;
}

DualGraph build_dual_graph(const IntLattice& lat, std::vector<DivisorClass> curves) {
  const std::size_t n = curves.size();
  DualGraph g;
  g.adjacency.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto self = lat.square(curves[i]);
    if (self != -2) throw InputError("vertex " + std::to_string(i) + " has self-intersection " + std::to_string(self) + ", expected -2");
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto p = lat.pair(curves[i], curves[j]);
      if (p != 0 && p != 1)
        throw InputError("vertices " + std::to_string(i) + " and " + std::to_string(j) + " pair to " + std::to_string(p) +
                         "; only simple configurations are supported");
      g.adjacency[i][j] = g.adjacency[j][i] = static_cast<int>(p);
    }
  }
  g.vertices = std::move(curves);
  return g;
}

std::vector<std::vector<std::size_t>> connected_components(const DualGraph& g) {
  std::vector<int> seen(g.size(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

IntMatrix component_gram(const DualGraph& g, std::span<const std::size_t> component) {
  const std::size_t n = component.size();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? -2 : g.adjacency[component[i]][component[j]];
  return m;
}

std::string DynkinType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::NotADE: break;
  }
  return "NotADE";
}

DynkinType DynkinType::parse(const std::string& s) {
  if (s == "NotADE") return not_ade();
  if (s.size() < 2) throw InputError("bad Dynkin type '" + s + "'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw InputError("bad Dynkin type '" + s + "'");
  } catch (const std::logic_error&) {
    throw InputError("bad Dynkin type '" + s + "'");
  }
  switch (s[0]) {
    case 'A':
      if (n >= 1) return a(n);
      break;
    case 'D':
      if (n >= 4) return d(n);
      break;
    case 'E':
      if (n >= 6 && n <= 8) return e(n);
      break;
    default: break;
  }
  throw InputError("bad Dynkin type '" + s + "'");
}

DualGraph dynkin_diagram(DynkinType t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  auto link = [&](std::size_t i, std::size_t j) { adj[i][j] = adj[j][i] = 1; };
  switch (t.family) {
    case DynkinType::Family::A:
      if (n < 1) throw InputError("A_n needs n >= 1");
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case DynkinType::Family::D:
      if (n < 4) throw InputError("D_n needs n >= 4");
      link(0, 2);
      link(1, 2);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case DynkinType::Family::E:
      if (n < 6 || n > 8) throw InputError("E_n needs 6 <= n <= 8");
      link(0, 1);
      link(0, 2);
      link(2, 3);
      link(0, 4);
      for (std::size_t i = 4; i + 1 < n; ++i) link(i, i + 1);
      break;
    case DynkinType::Family::NotADE: throw InputError("no diagram for NotADE");
  }
  return DualGraph::from_adjacency(std::move(adj));
}

DynkinType classify(const DualGraph& g, std::span<const std::size_t> component) {
  if (component.empty()) throw InputError("classify: empty component");
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  const std::size_t n = component.size();
  std::vector<std::size_t> local(g.size(), absent);
  for (std::size_t i = 0; i < n; ++i) {
    if (component[i] >= g.size()) throw InputError("classify: vertex " + std::to_string(component[i]) + " out of range");
    if (local[component[i]] != absent) throw InputError("classify: repeated vertex");
    local[component[i]] = i;
  }

  auto each_neighbor = [&](std::size_t i, auto&& visit) {
    const auto& row = g.adjacency[component[i]];
    for (std::size_t w = 0; w < row.size(); ++w)
      if (row[w] && local[w] != absent) visit(local[w]);
  };

  std::vector<std::size_t> degree(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    each_neighbor(v, [&](std::size_t w) {
      ++degree[v];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    });
  }
  if (reached != n) throw InputError("classify: component is disconnected");

  std::size_t edges2 = 0;
  std::size_t center = absent;
  for (std::size_t i = 0; i < n; ++i) {
    edges2 += degree[i];
    if (degree[i] > 3) return DynkinType::not_ade();
    if (degree[i] == 3) {
      if (center != absent) return DynkinType::not_ade();
      center = i;
    }
  }
  if (edges2 / 2 != n - 1) return DynkinType::not_ade();  // has a cycle
  const auto rank = static_cast<int>(n);
  if (center == absent) return DynkinType::a(rank);

  // Tree with a single trivalent vertex: measure its three legs.
  std::vector<int> legs;
  each_neighbor(center, [&](std::size_t start) {
    int len = 1;
    std::size_t prev = center;
    std::size_t cur = start;
    while (degree[cur] == 2) {
      std::size_t next = absent;
      each_neighbor(cur, [&](std::size_t w) {
        if (w != prev) next = w;
      });
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  });
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return DynkinType::d(rank);
  if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return DynkinType::e(rank);
  return DynkinType::not_ade();
}

std::vector<ADEComponent> decompose(const DualGraph& g) {
  std::vector<ADEComponent> out;
  for (auto& comp : connected_components(g)) {
    auto type = classify(g, comp);
    out.push_back({std::move(comp), type});
  }
  return out;
}

std::vector<int> fundamental_cycle(const DualGraph& g, std::span<const std::size_t> component) {
  if (!classify(g, component).is_ade()) throw DomainError("fundamental cycle requested for a non-ADE component");
  const std::size_t n = component.size();
  const IntMatrix gram = component_gram(g, component);
  auto dot_vertex = [&](const std::vector<int>& z, std::size_t v) {
    std::int64_t s = 0;
    for (std::size_t w = 0; w < n; ++w) s += gram[v][w] * z[w];
    return s;
  };

  // Laufer's algorithm: grow from one vertex while some vertex meets Z positively.
  std::vector<int> z(n, 0);
  z[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (dot_vertex(z, v) > 0) {
        ++z[v];
        changed = true;
        break;
      }
    }
  }
  return z;
}

DivisorClass fundamental_cycle_class(const DualGraph& g, std::span<const std::size_t> component) {
  const auto mult = fundamental_cycle(g, component);
  if (g.vertices.empty()) throw InputError("empty graph");
  DivisorClass z = DivisorClass::zero(g.vertices[0].size());
  for (std::size_t i = 0; i < component.size(); ++i) z += static_cast<std::int64_t>(mult[i]) * g.vertices[component[i]];
  return z;
}

bool is_even_marking(const DualGraph& g, std::span<const std::size_t> component, std::span<const std::size_t> marking) {
  const std::set<std::size_t> marked(marking.begin(), marking.end());
  for (auto v : component) {
    int count = 0;
    for (auto w : marked) count += g.adjacency[v][w];
    if (count % 2 != 0) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> even_markings(const DualGraph& g, std::span<const std::size_t> component) {
  if (!classify(g, component).is_ade()) throw DomainError("even markings requested for a non-ADE component");
  const std::size_t n = component.size();
  if (n > kMaxMarkingRank) throw DomainError("component has " + std::to_string(n) + " vertices; marking enumeration is capped at 24");

  // Even markings are exactly the nonzero kernel vectors of the adjacency
  // matrix over F2.
  gf2::Matrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj(i, j) = static_cast<std::uint8_t>(g.adjacency[component[i]][component[j]]);
  const auto basis = gf2::nullspace(adj);

  std::vector<std::vector<std::size_t>> out;
  const std::size_t combos = std::size_t{1} << basis.size();
  for (std::size_t mask = 1; mask < combos; ++mask) {
    gf2::Vector x(n, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (mask >> b & 1U)
        for (std::size_t i = 0; i < n; ++i) x[i] ^= basis[b][i];
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i]) subset.push_back(component[i]);
    std::sort(subset.begin(), subset.end());
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace todorov
