#include "todorov/cover.hpp"

#include <map>
#include <queue>

#include "todorov/error.hpp"

namespace todorov {

std::vector<std::size_t> PlaneBranchCurve::topological_order() const {
  if (degree <= 0 || degree % 2 != 0) throw InputError("branch curve degree must be even and positive, got " + std::to_string(degree));

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].mult < 2) throw InputError("point '" + points[i].id + "' has multiplicity " + std::to_string(points[i].mult));
    if (!index.emplace(points[i].id, i).second) throw InputError("duplicate point id '" + points[i].id + "'");
  }

  std::vector<std::vector<std::size_t>> kids(points.size());
  std::vector<std::size_t> pending(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].parent) continue;
    auto it = index.find(*points[i].parent);
    if (it == index.end()) throw InputError("point '" + points[i].id + "' has unknown parent '" + *points[i].parent + "'");
    kids[it->second].push_back(i);
    pending[i] = 1;
  }

  // Kahn's algorithm; the min-heap keeps input order among ready points.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (pending[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto i = ready.top();
    ready.pop();
    order.push_back(i);
    for (auto c : kids[i])
      if (--pending[c] == 0) ready.push(c);
  }
  if (order.size() != points.size()) throw InputError("parent links of the point forest contain a cycle");
  return order;
}

std::vector<std::size_t> PlaneBranchCurve::children(const std::string& id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].parent && *points[i].parent == id) out.push_back(i);
  return out;
}

ResolutionState canonical_resolution(const PlaneBranchCurve& curve) {
  const auto order = curve.topological_order();
  const std::size_t n = curve.points.size();

  std::vector<std::string> basis{"h"};
  IntMatrix gram(n + 1, std::vector<std::int64_t>(n + 1, 0));
  gram[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    basis.push_back("e_" + curve.points[order[i]].id);
    gram[i + 1][i + 1] = -1;
  }

  ResolutionState st{IntLattice(std::move(basis), std::move(gram), {}, Parity::Any), {}, {}, {}, {}};
  const std::int64_t half_degree = curve.degree / 2;
  st.branch = st.lattice.zero();
  st.branch[0] = 2 * half_degree;
  st.l = st.lattice.zero();
  st.l[0] = half_degree;
  st.k = st.lattice.zero();
  st.k[0] = -3;

  for (std::size_t step = 0; step < n; ++step) {
    const auto& p = curve.points[order[step]];
    const std::size_t e = step + 1;
    const std::int64_t drop = p.mult / 2;
    st.branch[e] -= 2 * drop;
    st.l[e] -= drop;
    st.k[e] += 1;
    st.log.push_back({p.id, p.mult, e, st.lattice.pair(st.l, st.l + st.k), st.lattice.square(st.k)});
  }
  return st;
}

DoublePlaneInvariants double_plane_invariants(const ResolutionState& r) {
  const auto ll = r.lattice.pair(r.l, r.l + r.k);
  if (ll % 2 != 0) throw DomainError("L.(L+K) = " + std::to_string(ll) + " is odd");
  const DivisorClass kl = r.k + r.l;
  return {2 + ll / 2, 2 * r.lattice.square(kl)};
}

bool is_negligible(const PlaneBranchCurve& curve, const std::string& id) {
  const InfinitelyNearPoint* root = nullptr;
  for (const auto& p : curve.points)
    if (p.id == id) root = &p;
  if (!root) throw InputError("unknown point '" + id + "'");
  if (root->mult == 2) return true;
  if (root->mult != 3) return false;
  for (auto c : curve.children(id))
    if (curve.points[c].mult > 2) return false;
  return true;
}

}  // namespace todorov
