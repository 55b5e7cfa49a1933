// Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "todorov/ade.hpp"
#include "todorov/config.hpp"
#include "todorov/cover.hpp"
#include "todorov/descent.hpp"
#include "todorov/examples.hpp"

using namespace todorov;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::vector<std::size_t> all_vertices(const DualGraph& g) {
  std::vector<std::size_t> v(g.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<DynkinType> ade_types_up_to(int rank) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= rank; ++n) out.push_back(DynkinType::a(n));
  for (int n = 4; n <= rank; ++n) out.push_back(DynkinType::d(n));
  for (int n = 6; n <= std::min(rank, 8); ++n) out.push_back(DynkinType::e(n));
  return out;
}

std::string str(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

IntLattice perturbed(const IntLattice& lat, std::size_t i, std::size_t j) {
  IntMatrix g = lat.gram();
  if (i == j) {
    g[i][i] += 2;
  } else {
    g[i][j] += 1;
    g[j][i] += 1;
  }
  return IntLattice(lat.basis(), g);
}

Outcome kummer_family() {
  Outcome o;
  for (int j = 0; j <= 7; ++j) {
    const auto cfg = examples::kummer_config(j);
    const auto report = validate(cfg);
    o.require(report.ok(), "kummer_config(" + std::to_string(j) + ") does not validate");
    if (!report.ok()) continue;
    o.require(invariants(cfg) == SurfaceInvariants{0, 1, 8 - j, 2},
              "kummer_config(" + std::to_string(j) + ") invariants differ from (0, 1, " + std::to_string(8 - j) + ", 2)");
  }
  return o;
}

Outcome kummer_descent() {
  Outcome o;
  const auto run = full_descent(examples::kummer_config(0));
  o.require(run.configurations.size() == 8, "expected 8 configurations, got " + std::to_string(run.configurations.size()));
  for (std::size_t i = 0; i < run.configurations.size(); ++i) {
    const auto& cfg = run.configurations[i];
    const auto& lat = cfg.lattice;
    o.require(validate(cfg).ok(), "configuration " + std::to_string(i) + " fails validation");
    o.require(invariants(cfg).k2 == 8 - static_cast<int>(i), "configuration " + std::to_string(i) + " has the wrong K^2");
    o.require(lat.square(cfg.branch()) == -16, "B^2 != -16 at configuration " + std::to_string(i));
    if (i > 0) {
      const auto& prev = run.configurations[i - 1];
      o.require(lat.square(cfg.bp) == lat.square(prev.bp) - 2, "B'^2 did not drop by 2 at step " + std::to_string(i));
    }
  }
  return o;
}

Outcome parity_markings() {
  Outcome o;
  for (const auto& t : ade_types_up_to(9)) {
    const auto g = dynkin_diagram(t);
    auto fast = even_markings(g, all_vertices(g));
    auto brute = oracle::brute_force_even_markings(g.adjacency);
    std::sort(fast.begin(), fast.end());
    std::sort(brute.begin(), brute.end());
    o.require(fast == brute, t.name() + ": even_markings disagrees with brute-force enumeration");
    const bool expect_nonempty =
        (t.family == DynkinType::Family::A && t.rank % 2 == 1) || t.family == DynkinType::Family::D;
    if (fast.empty() == expect_nonempty) {
      std::string what = t.name() + (expect_nonempty ? ": expected a marking, found none" : ": expected none, found");
      for (const auto& s : fast) what += " " + str(s);
      o.require(false, what);
    }
  }
  return o;
}

Outcome fundamental_cycles() {
  Outcome o;
  for (const auto& t : ade_types_up_to(8)) {
    const auto g = dynkin_diagram(t);
    const auto z = fundamental_cycle(g, all_vertices(g));
    o.require(oracle::cycle_square(g.adjacency, z) == -2, t.name() + ": Z^2 != -2");
    const auto brute = oracle::brute_force_minimal_cycle(g.adjacency, 6);
    o.require(brute.has_value() && brute->unique && brute->z == z, t.name() + ": Z differs from the brute-force minimum");
    if (t.family == DynkinType::Family::D) {
      std::vector<int> expected(static_cast<std::size_t>(t.rank), 2);
      expected[0] = expected[1] = expected.back() = 1;
      o.require(z == expected, t.name() + ": multiplicities are not 1 1 2 .. 2 1");
    }
  }
  return o;
}

Outcome classifier_soundness() {
  Outcome o;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    // one graph object per size; only its adjacency changes
    DualGraph g = DualGraph::from_adjacency(oracle::Adjacency(n, std::vector<int>(n, 0)));
    const auto vertices = all_vertices(g);
    std::size_t mismatches = 0;
    oracle::for_each_connected_graph(n, [&](const oracle::Adjacency& adj) {
      ++graphs;
      g.adjacency = adj;
      const bool ade = classify(g, vertices).is_ade();
      if (ade != oracle::negative_definite_small(adj)) ++mismatches;
    });
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches on graphs with " + std::to_string(n) + " vertices");
  }
  o.require(graphs == 1 + 1 + 4 + 38 + 728 + 26704 + 1866256, "unexpected number of labelled connected graphs: " + std::to_string(graphs));
  return o;
}

Outcome terminal_state() {
  Outcome o;
  for (const auto& [name, cfg] : std::vector<std::pair<std::string, BranchConfiguration>>{
           {"a17", examples::a17_config()}, {"kummer(0)", examples::kummer_config(0)}}) {
    const auto last = full_descent(cfg).configurations.back();
    o.require(last.t() == 9, name + " terminates with t = " + std::to_string(last.t()));
    o.require(last.lattice.square(last.bp) == 2, name + " terminates with B'^2 = " + std::to_string(last.lattice.square(last.bp)));
  }
  const auto kunev = examples::kunev_config();
  const auto c = cubic_splitting_certificate(kunev, 3 * kunev.bp);
  o.require(c.found, "no J with 2J = pullback - sum A_i");
  o.require(c.j_dot_a.size() == 9, "expected nine J.A_i values");
  for (std::size_t i = 0; i < c.j_dot_a.size(); ++i)
    o.require(c.j_dot_a[i] == Rational(1), "J.A_" + std::to_string(i + 1) + " != 1");
  return o;
}

Outcome section_four_examples() {
  Outcome o;
  const auto two = examples::non_kummer_config(examples::NonKummerVariant::Two);
  const auto three = examples::non_kummer_config(examples::NonKummerVariant::Three);
  const auto a17 = examples::a17_config();
  o.require(validate(two).ok() && invariants(two).k2 == 2, "non-Kummer variant two: not valid with K^2 = 2");
  o.require(validate(three).ok() && invariants(three).k2 == 3, "non-Kummer variant three: not valid with K^2 = 3");
  o.require(validate(a17).ok() && invariants(a17).k2 == 2, "a17: not valid with K^2 = 2");
  o.require(examples::xi_census(a17) == std::map<std::string, int>{{"A17", 1}, {"A1", 1}}, "a17: xi census is not {A17, A1}");
  return o;
}

Outcome double_planes() {
  Outcome o;
  const auto sextic = double_plane_invariants(canonical_resolution(examples::smooth_plane_curve(6)));
  o.require(sextic == DoublePlaneInvariants{2, 0}, "smooth sextic: expected chi = 2, K_V^2 = 0");

  const auto cubics = examples::two_cubics_curve();
  const auto r = canonical_resolution(cubics);
  o.require(double_plane_invariants(r).chi == 2, "two cubics: chi != 2");
  std::int64_t previous = 0;  // L(L+K) of the smooth sextic
  for (const auto& rec : r.log) {
    o.require(is_negligible(cubics, rec.point), rec.point + " is not negligible");
    o.require(rec.l_dot_l_plus_k == previous, rec.point + " changes L(L+K)");
    previous = rec.l_dot_l_plus_k;
  }

  const auto a17 = double_plane_invariants(canonical_resolution(examples::a17_plane_curve()));
  o.require(a17.chi == 2, "9-point chain plus 2 nodes: chi != 2");
  return o;
}

Outcome saint_donat() {
  Outcome o;
  for (auto tag : {SDTag::ConeOverQuartic, SDTag::ConeOverCubic, SDTag::QuadricConeA, SDTag::QuadricConeB}) {
    const auto f = examples::saint_donat_fixture(tag);
    o.require(verify_sd_case(f.lattice, f.d, f.sd), "case " + to_string(tag) + " fixture does not verify");
    for (std::size_t i = 0; i < f.lattice.rank(); ++i)
      for (std::size_t j = i; j < f.lattice.rank(); ++j)
        if (verify_sd_case(perturbed(f.lattice, i, j), f.d, f.sd))
          o.require(false, "case " + to_string(tag) + " survives perturbing pairing (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
  }
  {
    const auto f = examples::saint_donat_fixture(SDTag::ConeOverQuartic);
    IntMatrix g = f.lattice.gram();
    g[0][1] = g[1][0] = 2;
    o.require(!verify_sd_case(IntLattice(f.lattice.basis(), g), f.d, f.sd), "case i with E.G = 2 verifies");
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto f = examples::saint_donat_fixture(SDTag::QuadricConeB, n);
    BranchConfiguration cfg;
    cfg.lattice = f.lattice;
    cfg.bp = f.d;
    const auto ex = sd_exclusions(cfg, f.sd);
    std::vector<std::size_t> excluded;
    for (const auto& e : ex)
      if (e.witness && e.witness_pairing % 2 != 0) excluded.push_back(e.gamma);
    std::vector<std::size_t> expected(n + 1);
    std::iota(expected.begin(), expected.end(), 0);
    o.require(excluded == expected, "N = " + std::to_string(n) + ": excluded " + str(excluded));
    // the end curves G(N+1), G(N+2) keep every probe even
    const auto branch = f.d + f.sd.gammas[n + 1] + f.sd.gammas[n + 2];
    bool even = f.lattice.pair(branch, f.sd.e) % 2 == 0;
    for (const auto& g : f.sd.gammas) even = even && f.lattice.pair(branch, g) % 2 == 0;
    o.require(even, "N = " + std::to_string(n) + ": an end curve is obstructed");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Kummer family validates with K^2 = 8 - j", kummer_family},
      {"2 descent from K^2 = 8 through 1", kummer_descent},
      {"3 parity markings for ADE rank <= 9", parity_markings},
      {"4 fundamental cycles for ADE rank <= 8", fundamental_cycles},
      {"5 classifier vs negative definiteness, connected graphs <= 7 vertices", classifier_soundness},
      {"6 terminal state t = 9, B'^2 = 2 and the cubic splitting", terminal_state},
      {"7 non-Kummer and A17 examples", section_four_examples},
      {"8 double-plane calculator", double_planes},
      {"9 Saint-Donat verifier and exclusions", saint_donat},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << ms << " ms)\n";
    for (const auto& note : o.notes) std::cout << "     " << note << '\n';
    failed += !o.pass;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
