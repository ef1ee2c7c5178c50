#ifndef SURFACE_ISING_TEST_HELPERS_HPP
#define SURFACE_ISING_TEST_HELPERS_HPP

#include <map>
#include <random>
#include <vector>

#include "surface_ising/embedding.hpp"
#include "surface_ising/generators.hpp"
#include "surface_ising/orientation.hpp"
#include "surface_ising/terminal.hpp"

namespace surface_ising::testing {

inline const Weight kX = Weight::named("x");
inline const Weight kY = Weight::named("y");

/// Planar graph from edge endpoint pairs; each rotation lists half-edges in edge order,
/// which is a valid clockwise order for degree <= 2 and for stars.
inline EmbeddedGraph planar_from_edges(int vertices, const std::vector<std::pair<int, int>>& ends,
                                       const std::vector<Weight>& weights = {}) {
  EmbeddedGraph g;
  g.signature = {SurfaceKind::Orientable, 0};
  for (int v = 0; v < vertices; ++v) g.vertices.push_back({v, {}});
  for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
    const Weight w = weights.empty() ? Weight::named("w" + std::to_string(e)) : weights[static_cast<std::size_t>(e)];
    g.edges.push_back({e, 2 * e, 2 * e + 1, w, {}});
    g.vertices[static_cast<std::size_t>(ends[static_cast<std::size_t>(e)].first)].rotation.push_back(2 * e);
    g.vertices[static_cast<std::size_t>(ends[static_cast<std::size_t>(e)].second)].rotation.push_back(2 * e + 1);
  }
  return g;
}

inline EmbeddedGraph single_edge() { return planar_from_edges(2, {{0, 1}}, {kX}); }
inline EmbeddedGraph path2() { return planar_from_edges(3, {{0, 1}, {1, 2}}, {kX, kY}); }
inline EmbeddedGraph triangle() { return planar_from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }
/// Star with k leaves; the centre is vertex 0 with terminal labels 1..k.
inline EmbeddedGraph star(int k) {
  std::vector<std::pair<int, int>> ends;
  for (int i = 1; i <= k; ++i) ends.emplace_back(0, i);
  return planar_from_edges(k + 1, ends);
}

/// Loop at one vertex passing side a_1 and then b_1 (class a_1 + b_1).
inline EmbeddedGraph diagonal_loop() {
  EmbeddedGraph g;
  g.signature = {SurfaceKind::Orientable, 1};
  g.vertices = {{0, {0, 1}}};
  g.edges = {{0, 0, 1, kX, {{0, 0}, {1, 1}}}};
  g.perimeter = {{0}, {1}, {2}, {3}};
  return g;
}

inline std::vector<EmbeddedGraph> named_instances() {
  return {torus_lattice(1, 1, kX, kY), klein_lattice(1, 1, kX, kY), rp2_wheel(1, 2, kX, kY), torus_lattice(1, 2, kX, kY),
          klein_lattice(2, 1, kX, kY), klein_lattice(1, 2, kX, kY), planar_grid(2, 2, kX, kY), triangle(), path2()};
}

/// Copy of g with only the marked edges; edges and half-edges are renumbered densely.
inline EmbeddedGraph without_edges(const EmbeddedGraph& g, const std::vector<bool>& keep) {
  EmbeddedGraph out = g;
  out.edges.clear();
  std::map<int, int> half;
  for (const Edge& e : g.edges) {
    if (!keep[static_cast<std::size_t>(e.id)]) continue;
    Edge f = e;
    f.id = static_cast<int>(out.edges.size());
    f.u = 2 * f.id;
    f.v = 2 * f.id + 1;
    half[e.u] = f.u;
    half[e.v] = f.v;
    out.edges.push_back(f);
  }
  for (auto& v : out.vertices) {
    std::vector<int> rot;
    for (int h : v.rotation) {
      if (half.count(h)) rot.push_back(half[h]);
    }
    v.rotation = rot;
  }
  out.outer_face.reset();
  return out;
}

/// Random instances of every signature with at most max_terminals terminals after normalizing.
inline std::vector<EmbeddedGraph> small_random(int per_signature, int max_terminals, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EmbeddedGraph> out;
  const SurfaceSignature sigs[] = {{SurfaceKind::Orientable, 1}, {SurfaceKind::KleinSum, 0}, {SurfaceKind::ProjectiveSum, 0},
                                   {SurfaceKind::Orientable, 0}, {SurfaceKind::ProjectiveSum, 1}};
  for (const auto& sig : sigs) {
    int found = 0;
    for (int attempt = 0; found < per_signature && attempt < 50 * per_signature; ++attempt) {
      RandomSpec spec;
      spec.signature = sig;
      spec.vertices = 3 + attempt % 2;
      spec.inside_edges = 2 + attempt % 2;
      spec.outside_edges = sig.b1() == 0 ? 0 : 1 + attempt % 2;
      spec.numeric_weights = attempt % 3 == 0;
      EmbeddedGraph g = normalize(random_instance(spec, rng));
      if (2 * static_cast<int>(g.edges.size()) > max_terminals || !is_connected(g)) continue;
      out.push_back(g);
      ++found;
    }
  }
  return out;
}

/// Cycles of the symmetric difference of two perfect matchings, as closed walks.
inline std::vector<std::vector<Step>> alternating_cycles(const TerminalGraph& gt, const std::vector<int>& d,
                                                         const std::vector<int>& d0) {
  const int n = gt.terminal_count();
  std::vector<int> in_d(static_cast<std::size_t>(n), -1);
  std::vector<int> in_d0(static_cast<std::size_t>(n), -1);
  for (int e : d) in_d[static_cast<std::size_t>(gt.edge(e).a)] = in_d[static_cast<std::size_t>(gt.edge(e).b)] = e;
  for (int e : d0) in_d0[static_cast<std::size_t>(gt.edge(e).a)] = in_d0[static_cast<std::size_t>(gt.edge(e).b)] = e;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<Step>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)] || in_d[static_cast<std::size_t>(start)] == in_d0[static_cast<std::size_t>(start)]) continue;
    std::vector<Step> cycle;
    int x = start;
    bool use_d = true;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      const int e = use_d ? in_d[static_cast<std::size_t>(x)] : in_d0[static_cast<std::size_t>(x)];
      const TerminalEdge& te = gt.edge(e);
      cycle.push_back({e, te.a == x});
      x = te.a == x ? te.b : te.a;
      use_d = !use_d;
    } while (x != start || !use_d);
    out.push_back(cycle);
  }
  return out;
}

/// True when consecutive steps share a terminal and the walk closes.
inline bool is_closed_walk(const TerminalGraph& gt, const FaceCycle& c) {
  if (c.steps.empty()) return false;
  auto head = [&gt](const Step& s) { return s.along ? gt.edge(s.edge).b : gt.edge(s.edge).a; };
  auto tail = [&gt](const Step& s) { return s.along ? gt.edge(s.edge).a : gt.edge(s.edge).b; };
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    if (head(c.steps[i]) != tail(c.steps[(i + 1) % c.steps.size()])) return false;
  }
  return true;
}

}  // namespace surface_ising::testing

#endif  // SURFACE_ISING_TEST_HELPERS_HPP
